/* Copyright 2026 The autarc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace autarc {

// Exact coefficient arithmetic everywhere; no fixed-width overflow paths.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

bool is_prime(std::uint64_t n);

/// Multiplicative inverse of a mod p; requires gcd(a, p) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

/// Residue of an exact rational in [0, p); requires p prime and p not
/// dividing the denominator.
std::uint64_t residue_mod(const Rat& c, std::uint64_t p);

/// The first `count` primes, ascending.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// Exact binomial coefficient n choose k.
Int binomial(unsigned n, unsigned k);

}  // namespace autarc
