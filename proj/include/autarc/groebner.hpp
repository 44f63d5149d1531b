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

#include <span>
#include <vector>

#include "autarc/order.hpp"
#include "autarc/poly.hpp"

namespace autarc {

// Largest term of a nonzero polynomial under `order`.
const Term& leading_term(const Polynomial& f, const MonomialOrder& order);

// S-polynomial: the combination that cancels both leading terms.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

// Remainder of `f` on division by `basis`: no term of the result is
// divisible by any leading monomial of the basis.  When `basis` is a
// Groebner basis this is the unique normal form.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order);

// Reduced Groebner basis of the ideal generated by `gens`.  Coefficients
// must lie in a field.  Pairs are processed smallest lcm degree first and
// pruned with the coprimality and chain criteria.  The result is
// interreduced, monic, and sorted by ascending leading monomial.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   const MonomialOrder& order);

// True when the quotient by the ideal is finite dimensional: every
// variable appears as a pure power among the leading monomials.
bool is_zero_dimensional(std::span<const Polynomial> gb,
                         const MonomialOrder& order);

// Monomials outside the leading-term ideal, sorted ascending by `order`.
// Throws NotZeroDimensional when the quotient is infinite dimensional.
std::vector<Monomial> standard_monomials(std::span<const Polynomial> gb,
                                         const MonomialOrder& order);

}  // namespace autarc

