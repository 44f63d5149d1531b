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
#include <map>
#include <string>
#include <string_view>

#include "autarc/numbers.hpp"

namespace autarc {

// An integer Laurent polynomial in the class L of the affine line.
// This is where point counts live after interpolation: evaluating at a
// prime power q recovers the count over the field with q elements.
class MotivicClass {
 public:
  MotivicClass() = default;

  static MotivicClass zero() { return MotivicClass(); }
  static MotivicClass one() { return from_int(1); }
  static MotivicClass from_int(const Int& n);
  // L^k, any integer k.
  static MotivicClass lefschetz(int k = 1);
  // The class of the general linear group: prod_{i<d} (L^d - L^i).
  static MotivicClass general_linear(unsigned d);

  bool is_zero() const { return coeffs_.empty(); }
  // Largest and smallest exponents with nonzero coefficient.
  int max_power() const;
  int min_power() const;
  // True when no negative power of L appears.
  bool is_polynomial() const { return is_zero() || min_power() >= 0; }
  const Int& coefficient(int power) const;
  const std::map<int, Int>& coefficients() const { return coeffs_; }

  MotivicClass operator+(const MotivicClass& o) const;
  MotivicClass operator-() const;
  MotivicClass operator-(const MotivicClass& o) const;
  MotivicClass operator*(const MotivicClass& o) const;
  MotivicClass pow(unsigned e) const;
  // Multiply by L^k.
  MotivicClass shifted(int k) const;
  bool operator==(const MotivicClass& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const MotivicClass& o) const { return !(*this == o); }

  // Substitute L = q.  Negative powers make this a rational number.
  Rat evaluate_at(const Rat& q) const;

  // Canonical form: descending powers, e.g. "2*L^7 - L^6 + 3".
  std::string to_string() const;
  // TeX form with L typeset as \mathbb{L}.
  std::string to_latex() const;

  // Inverse of to_string; accepts any expression in L with integer or
  // negative exponents, e.g. "L^-1 + 2*L".  Throws ParseError.
  static MotivicClass parse(std::string_view text);

 private:
  void set(int power, Int value);
  std::map<int, Int> coeffs_;  // power -> nonzero coefficient
};

}  // namespace autarc

