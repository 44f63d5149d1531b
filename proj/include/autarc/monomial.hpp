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

#include <cstddef>
#include <string>
#include <vector>

namespace autarc {

/// A power product of the ambient variables, stored as one exponent per
/// variable position.
class Monomial {
 public:
  explicit Monomial(std::vector<unsigned> exponents);
  static Monomial one(std::size_t nvars);
  static Monomial variable(std::size_t nvars, std::size_t index,
                           unsigned power = 1);

  const std::vector<unsigned>& exponents() const { return exponents_; }
  unsigned exponent(std::size_t i) const { return exponents_[i]; }
  std::size_t nvars() const { return exponents_.size(); }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Exact quotient other/this is not defined; this computes *this / other
  /// and requires other | *this.
  Monomial divided_by(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const {
    return exponents_ == other.exponents_;
  }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  /// Rendering against a variable name list, e.g. "x^2*y"; "1" for the
  /// empty product.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<unsigned> exponents_;
  unsigned degree_;
};

/// Graded reverse lexicographic comparison in the ambient variable order;
/// the canonical storage and printing order for polynomials.
bool grevlex_less(const Monomial& a, const Monomial& b);

}  // namespace autarc
