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

#include "autarc/monomial.hpp"

namespace autarc {

enum class OrderKind { grevlex, lex };

/// A multiplicative total order on monomials with 1 minimal. The priority
/// permutation lists variable positions from most to least significant.
class MonomialOrder {
 public:
  static MonomialOrder make_grevlex(std::size_t nvars);
  static MonomialOrder make_lex(std::size_t nvars);
  MonomialOrder with_priority(std::vector<std::size_t> priority) const;

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return priority_.size(); }
  const std::vector<std::size_t>& priority() const { return priority_; }

  bool less(const Monomial& a, const Monomial& b) const;
  bool equal(const Monomial& a, const Monomial& b) const { return a == b; }

  /// True when comparisons coincide with the canonical storage order, in
  /// which case the leading term of a stored polynomial is its first term.
  bool is_canonical() const;

  std::string describe() const;

 private:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority);

  OrderKind kind_;
  std::vector<std::size_t> priority_;
};

}  // namespace autarc
