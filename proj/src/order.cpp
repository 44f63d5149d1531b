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
#include "autarc/order.hpp"

#include <numeric>

#include "autarc/errors.hpp"

namespace autarc {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {}

MonomialOrder MonomialOrder::make_grevlex(std::size_t nvars) {
  std::vector<std::size_t> pri(nvars);
  std::iota(pri.begin(), pri.end(), 0u);
  return MonomialOrder(OrderKind::grevlex, std::move(pri));
}

MonomialOrder MonomialOrder::make_lex(std::size_t nvars) {
  std::vector<std::size_t> pri(nvars);
  std::iota(pri.begin(), pri.end(), 0u);
  return MonomialOrder(OrderKind::lex, std::move(pri));
}

MonomialOrder MonomialOrder::with_priority(
    std::vector<std::size_t> priority) const {
  if (priority.size() != priority_.size())
    throw Error("order priority must be a permutation of the variables");
  std::vector<bool> seen(priority.size(), false);
  for (std::size_t p : priority) {
    if (p >= priority.size() || seen[p])
      throw Error("order priority must be a permutation of the variables");
    seen[p] = true;
  }
  return MonomialOrder(kind_, std::move(priority));
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  if (kind_ == OrderKind::grevlex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t k = priority_.size(); k-- > 0;) {
      const std::size_t i = priority_[k];
      if (ea[i] != eb[i]) return ea[i] > eb[i];
    }
    return false;
  }
  // lex
  for (std::size_t k = 0; k < priority_.size(); ++k) {
    const std::size_t i = priority_[k];
    if (ea[i] != eb[i]) return ea[i] < eb[i];
  }
  return false;
}

bool MonomialOrder::is_canonical() const {
  if (kind_ != OrderKind::grevlex) return false;
  for (std::size_t k = 0; k < priority_.size(); ++k) {
    if (priority_[k] != k) return false;
  }
  return true;
}

std::string MonomialOrder::describe() const {
  std::string out = kind_ == OrderKind::grevlex ? "grevlex" : "lex";
  if (!is_canonical() && kind_ == OrderKind::grevlex) out += "(permuted)";
  return out;
}

}  // namespace autarc
