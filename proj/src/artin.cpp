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
#include "autarc/artin.hpp"

#include <map>

#include "autarc/errors.hpp"

namespace autarc {

ArtinAlgebra::ArtinAlgebra(Domain domain, VarsPtr vars,
                           std::vector<Polynomial> generators,
                           MonomialOrder order)
    : domain_(domain), vars_(std::move(vars)), order_(std::move(order)) {
  if (!domain_.is_field())
    throw Error("quotient algebra needs field coefficients, got " +
                domain_.describe());
  groebner_ = buchberger(std::move(generators), order_);
  basis_ = standard_monomials(groebner_, order_);

  const std::size_t n = rank();
  table_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Polynomial prod = Polynomial::from_monomial(
          domain_, vars_, basis_[i] * basis_[j], 1);
      table_[i * n + j] = coordinates(prod);
      if (j < i) table_[j * n + i] = table_[i * n + j];
    }
  }
}

bool ArtinAlgebra::is_local() const {
  const std::size_t nv = vars_->size();
  for (std::size_t v = 0; v < nv; ++v) {
    Polynomial p =
        normal_form(Polynomial::variable(domain_, vars_, v));
    bool nilpotent = p.is_zero();
    // In a local algebra of rank r the maximal ideal satisfies m^r = 0,
    // so r successive multiplications are enough to detect nilpotency.
    for (std::size_t step = 1; step < rank() && !nilpotent; ++step) {
      p = normal_form(p * Polynomial::variable(domain_, vars_, v));
      nilpotent = p.is_zero();
    }
    if (!nilpotent) return false;
  }
  return true;
}

Polynomial ArtinAlgebra::normal_form(const Polynomial& f) const {
  return autarc::normal_form(f, groebner_, order_);
}

std::vector<Rat> ArtinAlgebra::coordinates(const Polynomial& f) const {
  const Polynomial nf = normal_form(f);
  std::vector<Rat> coords(rank(), Rat(0));
  for (const Term& t : nf.terms()) {
    bool placed = false;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] == t.mono) {
        coords[i] = t.coeff;
        placed = true;
        break;
      }
    }
    if (!placed)
      throw Error("normal form left the quotient basis; inconsistent order");
  }
  return coords;
}

Polynomial ArtinAlgebra::from_coordinates(std::span<const Rat> coords) const {
  if (coords.size() != rank())
    throw Error("coordinate vector has wrong length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) terms.push_back(Term{basis_[i], coords[i]});
  }
  return Polynomial(domain_, vars_, std::move(terms));
}

std::span<const Rat> ArtinAlgebra::product_coords(std::size_t i,
                                                  std::size_t j) const {
  return table_[i * rank() + j];
}

std::vector<Rat> ArtinAlgebra::multiply(std::span<const Rat> u,
                                        std::span<const Rat> v) const {
  if (u.size() != rank() || v.size() != rank())
    throw Error("coordinate vector has wrong length");
  std::vector<Rat> out(rank(), Rat(0));
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (v[j] == 0) continue;
      const Rat uv = u[i] * v[j];
      const auto row = product_coords(i, j);
      for (std::size_t k = 0; k < rank(); ++k) {
        if (row[k] != 0) out[k] += uv * row[k];
      }
    }
  }
  for (Rat& c : out) c = domain_.normalize(c);
  return out;
}

}  // namespace autarc
