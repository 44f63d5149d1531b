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

#include "autarc/groebner.hpp"
#include "autarc/order.hpp"
#include "autarc/poly.hpp"

namespace autarc {

// A finite-dimensional quotient k[x_1..x_n]/I presented by a reduced
// Groebner basis.  Elements are coordinate vectors over the monomial
// basis (the standard monomials, ascending), and products are read off
// a precomputed multiplication table.
class ArtinAlgebra {
 public:
  // Computes the reduced Groebner basis of `generators` and the quotient
  // basis.  Throws NotZeroDimensional when the quotient is infinite
  // dimensional and Error when the domain is not a field.
  ArtinAlgebra(Domain domain, VarsPtr vars, std::vector<Polynomial> generators,
               MonomialOrder order);

  const Domain& domain() const { return domain_; }
  const VarsPtr& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& groebner() const { return groebner_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  // True when every variable image is nilpotent, i.e. the algebra is
  // local with maximal ideal generated by the variables.
  bool is_local() const;

  // Normal form of `f` against the Groebner basis.
  Polynomial normal_form(const Polynomial& f) const;

  // Coordinates of the residue class of `f` over the quotient basis.
  std::vector<Rat> coordinates(const Polynomial& f) const;

  // The polynomial sum(coords[i] * basis[i]).
  Polynomial from_coordinates(std::span<const Rat> coords) const;

  // Coordinates of basis[i] * basis[j], from the multiplication table.
  std::span<const Rat> product_coords(std::size_t i, std::size_t j) const;

  // Product of two coordinate vectors.
  std::vector<Rat> multiply(std::span<const Rat> u,
                            std::span<const Rat> v) const;

 private:
  Domain domain_;
  VarsPtr vars_;
  MonomialOrder order_;
  std::vector<Polynomial> groebner_;
  std::vector<Monomial> basis_;
  std::vector<std::vector<Rat>> table_;  // rank*rank rows of length rank
};

}  // namespace autarc

