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
#include <span>
#include <string>
#include <vector>

#include "autarc/artin.hpp"
#include "autarc/poly.hpp"

namespace autarc {

// Where a presentation variable comes from: the coefficient of basis
// monomial `basis_monomial` in the image of `generator`, or an
// auxiliary variable (determinant inverse).
struct VariableInfo {
  std::string name;
  std::string role;            // "coefficient" or "aux"
  std::string generator;       // source generator/coordinate, "" for aux
  std::string basis_monomial;  // printed basis monomial, "" for aux
  int generator_index = -1;
  int basis_index = -1;
};

// An affine scheme of algebra maps, presented by polynomial equations
// over Q in coefficient variables.  Counting its F_q points realizes
// the class of the underlying reduced scheme.
struct SchemePresentation {
  VarsPtr variables;                  // ordered identifiers
  std::vector<VariableInfo> info;     // parallel to variables
  std::vector<Polynomial> equations;  // over Q in `variables`
  std::string construction;           // "endo" | "aut" | "hom" | "jet" | "product"
  std::string source;                 // description of the source objects

  std::size_t nvars() const { return variables->size(); }
};

// Equations for a self-map of B: one coefficient variable per
// (generator, basis monomial), one equation per (ideal generator,
// basis monomial) coefficient of the substituted normal form.
// Variables are ordered constant coefficients first, then the
// degree-one block, then the rest; generator-major inside each block.
// F_q solutions biject with algebra endomorphisms of B (x) F_q.
SchemePresentation endo_presentation(const ArtinAlgebra& B);

// Endomorphisms with invertible linear part: the endomorphism system
// plus one auxiliary variable z and the equation z*det(M) - 1, where M
// collects the degree-one coefficients.  Throws UnsupportedEmbedding
// when some generator is missing from the quotient basis in degree one.
SchemePresentation aut_presentation(const ArtinAlgebra& B);

// Equations for maps Spec B -> V(target equations): coefficient
// variables c_{coord, basis monomial}; F_q solutions biject with
// B (x) F_q valued points of the target.
SchemePresentation hom_presentation(const ArtinAlgebra& B,
                                    const VarsPtr& target_coords,
                                    std::span<const Polynomial> target_eqs);

// The order-m jet space of the hypersurface f = 0: maps from
// Spec Q[t]/(t^{m+1}).  Same equations as hom_presentation with the
// coefficient of t^k in coordinate v named "v<k>".
SchemePresentation jet_presentation(const Polynomial& f, unsigned m);

// Product of the map space into the target and the self-map space of
// B, on disjoint variables: the truncated auto-arc space of the
// trivially deformed target.
SchemePresentation trivial_deformation_autoarc(
    const ArtinAlgebra& B, const VarsPtr& target_coords,
    std::span<const Polynomial> target_eqs);

// A concrete endomorphism of B (x) F_q: per-generator images as
// coordinate vectors over the quotient basis, entries in [0, q).
struct EndoPoint {
  std::uint64_t q = 0;
  std::vector<std::vector<Rat>> images;  // [generator][basis index]
};

// The identity self-map: each generator maps to itself.
EndoPoint identity_endo(const ArtinAlgebra& B, std::uint64_t q);

// Does the assignment satisfy every ideal generator of B?
bool satisfies_endo(const ArtinAlgebra& B, const EndoPoint& point);

// Composite self-map: generator g maps to the e1-image of g with every
// variable replaced by its e2-image.  Throws when either input is not
// an endomorphism or the fields differ.
EndoPoint compose_endos(const ArtinAlgebra& B, const EndoPoint& e1,
                        const EndoPoint& e2);

// Reads an endomorphism off a solution of endo_presentation(B): values
// are per-variable assignments in the presentation's variable order.
EndoPoint endo_point_from_assignment(const SchemePresentation& pres,
                                     const ArtinAlgebra& B,
                                     std::span<const std::uint64_t> values,
                                     std::uint64_t q);

}  // namespace autarc
