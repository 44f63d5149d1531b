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

#include <map>
#include <memory>
#include <string>

#include "autarc/artin.hpp"
#include "autarc/motive.hpp"
#include "autarc/poly.hpp"

namespace autarc {

// A fat point: the spectrum of an Artinian local algebra, tagged with
// its position in a one-parameter family of thickenings.
struct FatPoint {
  std::shared_ptr<const ArtinAlgebra> algebra;
  unsigned level = 0;   // index i in the family of truncations
  std::string origin;   // human-readable construction tag

  std::size_t rank() const { return algebra->rank(); }
};

// Truncation of a plane-curve germ through the origin:
// Q[x,y] / ((f) + (x,y)^{level+1}).  Throws when f(0,0) != 0.
FatPoint germ_truncation(const Polynomial& f, unsigned level);

// The monomial fat point k[x_1..x_d]/(x_1..x_d)^n (variable named "x"
// when d = 1).  Rank is binomial(n-1+d, d); level is n-1.
FatPoint monomial_fatpoint(unsigned d, unsigned n);

// Closed-form classes of the endomorphism and automorphism spaces of
// the monomial fat point: with r = d*(rank-1), the endomorphism space
// is affine r-space and the automorphism space is GL_d x affine
// (r - d^2)-space.  For n = 1 both spaces are a point.
struct MonomialClosedForms {
  MotivicClass end_class;
  MotivicClass aut_class;
};
MonomialClosedForms monomial_closed_forms(unsigned d, unsigned n);

// Shift coordinates so that `point` moves to the origin:
// x_i |-> x_i + point[i].  Used to center a germ before truncating.
Polynomial translated(const Polynomial& f, std::span<const Rat> point);

// A family of fat points X_0 c= X_1 c= ... sharing one underlying
// point: either the m-adic truncations of a plane-curve germ or the
// thickenings of the origin in affine d-space.  Levels are produced
// lazily and cached.
class AdmissibleSystem {
 public:
  // Truncations of the germ of f at the origin; f(0,0) must vanish.
  static AdmissibleSystem germ(Polynomial f);
  // X_i = k[x_1..x_d]/m^{i+1}.
  static AdmissibleSystem monomial(unsigned d);

  const FatPoint& level(unsigned i) const;
  std::string describe() const;

  // Checks the chain property up to the given level: the quotient
  // basis of each level is contained in the next level's basis.
  bool transitions_nested(unsigned up_to) const;

 private:
  AdmissibleSystem() = default;
  std::optional<Polynomial> germ_poly_;
  unsigned monomial_dim_ = 0;
  mutable std::map<unsigned, FatPoint> cache_;
};

}  // namespace autarc
