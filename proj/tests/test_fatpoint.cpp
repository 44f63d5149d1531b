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
#include <doctest.h>

#include "autarc/errors.hpp"
#include "autarc/fatpoint.hpp"

using namespace autarc;

namespace {
const Domain Q = Domain::rationals();

Polynomial cusp() {
  return parse_polynomial("y^2 - x^3", Q, make_vars({"x", "y"}));
}
}  // namespace

TEST_CASE("monomial fat points have binomial ranks") {
  CHECK(monomial_fatpoint(1, 1).rank() == 1);
  CHECK(monomial_fatpoint(1, 3).rank() == 3);
  CHECK(monomial_fatpoint(2, 2).rank() == 3);   // 1, x1, x2
  CHECK(monomial_fatpoint(2, 3).rank() == 6);   // C(4, 2)
  CHECK(monomial_fatpoint(3, 2).rank() == 4);
  CHECK(monomial_fatpoint(1, 4).level == 3);
  // One variable is named plain "x".
  CHECK(monomial_fatpoint(1, 2).algebra->vars()->at(0) == "x");
  CHECK(monomial_fatpoint(2, 2).algebra->vars()->at(0) == "x1");
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned n = 1; n <= 4; ++n)
      CHECK(Int(monomial_fatpoint(d, n).rank()) == binomial(n - 1 + d, d));
}

TEST_CASE("cusp truncations have odd ranks 2i+1") {
  // Level i quotient: degree <= i monomials with y^2 rewritten to x^3;
  // counted by hand below for the first levels.
  CHECK(germ_truncation(cusp(), 0).rank() == 1);
  CHECK(germ_truncation(cusp(), 1).rank() == 3);   // 1, x, y
  CHECK(germ_truncation(cusp(), 2).rank() == 5);   // + x^2, xy
  CHECK(germ_truncation(cusp(), 3).rank() == 7);   // + x^2 y and one cubic
  CHECK(germ_truncation(cusp(), 4).rank() == 9);
  CHECK(germ_truncation(cusp(), 2).level == 2);
  CHECK(germ_truncation(cusp(), 2).algebra->is_local());
}

TEST_CASE("germs must pass through the origin") {
  const Polynomial off = parse_polynomial("y^2 - x^3 + 1", Q,
                                          make_vars({"x", "y"}));
  CHECK_THROWS_AS(germ_truncation(off, 2), Error);
}

TEST_CASE("monomial closed forms") {
  const auto L = [](int k) { return MotivicClass::lefschetz(k); };
  // One generator: affine space of dimension n-1, units in the linear part.
  for (unsigned n = 2; n <= 4; ++n) {
    const MonomialClosedForms forms = monomial_closed_forms(1, n);
    CHECK(forms.end_class == L(static_cast<int>(n) - 1));
    CHECK(forms.aut_class ==
          (L(1) - MotivicClass::one()) * L(static_cast<int>(n) - 2));
  }
  // n = 1: the algebra is the ground field, both spaces a point.
  CHECK(monomial_closed_forms(1, 1).end_class == MotivicClass::one());
  CHECK(monomial_closed_forms(1, 1).aut_class == MotivicClass::one());
  // Two generators, square-zero: rank 3, r = d(rank-1) = 4.
  const MonomialClosedForms planar = monomial_closed_forms(2, 2);
  CHECK(planar.end_class == L(4));
  CHECK(planar.aut_class == MotivicClass::general_linear(2));
}

TEST_CASE("coordinate translation recenters a germ") {
  const Polynomial f = cusp();
  // (1, 1) lies on the curve; the translate vanishes at the origin.
  const std::vector<Rat> point = {1, 1};
  const Polynomial g = translated(f, point);
  CHECK(g == parse_polynomial("y^2 + 2*y - x^3 - 3*x^2 - 3*x", Q, f.vars()));
  CHECK_NOTHROW(germ_truncation(g, 2));
  // Off-curve center: the translate has a constant term.
  const std::vector<Rat> off = {1, 0};
  CHECK_THROWS_AS(germ_truncation(translated(f, off), 2), Error);
}

TEST_CASE("admissible systems cache and nest their levels") {
  const AdmissibleSystem sys = AdmissibleSystem::germ(cusp());
  const FatPoint& a = sys.level(2);
  const FatPoint& b = sys.level(2);
  CHECK(&a == &b);  // cached
  CHECK(sys.level(0).rank() == 1);
  CHECK(sys.level(3).rank() == 7);
  CHECK(sys.transitions_nested(4));

  const AdmissibleSystem mono = AdmissibleSystem::monomial(2);
  CHECK(mono.level(0).rank() == 1);
  CHECK(mono.level(1).rank() == 3);
  CHECK(mono.level(2).rank() == 6);
  CHECK(mono.transitions_nested(3));
  CHECK_FALSE(sys.describe().empty());
}
