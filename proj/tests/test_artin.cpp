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

#include "autarc/artin.hpp"
#include "autarc/errors.hpp"

using namespace autarc;

namespace {
const Domain Q = Domain::rationals();

ArtinAlgebra make(const std::vector<std::string>& names,
                  const std::vector<std::string>& gens) {
  const VarsPtr vars = make_vars(names);
  std::vector<Polynomial> polys;
  for (const std::string& g : gens)
    polys.push_back(parse_polynomial(g, Q, vars));
  return ArtinAlgebra(Q, vars, polys, MonomialOrder::make_grevlex(names.size()));
}
}  // namespace

TEST_CASE("truncated polynomial line") {
  const ArtinAlgebra A = make({"x"}, {"x^3"});
  CHECK(A.rank() == 3);
  REQUIRE(A.basis().size() == 3);
  CHECK(A.basis()[0].is_one());
  CHECK(A.basis()[1] == Monomial(std::vector<unsigned>{1}));
  CHECK(A.basis()[2] == Monomial(std::vector<unsigned>{2}));
  CHECK(A.is_local());

  const Polynomial x = parse_polynomial("x", Q, A.vars());
  CHECK(A.normal_form(x.pow(3)).is_zero());
  CHECK(A.coordinates(x.pow(2) + x) ==
        std::vector<Rat>{0, 1, 1});

  // Multiplication table: x * x = x^2, x * x^2 = 0.
  const auto xx = A.product_coords(1, 1);
  CHECK(std::vector<Rat>(xx.begin(), xx.end()) ==
        std::vector<Rat>{0, 0, 1});
  const auto x3 = A.product_coords(1, 2);
  CHECK(std::vector<Rat>(x3.begin(), x3.end()) ==
        std::vector<Rat>{0, 0, 0});
}

TEST_CASE("coordinates and reconstruction are inverse") {
  const ArtinAlgebra A = make({"x", "y"}, {"x^2 - y", "y^2"});
  CHECK(A.rank() == 4);
  const Polynomial f =
      parse_polynomial("3*x*y - 2*x + 1/2", Q, A.vars());
  const std::vector<Rat> coords = A.coordinates(f);
  CHECK(A.coordinates(A.from_coordinates(coords)) == coords);
  // x^2 reduces to y inside the quotient.
  const Polynomial x = parse_polynomial("x", Q, A.vars());
  const Polynomial y = parse_polynomial("y", Q, A.vars());
  CHECK(A.coordinates(x.pow(2)) == A.coordinates(y));
}

TEST_CASE("coordinate multiplication matches polynomial multiplication") {
  const ArtinAlgebra A = make({"x", "y"}, {"y^2 - x^3", "x^4", "x^3*y",
                                           "x^2*y^2", "x*y^3", "y^4"});
  const Polynomial f = parse_polynomial("x + y", Q, A.vars());
  const Polynomial g = parse_polynomial("x^2 - 2*y", Q, A.vars());
  const std::vector<Rat> via_table =
      A.multiply(A.coordinates(f), A.coordinates(g));
  CHECK(via_table == A.coordinates(f * g));
}

TEST_CASE("locality detection") {
  CHECK(make({"x"}, {"x^5"}).is_local());
  CHECK(make({"x", "y"}, {"x^2", "x*y", "y^2"}).is_local());
  // x^2 = 1 has invertible x: two points, not one fat point.
  CHECK_FALSE(make({"x"}, {"x^2 - 1"}).is_local());
  CHECK_FALSE(make({"x", "y"}, {"x - 1", "y^3"}).is_local());
}

TEST_CASE("non-finite quotients and non-field domains are rejected") {
  const VarsPtr xy = make_vars({"x", "y"});
  const std::vector<Polynomial> open = {
      parse_polynomial("x^2 - y", Q, xy)};
  CHECK_THROWS_AS(
      ArtinAlgebra(Q, xy, open, MonomialOrder::make_grevlex(2)),
      NotZeroDimensional);

  const std::vector<Polynomial> over_z = {
      parse_polynomial("x^2", Domain::integers(), xy),
      parse_polynomial("y", Domain::integers(), xy)};
  CHECK_THROWS_AS(
      ArtinAlgebra(Domain::integers(), xy, over_z,
                   MonomialOrder::make_grevlex(2)),
      Error);
}

TEST_CASE("prime-field quotient") {
  const Domain f3 = Domain::prime_field(3);
  const VarsPtr x = make_vars({"x"});
  const std::vector<Polynomial> gens = {parse_polynomial("x^2", f3, x)};
  const ArtinAlgebra A(f3, x, gens, MonomialOrder::make_grevlex(1));
  CHECK(A.rank() == 2);
  CHECK(A.is_local());
  // 2x * 2x = 4x^2 = x^2 = 0 in the quotient.
  const std::vector<Rat> two_x = {0, 2};
  CHECK(A.multiply(two_x, two_x) == std::vector<Rat>{0, 0});
}
