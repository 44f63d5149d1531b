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

#include <optional>

#include "autarc/errors.hpp"
#include "autarc/poly.hpp"

using namespace autarc;

namespace {
const Domain Q = Domain::rationals();
Polynomial P(const std::string& text,
             const VarsPtr& vars = make_vars({"x", "y"}),
             Domain domain = Q) {
  return parse_polynomial(text, domain, vars);
}
}  // namespace

TEST_CASE("monomial arithmetic") {
  const Monomial x2y(std::vector<unsigned>{2, 1});
  const Monomial xy2(std::vector<unsigned>{1, 2});
  CHECK((x2y * xy2).exponents() == std::vector<unsigned>{3, 3});
  CHECK(Monomial::lcm(x2y, xy2).exponents() == std::vector<unsigned>{2, 2});
  CHECK(Monomial::variable(2, 0, 2).divides(x2y));
  CHECK_FALSE(xy2.divides(x2y));
  CHECK(x2y.divided_by(Monomial::variable(2, 0)).exponents() ==
        std::vector<unsigned>{1, 1});
  CHECK(x2y.degree() == 3);
  CHECK(Monomial::one(2).is_one());
  CHECK(x2y.to_string({"x", "y"}) == "x^2*y");
  CHECK(Monomial::one(2).to_string({"x", "y"}) == "1");
}

TEST_CASE("graded reverse lexicographic comparisons") {
  const auto m = [](unsigned a, unsigned b) {
    return Monomial(std::vector<unsigned>{a, b});
  };
  // Degree decides first; ties break by less of the last variable.
  CHECK(grevlex_less(m(0, 0), m(0, 1)));
  CHECK(grevlex_less(m(0, 1), m(1, 0)));   // y < x
  CHECK(grevlex_less(m(1, 1), m(2, 0)));   // xy < x^2
  CHECK(grevlex_less(m(0, 2), m(1, 1)));   // y^2 < xy
  CHECK_FALSE(grevlex_less(m(2, 0), m(0, 2)));
  CHECK_FALSE(grevlex_less(m(1, 0), m(1, 0)));
}

TEST_CASE("parser round trips through canonical printing") {
  for (const std::string text :
       {"x^2*y - 3*y + 1/2", "-x + y", "x^3 - 2*x*y + 7", "0", "-1/3"}) {
    const Polynomial f = P(text);
    CHECK(P(f.to_string()) == f);
  }
  CHECK(P("x^2*y - 3*y + 1/2").to_string() == "x^2*y - 3*y + 1/2");
  CHECK(P("y + x").to_string() == "x + y");  // canonical term order
  CHECK(P("(x + y)^2").to_string() == "x^2 + 2*x*y + y^2");
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(P("2x"), ParseError);        // implicit multiplication
  CHECK_THROWS_AS(P("x + z"), ParseError);     // unknown identifier
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("x^-1"), ParseError);      // negative exponent
  CHECK_THROWS_AS(P("(x"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
}

TEST_CASE("polynomial arithmetic identities") {
  const Polynomial x = P("x"), y = P("y");
  CHECK((x + y) * (x - y) == P("x^2 - y^2"));
  CHECK((x + y).pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  CHECK(x - x == P("0"));
  CHECK((-(x - y)) == P("y - x"));
  CHECK(P("x^2 + y").scaled(Rat(1, 2)) == P("1/2*x^2 + 1/2*y"));
  CHECK(P("x*y").times_monomial(Monomial::variable(2, 1), 3) == P("3*x*y^2"));
  CHECK(P("x^2*y").degree() == 3);
  CHECK(P("5").is_constant());
  CHECK(P("0").degree() == -1);
  CHECK(P("x^2 + y").uses_variable(0));
  CHECK_FALSE(P("y^3").uses_variable(0));
}

TEST_CASE("substitution is a ring homomorphism") {
  const VarsPtr xy = make_vars({"x", "y"});
  const Polynomial f = P("x^2 + y");
  std::vector<std::optional<Polynomial>> images = {P("y"), P("1")};
  CHECK(f.substitute(images) == P("y^2 + 1"));
  // Substituting into a product equals the product of substitutions.
  const Polynomial g = P("x - y"), h = P("x*y + 1");
  CHECK((g * h).substitute(images) ==
        g.substitute(images) * h.substitute(images));
}

TEST_CASE("coefficient reduction to a prime field") {
  const Polynomial f = P("2*x + 3");
  const Polynomial f2 = f.reduce_mod(2);
  CHECK(f2.domain() == Domain::prime_field(2));
  CHECK(f2.to_string() == "1");
  CHECK(P("x^2 - y").reduce_mod(3).to_string() == "x^2 + 2*y");
}

TEST_CASE("evaluation") {
  const Polynomial f = P("x^2*y - 3*y + 1/2");
  const std::vector<Rat> at = {Rat(2), Rat(3)};
  CHECK(f.evaluate(at) == Rat(2 * 2 * 3 - 3 * 3) + Rat(1, 2));
}

TEST_CASE("domain normalization and inversion") {
  CHECK(Domain::prime_field(7).normalize(Rat(10)) == 3);
  CHECK(Domain::prime_field(7).normalize(Rat(1, 2)) == 4);
  CHECK(Domain::prime_field(7).invert(Rat(3)) == 5);
  CHECK_THROWS_AS(Domain::integers().normalize(Rat(1, 2)), Error);
  CHECK_THROWS_AS(Domain::prime_field(7).normalize(Rat(1, 7)), Error);
  CHECK_THROWS_AS(Domain::prime_field(6), Error);  // not a prime
  CHECK(Domain::rationals().is_field());
  CHECK_FALSE(Domain::integers().is_field());
}

TEST_CASE("integer polynomials embed into the rationals") {
  const VarsPtr xy = make_vars({"x", "y"});
  const Polynomial over_z = parse_polynomial("x^2 - 3*y", Domain::integers(), xy);
  const Polynomial over_q = over_z.with_domain(Q);
  CHECK(over_q.domain() == Q);
  CHECK(over_q == P("x^2 - 3*y"));
}

TEST_CASE("variable lists must match for arithmetic") {
  const Polynomial in_xy = P("x");
  const Polynomial in_x = P("x", make_vars({"x"}));
  CHECK_THROWS_AS(in_xy + in_x, Error);
}
