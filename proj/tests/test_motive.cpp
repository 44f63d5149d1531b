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
#include "autarc/motive.hpp"

using namespace autarc;

namespace {
const MotivicClass L = MotivicClass::lefschetz();
}

TEST_CASE("construction and printing") {
  CHECK(MotivicClass::zero().is_zero());
  CHECK(MotivicClass::one().to_string() == "1");
  CHECK(MotivicClass::lefschetz(3).to_string() == "L^3");
  CHECK(MotivicClass::lefschetz(-1).to_string() == "L^-1");
  CHECK((L - MotivicClass::one()).to_string() == "L - 1");
  CHECK((MotivicClass::from_int(2) * L.pow(7) - L.pow(6)).to_string() ==
        "2*L^7 - L^6");
}

TEST_CASE("parse inverts printing") {
  for (const std::string text :
       {"1", "L", "L^3", "2*L^7 - L^6", "L^-1 + 2*L", "-L + 7", "0"}) {
    const MotivicClass c = MotivicClass::parse(text);
    CHECK(MotivicClass::parse(c.to_string()) == c);
  }
  CHECK(MotivicClass::parse("L^2 + L^2") == L.pow(4).shifted(-2).pow(1) +
                                                MotivicClass::lefschetz(2));
  CHECK_THROWS_AS(MotivicClass::parse("q"), ParseError);
  CHECK_THROWS_AS(MotivicClass::parse("L^"), ParseError);
}

TEST_CASE("ring arithmetic") {
  // (L - 1)(L + 1) = L^2 - 1.
  const MotivicClass one = MotivicClass::one();
  CHECK((L - one) * (L + one) == L.pow(2) - one);
  CHECK(L.pow(0) == one);
  CHECK(L.shifted(-1) == MotivicClass::lefschetz(0));
  CHECK(MotivicClass::lefschetz(-2) * MotivicClass::lefschetz(5) ==
        MotivicClass::lefschetz(3));
  CHECK((-(L - one)) + L == one);
}

TEST_CASE("exponent ranges and polynomial detection") {
  const MotivicClass c = MotivicClass::parse("L^3 + L^-2");
  CHECK(c.max_power() == 3);
  CHECK(c.min_power() == -2);
  CHECK_FALSE(c.is_polynomial());
  CHECK(MotivicClass::parse("2*L^7 - L^6").is_polynomial());
  CHECK(MotivicClass::zero().is_polynomial());
  CHECK(c.coefficient(3) == 1);
  CHECK(c.coefficient(0) == 0);
}

TEST_CASE("evaluation recovers point counts") {
  // 2L^7 - L^6 at q = 2 is 192... computed by hand: 2*128 - 64 = 192.
  CHECK(MotivicClass::parse("2*L^7 - L^6").evaluate_at(Rat(2)) == 192);
  CHECK(MotivicClass::parse("L^-1").evaluate_at(Rat(2)) == Rat(1, 2));
  CHECK(MotivicClass::parse("L^2 - L").evaluate_at(Rat(5)) == 20);
}

TEST_CASE("general linear classes") {
  // prod_{i<d} (L^d - L^i); for d = 2: (L^2 - 1)(L^2 - L).
  const MotivicClass gl1 = MotivicClass::general_linear(1);
  CHECK(gl1 == L - MotivicClass::one());
  const MotivicClass gl2 = MotivicClass::general_linear(2);
  CHECK(gl2 == (L.pow(2) - MotivicClass::one()) * (L.pow(2) - L));
  CHECK(gl2.evaluate_at(Rat(2)) == 6);    // #GL_2(F_2)
  CHECK(gl2.evaluate_at(Rat(3)) == 48);   // (9-1)(9-3)
  CHECK(MotivicClass::general_linear(0) == MotivicClass::one());
}

TEST_CASE("latex rendering") {
  const std::string tex = MotivicClass::parse("2*L^7 - L^-1").to_latex();
  CHECK(tex.find("\\mathbb{L}") != std::string::npos);
  CHECK(tex.find("^{7}") != std::string::npos);
  CHECK(tex.find("^{-1}") != std::string::npos);
}
