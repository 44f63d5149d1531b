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
#include "autarc/presentation.hpp"
#include "autarc/zeta.hpp"

using namespace autarc;

namespace {
MotivicClass L(int k = 1) { return MotivicClass::lefschetz(k); }
MotivicClass C(const std::string& text) { return MotivicClass::parse(text); }
}  // namespace

TEST_CASE("series containers know their truncation") {
  const MotivicSeries s = MotivicSeries::zeros(3);
  CHECK(s.coefficients.size() == 4);
  CHECK(s.at(3).is_zero());
  CHECK_THROWS_AS(s.at(4), Error);
}

TEST_CASE("normalization policies damp coefficients") {
  const std::vector<MotivicClass> classes = {C("1"), C("L^4"), C("L^7")};
  // Raw: untouched.
  const MotivicSeries raw = assemble_zeta(classes, NormalizationPolicy::raw());
  CHECK(raw.coefficients == classes);
  // Degree: each class divided by its own leading power.
  const MotivicSeries deg =
      assemble_zeta(classes, NormalizationPolicy::degree());
  CHECK(deg.coefficients ==
        std::vector<MotivicClass>{C("1"), C("1"), C("1")});
  // Explicit sequence: the damping used in the worked example.
  const MotivicSeries ex = assemble_zeta(
      classes, NormalizationPolicy::explicit_seq({1, 3, 5}));
  CHECK(ex.coefficients ==
        std::vector<MotivicClass>{C("L^-1"), C("L"), C("L^2")});
  // Rank-driven damping (dim + e) * (rank - 1) with ranks 1, 3, 5.
  const MotivicSeries pap = assemble_zeta(
      classes, NormalizationPolicy::paper(2, 0), {1, 3, 5});
  CHECK(pap.coefficients ==
        std::vector<MotivicClass>{C("1"), C("1"), C("L^-1")});
}

TEST_CASE("normalization error cases") {
  const std::vector<MotivicClass> classes = {C("1"), MotivicClass::zero()};
  CHECK_THROWS_AS(assemble_zeta(classes, NormalizationPolicy::degree()),
                  Error);
  CHECK_THROWS_AS(
      assemble_zeta(classes, NormalizationPolicy::explicit_seq({0})), Error);
  CHECK_THROWS_AS(assemble_zeta(classes, NormalizationPolicy::paper(1, 1),
                                {1}),
                  Error);
}

TEST_CASE("policy names parse") {
  CHECK(parse_policy_kind("raw") == NormalizationPolicy::Kind::raw);
  CHECK(parse_policy_kind("degree") == NormalizationPolicy::Kind::degree);
  CHECK(parse_policy_kind("explicit") ==
        NormalizationPolicy::Kind::explicit_seq);
  CHECK(parse_policy_kind("paper") == NormalizationPolicy::Kind::paper);
  CHECK_THROWS_AS(parse_policy_kind("unknown"), Error);
}

TEST_CASE("expansion of hand-expanded rational forms") {
  // 1 / (1 - t): all coefficients 1.
  RationalForm geometric;
  geometric.numerator = {C("1")};
  geometric.factors = {DenominatorFactor{0, 1}};
  const MotivicSeries ones = expand_rational(geometric, 5);
  for (unsigned i = 0; i <= 5; ++i) CHECK(ones.at(i) == C("1"));

  // 1 / ((1 - t)(1 - Lt)): coefficient i is 1 + L + ... + L^i.
  RationalForm two;
  two.numerator = {C("1")};
  two.factors = {DenominatorFactor{0, 1}, DenominatorFactor{1, 1}};
  const MotivicSeries sums = expand_rational(two, 4);
  CHECK(sums.at(2) == C("L^2 + L + 1"));
  CHECK(sums.at(4) == C("L^4 + L^3 + L^2 + L + 1"));

  // Additive part shifts low-order coefficients only.
  RationalForm with_poly = geometric;
  with_poly.additive = {C("L^-1"), C("L")};
  const MotivicSeries shifted = expand_rational(with_poly, 3);
  CHECK(shifted.at(0) == C("L^-1 + 1"));
  CHECK(shifted.at(1) == C("L + 1"));
  CHECK(shifted.at(2) == C("1"));
}

TEST_CASE("multiplying by a factor inverts the geometric expansion") {
  RationalForm geometric;
  geometric.numerator = {C("1")};
  geometric.factors = {DenominatorFactor{1, 1}};
  const MotivicSeries series = expand_rational(geometric, 6);
  const MotivicSeries back =
      multiply_by_factor(series, DenominatorFactor{1, 1});
  CHECK(back.at(0) == C("1"));
  for (unsigned i = 1; i <= 6; ++i) CHECK(back.at(i).is_zero());
}

TEST_CASE("factor ordering is by period then exponent") {
  CHECK(factor_before(DenominatorFactor{5, 1}, DenominatorFactor{-3, 2}));
  CHECK(factor_before(DenominatorFactor{0, 2}, DenominatorFactor{1, 2}));
  RationalForm form;
  form.factors = {DenominatorFactor{1, 3}, DenominatorFactor{0, 1}};
  form.sort_factors();
  CHECK(form.factors.front() == DenominatorFactor{0, 1});
}

TEST_CASE("fit recognizes geometric series") {
  MotivicSeries series = MotivicSeries::zeros(8);
  for (unsigned i = 0; i <= 8; ++i)
    series.coefficients[i] = L(static_cast<int>(i));
  const auto form = fit_rational(series, FitBounds{2, 2, 1, 2});
  REQUIRE(form.has_value());
  CHECK(form->factors == std::vector<DenominatorFactor>{{1, 1}});
  CHECK(form->numerator == std::vector<MotivicClass>{C("1")});
  CHECK(expand_rational(*form, 8) == series);
}

TEST_CASE("fit handles negative exponents and periods") {
  // L^-2 / (1 - L^-1 t^2).
  RationalForm source;
  source.numerator = {C("L^-2")};
  source.factors = {DenominatorFactor{-1, 2}};
  const MotivicSeries series = expand_rational(source, 12);
  const auto form = fit_rational(series, FitBounds{4, 3, 2, 6});
  REQUIRE(form.has_value());
  CHECK(expand_rational(*form, 12) == series);
}

TEST_CASE("fit refuses series whose tail is too short to verify") {
  MotivicSeries series = MotivicSeries::zeros(2);
  for (unsigned i = 0; i <= 2; ++i)
    series.coefficients[i] = L(static_cast<int>(i));
  // Any candidate needs truncation >= degree bound + period sum + 2.
  CHECK_FALSE(fit_rational(series, FitBounds{2, 2, 1, 2}).has_value());
}

TEST_CASE("fit reports no match for genuinely non-rational data") {
  MotivicSeries series = MotivicSeries::zeros(10);
  Int factorial = 1;
  for (unsigned i = 0; i <= 10; ++i) {
    factorial *= (i + 1);
    series.coefficients[i] = MotivicClass::from_int(factorial);
  }
  CHECK_FALSE(fit_rational(series, FitBounds{3, 3, 2, 4}).has_value());
}

TEST_CASE("smooth-fiber assembly multiplies the three ingredients") {
  // Coefficient i = y0 * end_i * L^(fiber_dim * (rank_i - 1)).
  const std::vector<MotivicClass> ends = {C("1"), C("L"), C("L^2")};
  const std::vector<std::size_t> ranks = {1, 2, 3};
  const MotivicSeries series = smooth_fiber_series(
      C("L"), 1, ends, ranks, NormalizationPolicy::raw());
  CHECK(series.coefficients ==
        std::vector<MotivicClass>{C("L"), C("L^3"), C("L^5")});
}

TEST_CASE("interpolated classes from actual counting") {
  const SchemePresentation pres =
      endo_presentation(*monomial_fatpoint(1, 3).algebra);
  const MotivicClass cls = interpolated_class(pres, {2, 3, 5, 7});
  CHECK(cls == C("L^2"));
}

TEST_CASE("classical series of a smooth curve is constant") {
  const Polynomial parabola = parse_polynomial(
      "y - x^2", Domain::rationals(), make_vars({"x", "y"}));
  const MotivicSeries series =
      classical_igusa_series(parabola, 1, 1, {2, 3, 5, 7});
  CHECK(series.at(0) == C("L"));
  CHECK(series.at(1) == C("L"));
}

TEST_CASE("series and form rendering") {
  const std::vector<MotivicClass> classes = {C("L^-1"), C("L"), C("L^2")};
  const MotivicSeries series =
      assemble_zeta(classes, NormalizationPolicy::raw());
  CHECK(to_string(series) == "L^-1 + L*t + L^2*t^2 + O(t^3)");
  CHECK(to_latex(series).find("\\mathbb{L}") != std::string::npos);

  RationalForm form;
  form.numerator = {C("1"), C("L")};
  form.factors = {DenominatorFactor{1, 3}, DenominatorFactor{0, 1}};
  form.sort_factors();
  const std::string text = to_string(form);
  CHECK(text.find("(1 - t)") != std::string::npos);
  CHECK(text.find("(1 - L*t^3)") != std::string::npos);
  const std::string tex = to_latex(form);
  CHECK(tex.find("\\frac{") != std::string::npos);
}
