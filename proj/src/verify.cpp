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
#include "autarc/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "autarc/errors.hpp"
#include "autarc/fatpoint.hpp"
#include "autarc/groebner.hpp"
#include "autarc/presentation.hpp"
#include "autarc/zeta.hpp"

namespace autarc {

namespace {

void add_check(SuiteReport& report, const std::string& label, bool ok,
               const std::string& detail) {
  report.checks.push_back(CheckResult{label, ok, detail});
  if (!ok) report.ok = false;
}

std::string certify_detail(const CertifyReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const CertifyRow& row = report.rows[i];
    if (i) out << ", ";
    out << "q=" << row.q << ": " << row.counted
        << (row.match ? " == " : " != ") << row.expected;
    if (row.budget_exceeded) out << " (budget exceeded)";
  }
  return out.str();
}

void check_certified(SuiteReport& report, const std::string& label,
                     const SchemePresentation& pres,
                     const MotivicClass& claimed,
                     const std::vector<std::uint64_t>& primes,
                     const CountOptions& opts) {
  const CertifyReport cert = certify(pres, claimed, primes, opts);
  add_check(report, label, cert.ok,
            claimed.to_string() + " | " + certify_detail(cert));
}

Polynomial cusp_equation() {
  return parse_polynomial("y^2 - x^3", Domain::rationals(),
                          make_vars({"x", "y"}));
}

Int power_of(std::uint64_t q, unsigned e) {
  Int acc = 1;
  for (unsigned i = 0; i < e; ++i) acc *= q;
  return acc;
}

// ---------------------------------------------------------------- suites

SuiteReport suite_closed_forms(const CountOptions& opts) {
  SuiteReport report{"closed-forms", true, {}};
  const std::vector<std::pair<unsigned, unsigned>> cases = {
      {1, 2}, {1, 3}, {1, 4}, {2, 2}};
  for (const auto& [d, n] : cases) {
    const FatPoint point = monomial_fatpoint(d, n);
    const MonomialClosedForms forms = monomial_closed_forms(d, n);
    const std::string tag =
        "d=" + std::to_string(d) + ",n=" + std::to_string(n);
    check_certified(report, "end " + tag,
                    endo_presentation(*point.algebra), forms.end_class,
                    {2, 3, 5}, opts);
    // The d=2 automorphism count grows quickly; certify where desk-fast.
    const std::vector<std::uint64_t> aut_primes =
        (d == 2) ? std::vector<std::uint64_t>{2, 3}
                 : std::vector<std::uint64_t>{2, 3, 5};
    check_certified(report, "aut " + tag,
                    aut_presentation(*point.algebra), forms.aut_class,
                    aut_primes, opts);
  }
  return report;
}

SuiteReport suite_interpolated_line_classes(const CountOptions& opts) {
  SuiteReport report{"interpolated-line-classes", true, {}};
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11};
  for (unsigned n = 2; n <= 4; ++n) {
    const FatPoint point = monomial_fatpoint(1, n);
    const struct {
      const char* label;
      SchemePresentation pres;
      MotivicClass expected;
    } jobs[] = {
        {"end", endo_presentation(*point.algebra),
         MotivicClass::lefschetz(static_cast<int>(n) - 1)},
        {"aut", aut_presentation(*point.algebra),
         MotivicClass::lefschetz(static_cast<int>(n) - 1) -
             MotivicClass::lefschetz(static_cast<int>(n) - 2)},
    };
    for (const auto& job : jobs) {
      std::vector<CountSample> samples;
      bool exceeded = false;
      for (const std::uint64_t q : primes) {
        const CountOutcome out = count_points(job.pres, q, opts);
        exceeded = exceeded || out.budget_exceeded;
        samples.push_back(CountSample{q, out.count});
      }
      const std::string label = std::string(job.label) + " of the line at n=" +
                                std::to_string(n);
      if (exceeded) {
        add_check(report, label, false, "budget exceeded");
        continue;
      }
      const InterpolationResult fit = interpolate_class(samples, n - 1);
      const bool ok = fit.ok && fit.value == job.expected &&
                      !fit.holdout.empty();
      add_check(report, label, ok,
                (fit.ok ? fit.value.to_string() : fit.failure) +
                    " expected " + job.expected.to_string() + " (" +
                    std::to_string(fit.holdout.size()) + " hold-outs)");
    }
  }
  return report;
}

SuiteReport suite_cusp_classes(const CountOptions& opts) {
  SuiteReport report{"cusp-classes", true, {}};
  AdmissibleSystem cusp = AdmissibleSystem::germ(cusp_equation());
  const std::vector<MotivicClass> expected = {
      MotivicClass::one(), MotivicClass::lefschetz(4),
      MotivicClass::lefschetz(7)};
  for (unsigned i = 0; i < expected.size(); ++i) {
    const FatPoint& point = cusp.level(i);
    check_certified(report, "auto-arc class at level " + std::to_string(i),
                    endo_presentation(*point.algebra), expected[i], {2, 3},
                    opts);
  }
  add_check(report, "transitions nested through level 4",
            cusp.transitions_nested(4), "basis chains are increasing");
  return report;
}

SuiteReport suite_cusp_factorization(const CountOptions& opts) {
  SuiteReport report{"cusp-factorization", true, {}};
  const Polynomial cusp = cusp_equation();
  const FatPoint x4 = germ_truncation(cusp, 4);
  const SchemePresentation endo = endo_presentation(*x4.algebra);
  const SchemePresentation jets2 = jet_presentation(cusp, 2);
  const SchemePresentation jets3 = jet_presentation(cusp, 3);
  for (const std::uint64_t q : {2ull, 3ull}) {
    const CountOutcome end_out = count_points(endo, q, opts);
    const CountOutcome jet2_out = count_points(jets2, q, opts);
    const CountOutcome jet3_out = count_points(jets3, q, opts);
    if (end_out.budget_exceeded || jet2_out.budget_exceeded ||
        jet3_out.budget_exceeded) {
      add_check(report, "counts at q=" + std::to_string(q), false,
                "budget exceeded");
      continue;
    }
    // The order-2 jet count has the known closed form 2q^3 - q^2.
    const Int jet2_expected = 2 * power_of(q, 3) - power_of(q, 2);
    add_check(report, "order-2 jet count at q=" + std::to_string(q),
              jet2_out.count == jet2_expected,
              jet2_out.count.str() + " expected " + jet2_expected.str());
    // Structural factorization: the level-4 endomorphism space is the
    // order-3 jet space of the cusp times a free A^7, checked here with
    // the two sides produced by unrelated code paths.
    const Int rhs = power_of(q, 7) * jet3_out.count;
    add_check(report,
              "level-4 endomorphisms = q^7 * order-3 jets at q=" +
                  std::to_string(q),
              end_out.count == rhs,
              end_out.count.str() + " vs " + power_of(q, 7).str() + " * " +
                  jet3_out.count.str() + " = " + rhs.str());
  }
  return report;
}

SuiteReport suite_product_identity(const CountOptions& opts) {
  SuiteReport report{"product-identity", true, {}};
  const Polynomial cusp = cusp_equation();
  const VarsPtr target = cusp.vars();
  const std::vector<Polynomial> target_eqs = {cusp};
  for (unsigned i = 0; i <= 3; ++i) {
    const FatPoint line = monomial_fatpoint(1, i + 1);
    const SchemePresentation product = trivial_deformation_autoarc(
        *line.algebra, target, target_eqs);
    const SchemePresentation jets = jet_presentation(cusp, i);
    for (const std::uint64_t q : {2ull, 3ull}) {
      const CountOutcome lhs = count_points(product, q, opts);
      const CountOutcome jet_out = count_points(jets, q, opts);
      if (lhs.budget_exceeded || jet_out.budget_exceeded) {
        add_check(report,
                  "level " + std::to_string(i) + " q=" + std::to_string(q),
                  false, "budget exceeded");
        continue;
      }
      const Int rhs = jet_out.count * power_of(q, i);
      add_check(report,
                "auto-arc of trivially deformed cusp, level " +
                    std::to_string(i) + ", q=" + std::to_string(q),
                lhs.count == rhs,
                lhs.count.str() + " vs jets*q^level = " + rhs.str());
    }
  }
  return report;
}

SuiteReport suite_classical_series(const CountOptions& opts) {
  SuiteReport report{"classical-series", true, {}};
  const Polynomial parabola = parse_polynomial(
      "y - x^2", Domain::rationals(), make_vars({"x", "y"}));
  const MotivicSeries series = classical_igusa_series(
      parabola, 1, 3, first_primes(6), opts);
  for (unsigned i = 0; i <= 3; ++i) {
    add_check(report, "damped jet coefficient " + std::to_string(i),
              series.coefficients[i] == MotivicClass::lefschetz(1),
              series.coefficients[i].to_string() + " expected L");
  }
  return report;
}

SuiteReport suite_series_round_trip(const CountOptions&) {
  SuiteReport report{"series-round-trip", true, {}};
  const auto L = [](int k) { return MotivicClass::lefschetz(k); };
  const MotivicClass zero = MotivicClass::zero();

  // The closed form under study: L^-1 + L t + L^2 t^2 +
  // ((L^7-L^6) t^3 + L^7 t^4 + L^7 t^7) / ((1 - L t^3)(1 - t)).
  RationalForm closed;
  closed.additive = {L(-1), L(1), L(2)};
  closed.numerator = {zero, zero, zero, L(7) - L(6), L(7), zero, zero, L(7)};
  closed.factors = {DenominatorFactor{1, 3}, DenominatorFactor{0, 1}};
  closed.sort_factors();

  const MotivicSeries expanded = expand_rational(closed, 14);
  add_check(report, "expansion coefficient t^3",
            expanded.coefficients[3] == L(7) - L(6),
            expanded.coefficients[3].to_string());
  add_check(report, "expansion coefficient t^4",
            expanded.coefficients[4] == L(7) + L(7) - L(6),
            expanded.coefficients[4].to_string());

  FitBounds bounds;
  bounds.max_abs_exponent = 8;
  bounds.max_period = 4;
  bounds.max_factors = 2;
  bounds.max_numerator_degree = 8;
  const auto fitted = fit_rational(expanded, bounds);
  if (!fitted) {
    add_check(report, "closed-form fit", false, "no rational form found");
    return report;
  }
  const std::vector<DenominatorFactor> want = {DenominatorFactor{0, 1},
                                               DenominatorFactor{1, 3}};
  add_check(report, "recovered denominator", fitted->factors == want,
            to_string(*fitted));
  add_check(report, "re-expansion matches all coefficients",
            expand_rational(*fitted, 14) == expanded, "15 coefficients");

  // Geometric control case.
  MotivicSeries geometric = MotivicSeries::zeros(8);
  for (unsigned i = 0; i <= 8; ++i) geometric.coefficients[i] = L(int(i));
  const auto geo_fit = fit_rational(geometric, FitBounds{2, 2, 1, 2});
  const bool geo_ok = geo_fit && geo_fit->factors ==
      std::vector<DenominatorFactor>{DenominatorFactor{1, 1}} &&
      geo_fit->numerator == std::vector<MotivicClass>{L(0)};
  add_check(report, "geometric series fit", geo_ok,
            geo_fit ? to_string(*geo_fit) : "no fit");
  return report;
}

// --- property checks ----------------------------------------------------

void property_buchberger(SuiteReport& report) {
  const Domain q_domain = Domain::rationals();
  const VarsPtr xy = make_vars({"x", "y"});
  const auto poly = [&](const std::string& text) {
    return parse_polynomial(text, q_domain, xy);
  };
  const std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals = {
      {"cusp truncation", {poly("y^2 - x^3"), poly("x^4"), poly("x^3*y"),
                           poly("x^2*y^2"), poly("x*y^3"), poly("y^4")}},
      {"circle and hyperbola", {poly("x^2 + y^2 - 1"), poly("x*y - 1")}},
      {"mixed", {poly("x^2 - y"), poly("y^2 - x")}},
  };
  for (const auto& [name, gens] : ideals) {
    const MonomialOrder order = MonomialOrder::make_grevlex(2);
    const std::vector<Polynomial> gb = buchberger(gens, order);
    bool all_zero = true;
    for (std::size_t i = 0; i < gb.size() && all_zero; ++i)
      for (std::size_t j = i + 1; j < gb.size() && all_zero; ++j) {
        const Polynomial s = s_polynomial(gb[i], gb[j], order);
        if (!normal_form(s, gb, order).is_zero()) all_zero = false;
      }
    add_check(report, "all S-polynomials reduce to zero: " + name, all_zero,
              std::to_string(gb.size()) + " basis elements");
  }
}

void property_order_independent_rank(SuiteReport& report) {
  const Domain q_domain = Domain::rationals();
  const VarsPtr xy = make_vars({"x", "y"});
  const auto poly = [&](const std::string& text) {
    return parse_polynomial(text, q_domain, xy);
  };
  const std::vector<std::pair<std::vector<Polynomial>, std::size_t>> cases = {
      {{poly("y^2 - x^3"), poly("x^3"), poly("x^2*y"), poly("x*y^2"),
        poly("y^3")},
       5},
      {{poly("x^2"), poly("x*y"), poly("y^2")}, 3},
      {{poly("x^2 - y"), poly("y^2")}, 4},
  };
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& [gens, expected] = cases[c];
    const ArtinAlgebra grevlex(q_domain, xy, gens,
                               MonomialOrder::make_grevlex(2));
    const ArtinAlgebra lex(q_domain, xy, gens, MonomialOrder::make_lex(2));
    const bool ok =
        grevlex.rank() == expected && lex.rank() == expected;
    add_check(report, "rank agrees across orders, ideal " + std::to_string(c),
              ok,
              "grevlex " + std::to_string(grevlex.rank()) + ", lex " +
                  std::to_string(lex.rank()) + ", expected " +
                  std::to_string(expected));
  }
}

std::string endo_key(const EndoPoint& point) {
  std::ostringstream out;
  for (const auto& image : point.images) {
    for (const Rat& c : image) out << c << ",";
    out << ";";
  }
  return out.str();
}

void property_monoid(SuiteReport& report, const CountOptions& opts) {
  struct Algebra {
    std::string name;
    FatPoint point;
  };
  const std::vector<Algebra> algebras = {
      {"line thickened 3", monomial_fatpoint(1, 3)},
      {"line thickened 4", monomial_fatpoint(1, 4)},
      {"line thickened 5", monomial_fatpoint(1, 5)},
      {"plane square origin", monomial_fatpoint(2, 2)},
      {"cusp level 1", germ_truncation(cusp_equation(), 1)},
  };
  for (const Algebra& a : algebras) {
    const ArtinAlgebra& B = *a.point.algebra;
    const SchemePresentation pres = endo_presentation(B);
    for (const std::uint64_t q : {2ull, 3ull}) {
      const auto solutions = enumerate_points(pres, q, opts.budget);
      std::vector<EndoPoint> points;
      points.reserve(solutions.size());
      std::set<std::string> keys;
      bool all_valid = true;
      for (const auto& assignment : solutions) {
        EndoPoint p = endo_point_from_assignment(pres, B, assignment, q);
        if (!satisfies_endo(B, p)) all_valid = false;
        keys.insert(endo_key(p));
        points.push_back(std::move(p));
      }
      const EndoPoint id = identity_endo(B, q);
      const bool id_in = keys.count(endo_key(id)) > 0;
      bool closed = true;
      for (const EndoPoint& p1 : points) {
        if (!closed) break;
        for (const EndoPoint& p2 : points) {
          const EndoPoint composite = compose_endos(B, p1, p2);
          if (!keys.count(endo_key(composite))) {
            closed = false;
            break;
          }
        }
      }
      add_check(report,
                a.name + " endomorphisms form a monoid at q=" +
                    std::to_string(q),
                all_valid && id_in && closed,
                std::to_string(points.size()) +
                    " points, identity present, composition closed");
    }
  }
}

void property_count_insensitivity(SuiteReport& report,
                                  const CountOptions& opts) {
  const std::vector<std::pair<std::string, SchemePresentation>> cases = {
      {"cusp level 2 endomorphisms",
       endo_presentation(*germ_truncation(cusp_equation(), 2).algebra)},
      {"plane square endomorphisms",
       endo_presentation(*monomial_fatpoint(2, 2).algebra)},
  };
  for (const auto& [name, pres] : cases) {
    for (const std::uint64_t q : {2ull, 3ull}) {
      const Int base = count_points(pres, q, opts).count;
      SchemePresentation reversed = pres;
      std::reverse(reversed.equations.begin(), reversed.equations.end());
      SchemePresentation duplicated = pres;
      if (!duplicated.equations.empty())
        duplicated.equations.push_back(duplicated.equations.front());
      SchemePresentation summed = pres;
      if (summed.equations.size() >= 2)
        summed.equations.push_back(summed.equations[0] + summed.equations[1]);
      const Int r = count_points(reversed, q, opts).count;
      const Int d = count_points(duplicated, q, opts).count;
      const Int s = count_points(summed, q, opts).count;
      add_check(report,
                name + " count ignores equation presentation at q=" +
                    std::to_string(q),
                base == r && base == d && base == s,
                base.str() + " / reversed " + r.str() + " / duplicated " +
                    d.str() + " / redundant sum " + s.str());
    }
  }
}

void property_product_law(SuiteReport& report, const CountOptions& opts) {
  const Polynomial cusp = cusp_equation();
  const FatPoint line = monomial_fatpoint(1, 3);
  const SchemePresentation hom =
      hom_presentation(*line.algebra, cusp.vars(), {&cusp, 1});
  const SchemePresentation endo = endo_presentation(*line.algebra);
  const SchemePresentation product =
      trivial_deformation_autoarc(*line.algebra, cusp.vars(), {&cusp, 1});
  for (const std::uint64_t q : {2ull, 3ull}) {
    const Int lhs = count_points(product, q, opts).count;
    const Int rhs = count_points(hom, q, opts).count *
                    count_points(endo, q, opts).count;
    add_check(report,
              "product presentation multiplies counts at q=" +
                  std::to_string(q),
              lhs == rhs, lhs.str() + " vs " + rhs.str());
  }
}

void property_interpolation(SuiteReport& report, const CountOptions& opts) {
  // Positive case: the invertible-linear-part space of the planar
  // square-zero algebra has the general-linear class.
  const FatPoint point = monomial_fatpoint(2, 2);
  const SchemePresentation aut = aut_presentation(*point.algebra);
  std::vector<CountSample> samples;
  for (const std::uint64_t q : first_primes(6))
    samples.push_back(CountSample{q, count_points(aut, q, opts).count});
  const InterpolationResult fit = interpolate_class(samples, 4);
  add_check(report, "hold-out interpolation of the general linear class",
            fit.ok && fit.value == MotivicClass::general_linear(2) &&
                !fit.holdout.empty(),
            fit.ok ? fit.value.to_string() : fit.failure);

  // Negative case: a corrupted hold-out must be rejected.
  std::vector<CountSample> corrupted = samples;
  corrupted.back().count += 1;
  const InterpolationResult bad = interpolate_class(corrupted, 4);
  add_check(report, "corrupted hold-out is rejected", !bad.ok,
            bad.ok ? "accepted (wrong)" : bad.failure);
}

void property_fit_round_trip(SuiteReport& report) {
  const auto L = [](int k) { return MotivicClass::lefschetz(k); };
  std::vector<RationalForm> forms;
  {
    RationalForm f;
    f.numerator = {L(0)};
    f.factors = {DenominatorFactor{2, 1}};
    forms.push_back(f);
  }
  {
    RationalForm f;
    f.numerator = {L(0), L(1)};
    f.factors = {DenominatorFactor{0, 2}, DenominatorFactor{1, 1}};
    f.sort_factors();
    forms.push_back(f);
  }
  {
    RationalForm f;
    f.numerator = {L(-2)};
    f.factors = {DenominatorFactor{-1, 2}};
    forms.push_back(f);
  }
  FitBounds bounds;
  bounds.max_abs_exponent = 4;
  bounds.max_period = 3;
  bounds.max_factors = 2;
  bounds.max_numerator_degree = 6;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const MotivicSeries series = expand_rational(forms[i], 12);
    const auto fitted = fit_rational(series, bounds);
    const bool ok = fitted && expand_rational(*fitted, 12) == series;
    add_check(report, "expand-fit round trip, form " + std::to_string(i), ok,
              fitted ? to_string(*fitted) : "no fit");
  }
}

SuiteReport suite_properties(const CountOptions& opts) {
  SuiteReport report{"property-suites", true, {}};
  property_buchberger(report);
  property_order_independent_rank(report);
  property_monoid(report, opts);
  property_count_insensitivity(report, opts);
  property_product_law(report, opts);
  property_interpolation(report, opts);
  property_fit_round_trip(report);
  return report;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"closed-forms",      "interpolated-line-classes",
          "cusp-classes",      "cusp-factorization",
          "product-identity",  "classical-series",
          "series-round-trip", "property-suites"};
}

SuiteReport run_suite(const std::string& name, const CountOptions& opts) {
  if (name == "closed-forms") return suite_closed_forms(opts);
  if (name == "interpolated-line-classes")
    return suite_interpolated_line_classes(opts);
  if (name == "cusp-classes") return suite_cusp_classes(opts);
  if (name == "cusp-factorization") return suite_cusp_factorization(opts);
  if (name == "product-identity") return suite_product_identity(opts);
  if (name == "classical-series") return suite_classical_series(opts);
  if (name == "series-round-trip") return suite_series_round_trip(opts);
  if (name == "property-suites") return suite_properties(opts);
  throw Error("unknown verify suite '" + name + "'");
}

}  // namespace autarc
