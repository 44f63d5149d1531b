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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "autarc/count.hpp"
#include "autarc/digest.hpp"
#include "autarc/errors.hpp"
#include "autarc/fatpoint.hpp"
#include "autarc/motive.hpp"
#include "autarc/presentation.hpp"
#include "autarc/verify.hpp"
#include "autarc/zeta.hpp"

namespace py = pybind11;
using namespace autarc;

namespace {

constexpr const char* kDefaultGerm = "y^2 - x^3";

// Arbitrary-precision counts cross into Python losslessly as int.
py::object big_int(const Int& n) {
  return py::module_::import("builtins").attr("int")(n.str());
}

Polynomial parse_germ(const std::string& text) {
  return parse_polynomial(text, Domain::rationals(), make_vars({"x", "y"}));
}

// One fat point of the family described by `germ` xor `monomial`.
FatPoint resolve_point(const std::optional<std::string>& germ,
                       const std::optional<unsigned>& monomial,
                       unsigned level) {
  if (germ && monomial)
    throw Error("give either a germ or a monomial dimension, not both");
  if (monomial) return monomial_fatpoint(*monomial, level + 1);
  return germ_truncation(parse_germ(germ.value_or(kDefaultGerm)), level);
}

std::pair<VarsPtr, std::vector<Polynomial>> parse_target(
    std::vector<std::string> coords, std::vector<std::string> equations,
    const std::optional<std::string>& germ,
    const std::optional<unsigned>& monomial) {
  if (coords.empty()) {
    // Default target: the curve the germ family truncates.
    coords = {"x", "y"};
    if (equations.empty() && !monomial)
      equations = {germ.value_or(kDefaultGerm)};
  }
  const VarsPtr vars = make_vars(coords);
  std::vector<Polynomial> polys;
  polys.reserve(equations.size());
  for (const std::string& e : equations)
    polys.push_back(parse_polynomial(e, Domain::rationals(), vars));
  return {vars, polys};
}

SchemePresentation build_presentation(
    const std::string& construction, unsigned level,
    const std::optional<std::string>& germ,
    const std::optional<unsigned>& monomial, std::optional<unsigned> order,
    const std::vector<std::string>& target_coords,
    const std::vector<std::string>& target_equations) {
  if (construction == "jet") {
    if (monomial) throw Error("jet spaces need a germ, not a monomial family");
    return jet_presentation(parse_germ(germ.value_or(kDefaultGerm)),
                            order.value_or(level));
  }
  const FatPoint point = resolve_point(germ, monomial, level);
  if (construction == "endo") return endo_presentation(*point.algebra);
  if (construction == "aut") return aut_presentation(*point.algebra);
  const auto [tvars, teqs] =
      parse_target(target_coords, target_equations, germ, monomial);
  if (construction == "hom")
    return hom_presentation(*point.algebra, tvars, teqs);
  if (construction == "product")
    return trivial_deformation_autoarc(*point.algebra, tvars, teqs);
  throw Error("unknown construction '" + construction +
              "' (endo, aut, hom, jet, product)");
}

py::dict point_dict(const FatPoint& point) {
  py::dict out;
  out["origin"] = point.origin;
  out["level"] = point.level;
  out["rank"] = point.rank();
  py::list groebner, basis;
  const ArtinAlgebra& alg = *point.algebra;
  for (const Polynomial& g : alg.groebner()) groebner.append(g.to_string());
  for (const Monomial& m : alg.basis()) basis.append(m.to_string(*alg.vars()));
  out["groebner"] = groebner;
  out["basis"] = basis;
  return out;
}

py::dict pres_dict(const SchemePresentation& pres) {
  py::dict out;
  out["construction"] = pres.construction;
  out["source"] = pres.source;
  py::list variables, equations;
  for (const std::string& name : *pres.variables) variables.append(name);
  for (const Polynomial& eq : pres.equations)
    equations.append(eq.to_string());
  out["variables"] = variables;
  out["equations"] = equations;
  out["digest"] = presentation_digest(pres);
  return out;
}

py::list samples_list(const std::vector<CountSample>& samples) {
  py::list out;
  for (const CountSample& s : samples) {
    py::dict row;
    row["q"] = s.q;
    row["count"] = big_int(s.count);
    out.append(row);
  }
  return out;
}

py::dict form_dict(const RationalForm& form) {
  py::dict out;
  py::list numerator, factors, additive;
  for (const MotivicClass& c : form.numerator) numerator.append(c.to_string());
  for (const DenominatorFactor& f : form.factors)
    factors.append(py::make_tuple(f.a, f.b));
  for (const MotivicClass& c : form.additive) additive.append(c.to_string());
  out["numerator"] = numerator;
  out["factors"] = factors;
  out["additive"] = additive;
  return out;
}

std::vector<MotivicClass> parse_classes(const std::vector<std::string>& texts) {
  std::vector<MotivicClass> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(MotivicClass::parse(t));
  return out;
}

py::list class_list(const std::vector<MotivicClass>& classes) {
  py::list out;
  for (const MotivicClass& c : classes) out.append(c.to_string());
  return out;
}

CountOptions options_of(std::uint64_t budget, unsigned jobs) {
  CountOptions opts;
  opts.budget = budget;
  opts.jobs = jobs;
  return opts;
}

constexpr std::uint64_t kDefaultBudget = 200'000'000;

}  // namespace

PYBIND11_MODULE(pyautarc, m) {
  m.doc() =
      "Exact truncated auto-arc spaces of fat points: presentations, "
      "finite-field point counts, Grothendieck-ring classes, and zeta "
      "series.";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def(
      "fat_point",
      [](unsigned level, const std::optional<std::string>& germ,
         const std::optional<unsigned>& monomial) {
        return point_dict(resolve_point(germ, monomial, level));
      },
      py::arg("level"), py::arg("germ") = std::nullopt,
      py::arg("monomial") = std::nullopt,
      "Basis, rank, and Groebner generators of one truncation of the "
      "family (a plane-curve germ, or the monomial fat points of the "
      "given ambient dimension).");

  m.def(
      "presentation",
      [](const std::string& construction, unsigned level,
         const std::optional<std::string>& germ,
         const std::optional<unsigned>& monomial, std::optional<unsigned> order,
         const std::vector<std::string>& target_coords,
         const std::vector<std::string>& target_equations) {
        return pres_dict(build_presentation(construction, level, germ,
                                            monomial, order, target_coords,
                                            target_equations));
      },
      py::arg("construction"), py::arg("level") = 0,
      py::arg("germ") = std::nullopt, py::arg("monomial") = std::nullopt,
      py::arg("order") = std::nullopt,
      py::arg("target_coords") = std::vector<std::string>{},
      py::arg("target_equations") = std::vector<std::string>{},
      "Polynomial presentation (variables and equations over Q) of a "
      "map space: construction is one of endo, aut, hom, jet, product.");

  m.def(
      "count",
      [](std::uint64_t q, const std::string& construction, unsigned level,
         const std::optional<std::string>& germ,
         const std::optional<unsigned>& monomial, std::optional<unsigned> order,
         const std::vector<std::string>& target_coords,
         const std::vector<std::string>& target_equations,
         std::uint64_t budget, unsigned jobs) {
        const SchemePresentation pres =
            build_presentation(construction, level, germ, monomial, order,
                               target_coords, target_equations);
        const CountOutcome out =
            count_points(pres, q, options_of(budget, jobs));
        if (out.budget_exceeded)
          throw Error("budget exceeded counting " + pres.source + " at q=" +
                      std::to_string(q));
        return big_int(out.count);
      },
      py::arg("q"), py::arg("construction") = "endo", py::arg("level") = 0,
      py::arg("germ") = std::nullopt, py::arg("monomial") = std::nullopt,
      py::arg("order") = std::nullopt,
      py::arg("target_coords") = std::vector<std::string>{},
      py::arg("target_equations") = std::vector<std::string>{},
      py::arg("budget") = kDefaultBudget, py::arg("jobs") = 1,
      "Exact number of F_q points of the presentation.");

  m.def(
      "interpolate",
      [](const std::vector<std::uint64_t>& primes,
         const std::string& construction, unsigned level,
         const std::optional<std::string>& germ,
         const std::optional<unsigned>& monomial, std::optional<unsigned> order,
         const std::vector<std::string>& target_coords,
         const std::vector<std::string>& target_equations,
         std::uint64_t budget, unsigned jobs) {
        const SchemePresentation pres =
            build_presentation(construction, level, germ, monomial, order,
                               target_coords, target_equations);
        const MotivicClass value =
            interpolated_class(pres, primes, options_of(budget, jobs));
        py::dict out;
        out["class"] = value.to_string();
        out["digest"] = presentation_digest(pres);
        return out;
      },
      py::arg("primes"), py::arg("construction") = "endo",
      py::arg("level") = 0, py::arg("germ") = std::nullopt,
      py::arg("monomial") = std::nullopt, py::arg("order") = std::nullopt,
      py::arg("target_coords") = std::vector<std::string>{},
      py::arg("target_equations") = std::vector<std::string>{},
      py::arg("budget") = kDefaultBudget, py::arg("jobs") = 1,
      "Point counts at the given primes fitted to a polynomial in L of "
      "degree at most len(primes) - 2; the last sample is a hold-out.  "
      "Raises Error when no such polynomial matches.");

  m.def(
      "certify",
      [](const std::string& claimed, const std::vector<std::uint64_t>& primes,
         const std::string& construction, unsigned level,
         const std::optional<std::string>& germ,
         const std::optional<unsigned>& monomial, std::optional<unsigned> order,
         const std::vector<std::string>& target_coords,
         const std::vector<std::string>& target_equations,
         std::uint64_t budget, unsigned jobs) {
        const SchemePresentation pres =
            build_presentation(construction, level, germ, monomial, order,
                               target_coords, target_equations);
        const CertifyReport report =
            certify(pres, MotivicClass::parse(claimed), primes,
                    options_of(budget, jobs));
        py::dict out;
        out["ok"] = report.ok;
        py::list rows;
        for (const CertifyRow& row : report.rows) {
          py::dict r;
          r["q"] = row.q;
          r["budget_exceeded"] = row.budget_exceeded;
          r["counted"] = big_int(row.counted);
          r["expected"] = row.expected.str();
          r["match"] = row.match;
          rows.append(r);
        }
        out["rows"] = rows;
        return out;
      },
      py::arg("claimed"), py::arg("primes"), py::arg("construction") = "endo",
      py::arg("level") = 0, py::arg("germ") = std::nullopt,
      py::arg("monomial") = std::nullopt, py::arg("order") = std::nullopt,
      py::arg("target_coords") = std::vector<std::string>{},
      py::arg("target_equations") = std::vector<std::string>{},
      py::arg("budget") = kDefaultBudget, py::arg("jobs") = 1,
      "Compare exact counts against the claimed class evaluated at "
      "each prime; ok is the conjunction over the rows.");

  m.def(
      "auto_igusa_series",
      [](unsigned levels, const std::vector<std::uint64_t>& primes,
         const std::optional<std::string>& germ,
         const std::optional<unsigned>& monomial, const std::string& policy,
         const std::optional<std::vector<long long>>& exponents,
         long long fiber_dim, long long e, std::uint64_t budget,
         unsigned jobs) {
        if (primes.size() < 2) throw Error("need at least two primes");
        const CountOptions opts = options_of(budget, jobs);
        NormalizationPolicy norm;
        switch (parse_policy_kind(policy)) {
          case NormalizationPolicy::Kind::raw:
            norm = NormalizationPolicy::raw();
            break;
          case NormalizationPolicy::Kind::degree:
            norm = NormalizationPolicy::degree();
            break;
          case NormalizationPolicy::Kind::explicit_seq:
            if (!exponents)
              throw Error("explicit policy needs an exponent sequence");
            norm = NormalizationPolicy::explicit_seq(*exponents);
            break;
          case NormalizationPolicy::Kind::paper:
            norm = NormalizationPolicy::paper(fiber_dim, e);
            break;
        }
        std::vector<MotivicClass> classes;
        std::vector<std::size_t> ranks;
        for (unsigned i = 0; i <= levels; ++i) {
          const FatPoint point = resolve_point(germ, monomial, i);
          ranks.push_back(point.rank());
          classes.push_back(
              interpolated_class(endo_presentation(*point.algebra), primes,
                                 opts));
        }
        const MotivicSeries series = assemble_zeta(classes, norm, ranks);
        py::dict out;
        out["classes"] = class_list(classes);
        out["coefficients"] = class_list(series.coefficients);
        out["truncation"] = series.truncation;
        out["text"] = to_string(series);
        return out;
      },
      py::arg("levels"), py::arg("primes"), py::arg("germ") = std::nullopt,
      py::arg("monomial") = std::nullopt, py::arg("policy") = "degree",
      py::arg("exponents") = std::nullopt, py::arg("fiber_dim") = 0,
      py::arg("e") = 0, py::arg("budget") = kDefaultBudget,
      py::arg("jobs") = 1,
      "Auto-arc zeta series of the family: self-map classes of levels "
      "0..levels, damped per the normalization policy.");

  m.def(
      "classical_series",
      [](const std::string& germ, unsigned truncation,
         const std::vector<std::uint64_t>& primes, unsigned dim,
         std::uint64_t budget, unsigned jobs) {
        const MotivicSeries series =
            classical_igusa_series(parse_germ(germ), dim, truncation, primes,
                                   options_of(budget, jobs));
        py::dict out;
        out["coefficients"] = class_list(series.coefficients);
        out["truncation"] = series.truncation;
        out["text"] = to_string(series);
        return out;
      },
      py::arg("germ"), py::arg("truncation"), py::arg("primes"),
      py::arg("dim") = 1, py::arg("budget") = kDefaultBudget,
      py::arg("jobs") = 1,
      "Jet-space series of the germ with coefficient i damped by "
      "L^(-dim * i).");

  m.def(
      "fit_series",
      [](const std::vector<std::string>& coefficients, int max_exponent,
         unsigned max_period, unsigned max_factors,
         unsigned max_degree) -> py::object {
        if (coefficients.empty()) throw Error("need at least one coefficient");
        MotivicSeries series;
        series.truncation = static_cast<unsigned>(coefficients.size() - 1);
        series.coefficients = parse_classes(coefficients);
        FitBounds bounds;
        bounds.max_abs_exponent = max_exponent;
        bounds.max_period = max_period;
        bounds.max_factors = max_factors;
        bounds.max_numerator_degree = max_degree;
        const auto form = fit_rational(series, bounds);
        if (!form) return py::none();
        return form_dict(*form);
      },
      py::arg("coefficients"), py::arg("max_exponent") = 8,
      py::arg("max_period") = 4, py::arg("max_factors") = 2,
      py::arg("max_degree") = 8,
      "Recognize coefficients of t^0.. as numerator / prod (1 - L^a "
      "t^b); returns None when nothing within the bounds fits.");

  m.def(
      "expand_form",
      [](const std::vector<std::string>& numerator,
         const std::vector<std::pair<int, unsigned>>& factors,
         unsigned truncation, const std::vector<std::string>& additive) {
        RationalForm form;
        form.numerator = parse_classes(numerator);
        for (const auto& [a, b] : factors)
          form.factors.push_back(DenominatorFactor{a, b});
        form.sort_factors();
        form.additive = parse_classes(additive);
        return class_list(expand_rational(form, truncation).coefficients);
      },
      py::arg("numerator"), py::arg("factors"), py::arg("truncation"),
      py::arg("additive") = std::vector<std::string>{},
      "Exact series expansion of additive + numerator / prod (1 - L^a "
      "t^b) to the requested truncation.");

  m.def(
      "count_samples",
      [](const std::vector<std::uint64_t>& primes,
         const std::string& construction, unsigned level,
         const std::optional<std::string>& germ,
         const std::optional<unsigned>& monomial, std::optional<unsigned> order,
         const std::vector<std::string>& target_coords,
         const std::vector<std::string>& target_equations,
         std::uint64_t budget, unsigned jobs) {
        const SchemePresentation pres =
            build_presentation(construction, level, germ, monomial, order,
                               target_coords, target_equations);
        std::vector<CountSample> samples;
        for (const std::uint64_t q : primes) {
          const CountOutcome out =
              count_points(pres, q, options_of(budget, jobs));
          if (out.budget_exceeded)
            throw Error("budget exceeded counting " + pres.source +
                        " at q=" + std::to_string(q));
          samples.push_back(CountSample{q, out.count});
        }
        return samples_list(samples);
      },
      py::arg("primes"), py::arg("construction") = "endo",
      py::arg("level") = 0, py::arg("germ") = std::nullopt,
      py::arg("monomial") = std::nullopt, py::arg("order") = std::nullopt,
      py::arg("target_coords") = std::vector<std::string>{},
      py::arg("target_equations") = std::vector<std::string>{},
      py::arg("budget") = kDefaultBudget, py::arg("jobs") = 1,
      "Exact F_q point counts at each prime.");

  m.def("suite_names", [] { return verify_suite_names(); },
        "Names of the verification suites, in report order.");

  m.def(
      "verify_suite",
      [](const std::string& name, std::uint64_t budget, unsigned jobs) {
        const SuiteReport report =
            run_suite(name, options_of(budget, jobs));
        py::dict out;
        out["suite"] = report.suite;
        out["ok"] = report.ok;
        py::list checks;
        for (const CheckResult& check : report.checks) {
          py::dict c;
          c["label"] = check.label;
          c["ok"] = check.ok;
          c["detail"] = check.detail;
          checks.append(c);
        }
        out["checks"] = checks;
        return out;
      },
      py::arg("name"), py::arg("budget") = kDefaultBudget,
      py::arg("jobs") = 1,
      "Run one verification suite and report its checks.");
}
