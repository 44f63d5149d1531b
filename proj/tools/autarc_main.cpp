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
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autarc/cache.hpp"
#include "autarc/count.hpp"
#include "autarc/digest.hpp"
#include "autarc/errors.hpp"
#include "autarc/fatpoint.hpp"
#include "autarc/json_io.hpp"
#include "autarc/presentation.hpp"
#include "autarc/scenario.hpp"
#include "autarc/verify.hpp"
#include "autarc/zeta.hpp"

namespace {

using namespace autarc;

// Exit discipline: 0 success, 1 computational failure (budget
// exhaustion, no fit, failed certification), 2 usage or validation.
constexpr int kExitCompute = 1;
constexpr int kExitUsage = 2;

struct UsageFailure {
  std::string message;
};
struct ComputeFailure {
  std::string message;
};

[[noreturn]] void usage_error(const std::string& message) {
  throw UsageFailure{message};
}

// Runs a constructor-stage action; domain errors there are the user's
// input, not the computation, so they map to the usage exit code.
template <typename F>
auto validating(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageFailure{e.what()};
  } catch (const nlohmann::json::exception& e) {
    throw UsageFailure{e.what()};
  }
}

// ------------------------------------------------------------------ config

// Scenario with command-line overrides folded in, plus output switches.
struct Effective {
  Scenario s;
  bool json = false;
  bool latex = false;
  std::string cache_path;

  CountOptions copts() const { return CountOptions{s.budget, s.jobs}; }
};

// Cache hits go to stderr so warm and cold runs print the same report.
void log_cache_hit(const SchemePresentation& pres, std::uint64_t q) {
  std::cerr << "cache hit: " << presentation_digest(pres) << " q=" << q
            << "\n";
}

struct SourceOpts {
  std::string germ;       // nonempty: study this plane-curve germ
  unsigned monomial = 0;  // nonzero: monomial fat point of this dimension
  int level = -1;         // -1: use the scenario's level count
};

void add_source_opts(CLI::App* sub, SourceOpts& o,
                     const std::string& level_desc) {
  auto* germ = sub->add_option(
      "-f,--germ", o.germ,
      "plane-curve germ equation in x and y (overrides the scenario)");
  auto* mono = sub->add_option(
      "--monomial", o.monomial,
      "study the monomial fat point of this ambient dimension instead");
  mono->check(CLI::PositiveNumber);
  germ->excludes(mono);
  sub->add_option("-i,--level", o.level, level_desc)
      ->check(CLI::NonNegativeNumber);
}

Scenario merged_source(Scenario s, const SourceOpts& o) {
  if (!o.germ.empty()) {
    s.kind = "germ";
    s.germ = o.germ;
  }
  if (o.monomial > 0) {
    s.kind = "monomial";
    s.dimension = o.monomial;
  }
  if (o.level >= 0) s.levels = static_cast<unsigned>(o.level);
  return s;
}

Polynomial germ_poly(const Scenario& s) {
  if (s.kind != "germ")
    usage_error("this operation needs a plane-curve germ (kind \"germ\")");
  return validating([&] {
    return parse_polynomial(s.germ, Domain::rationals(), make_vars({"x", "y"}));
  });
}

// Target of the map space: explicit coordinates/equations when given,
// otherwise the germ hypersurface in the (x, y) plane.
std::pair<VarsPtr, std::vector<Polynomial>> target_of(const Scenario& s) {
  std::vector<std::string> coords = s.target_coordinates;
  std::vector<std::string> eqs = s.target_equations;
  if (coords.empty()) {
    coords = {"x", "y"};
    if (eqs.empty() && s.kind == "germ") eqs = {s.germ};
  }
  return validating([&] {
    const VarsPtr vars = make_vars(coords);
    std::vector<Polynomial> polys;
    polys.reserve(eqs.size());
    for (const std::string& e : eqs)
      polys.push_back(parse_polynomial(e, Domain::rationals(), vars));
    return std::make_pair(vars, polys);
  });
}

SchemePresentation build_presentation(const Scenario& s,
                                      const std::string& construction,
                                      unsigned level) {
  if (construction == "jet") return jet_presentation(germ_poly(s), level);
  const AdmissibleSystem sys = validating([&] { return system_of(s); });
  const FatPoint& point = validating(
      [&]() -> const FatPoint& { return sys.level(level); });
  if (construction == "endo") return endo_presentation(*point.algebra);
  if (construction == "aut") return aut_presentation(*point.algebra);
  const auto [tvars, teqs] = target_of(s);
  if (construction == "hom")
    return hom_presentation(*point.algebra, tvars, teqs);
  return trivial_deformation_autoarc(*point.algebra, tvars, teqs);
}

// ------------------------------------------------------------------ output

void emit(const Effective& cfg, Json report, const std::string& human) {
  Json meta;
  meta["generated"] = utc_timestamp();
  meta["cache"] = cfg.cache_path;
  report["meta"] = meta;  // timestamps live only in this block
  const std::string dumped = report.dump(2) + "\n";
  if (cfg.json)
    std::cout << dumped;
  else
    std::cout << human;
  if (!cfg.s.output_path.empty()) write_text_file(cfg.s.output_path, dumped);
}

std::string presentation_summary(const SchemePresentation& pres) {
  std::ostringstream out;
  out << pres.construction << " presentation of " << pres.source << "\n"
      << "variables: " << pres.nvars()
      << "  equations: " << pres.equations.size() << "\n"
      << "digest: " << presentation_digest(pres) << "\n";
  return out.str();
}

// --------------------------------------------------------------- counting

Int cached_count(Effective& cfg, CountCache& cache,
                 const SchemePresentation& pres, std::uint64_t q) {
  bool hit = false;
  const CountOutcome out = cache.counted(pres, q, cfg.copts(), &hit);
  if (hit) log_cache_hit(pres, q);
  if (out.budget_exceeded)
    throw ComputeFailure{"budget exceeded counting " + pres.source + " at q=" +
                         std::to_string(q)};
  return out.count;
}

MotivicClass cached_interpolation(Effective& cfg, CountCache& cache,
                                  const SchemePresentation& pres,
                                  std::size_t degree_bound) {
  std::vector<CountSample> samples;
  samples.reserve(cfg.s.primes.size());
  for (const std::uint64_t q : cfg.s.primes)
    samples.push_back(CountSample{q, cached_count(cfg, cache, pres, q)});
  const InterpolationResult fit = interpolate_class(samples, degree_bound);
  if (!fit.ok)
    throw ComputeFailure{"no polynomial class for " + pres.source + ": " +
                         fit.failure};
  return fit.value;
}

// --------------------------------------------------------------- commands

struct TruncateOpts {
  SourceOpts source;
  std::string at;  // comma-separated rational point to center on
};

int cmd_truncate(Effective cfg, const TruncateOpts& o) {
  const Scenario s = merged_source(cfg.s, o.source);
  FatPoint point = [&] {
    if (!o.at.empty()) {
      Polynomial f = germ_poly(s);
      std::vector<Rat> center;
      std::stringstream strm(o.at);
      std::string part;
      while (std::getline(strm, part, ',')) {
        try {
          center.emplace_back(part);
        } catch (const std::exception&) {
          usage_error("--at expects comma-separated rationals, got '" + part +
                      "'");
        }
      }
      if (center.size() != 2)
        usage_error("--at expects two coordinates for a plane germ");
      return validating(
          [&] { return germ_truncation(translated(f, center), s.levels); });
    }
    const AdmissibleSystem sys = validating([&] { return system_of(s); });
    return validating([&] { return sys.level(s.levels); });
  }();

  Json report;
  report["command"] = "truncate";
  report["fat_point"] = fatpoint_to_json(point);

  std::ostringstream human;
  const auto names = point.algebra->vars();
  human << point.origin << "\n"
        << "level: " << point.level << "  rank: " << point.rank() << "\n"
        << "basis:";
  for (const Monomial& m : point.algebra->basis())
    human << " " << m.to_string(*names);
  human << "\n";
  emit(cfg, std::move(report), human.str());
  return 0;
}

struct PresentOpts {
  SourceOpts source;
  std::vector<std::string> target_coords;
  std::vector<std::string> target_eqs;
  bool product = false;
  unsigned order = 0;  // jet order
  bool order_set = false;
};

int cmd_presentation(Effective cfg, const std::string& command,
                     const PresentOpts& o) {
  Scenario s = merged_source(cfg.s, o.source);
  if (!o.target_coords.empty()) s.target_coordinates = o.target_coords;
  if (!o.target_eqs.empty()) s.target_equations = o.target_eqs;
  std::string construction = command;
  unsigned level = s.levels;
  if (command == "hom" && o.product) construction = "product";
  if (command == "jet" && o.order_set) level = o.order;
  const SchemePresentation pres = build_presentation(s, construction, level);

  Json report;
  report["command"] = command;
  report["presentation"] = presentation_to_json(pres);
  report["digest"] = presentation_digest(pres);
  emit(cfg, std::move(report), presentation_summary(pres));
  return 0;
}

struct CountOpts {
  SourceOpts source;
  std::string presentation_path;
  std::string construction = "endo";
};

SchemePresentation resolve_presentation(const Scenario& merged,
                                        const std::string& path,
                                        const std::string& construction) {
  if (!path.empty())
    return validating(
        [&] { return presentation_from_json(read_json_file(path)); });
  return build_presentation(merged, construction, merged.levels);
}

int cmd_count(Effective cfg, const CountOpts& o) {
  const Scenario s = merged_source(cfg.s, o.source);
  const SchemePresentation pres =
      resolve_presentation(s, o.presentation_path, o.construction);
  CountCache cache(cfg.cache_path);

  std::vector<CountSample> samples;
  std::vector<std::uint64_t> exceeded;
  for (const std::uint64_t q : cfg.s.primes) {
    bool hit = false;
    const CountOutcome out = cache.counted(pres, q, cfg.copts(), &hit);
    if (hit) log_cache_hit(pres, q);
    if (out.budget_exceeded)
      exceeded.push_back(q);
    else
      samples.push_back(CountSample{q, out.count});
  }

  Json report;
  report["command"] = "count";
  report["digest"] = presentation_digest(pres);
  report["construction"] = pres.construction;
  report["source"] = pres.source;
  report["samples"] = samples_to_json(samples);
  report["budget_exceeded"] = exceeded;

  std::ostringstream human;
  human << presentation_summary(pres);
  for (const CountSample& sample : samples)
    human << "q=" << sample.q << ": " << sample.count << "\n";
  for (const std::uint64_t q : exceeded)
    human << "q=" << q << ": budget exceeded\n";
  emit(cfg, std::move(report), human.str());
  return exceeded.empty() ? 0 : kExitCompute;
}

struct ClassOpts {
  SourceOpts source;
  std::string presentation_path;
  std::string construction = "endo";
  std::string samples_path;
  std::string claimed;
  int degree_bound = -1;
};

int cmd_class(Effective cfg, const ClassOpts& o) {
  const Scenario s = merged_source(cfg.s, o.source);
  CountCache cache(cfg.cache_path);

  if (!o.claimed.empty()) {
    // Certification mode: compare counts against the claimed class.
    const MotivicClass claimed = validating(
        [&] { return MotivicClass::parse(o.claimed); });
    if (!claimed.is_polynomial())
      usage_error("claimed classes must have no negative powers of L");
    const SchemePresentation pres =
        resolve_presentation(s, o.presentation_path, o.construction);
    CertifyReport cert;
    cert.ok = true;
    for (const std::uint64_t q : cfg.s.primes) {
      bool hit = false;
      const CountOutcome out = cache.counted(pres, q, cfg.copts(), &hit);
      if (hit) log_cache_hit(pres, q);
      CertifyRow row;
      row.q = q;
      row.budget_exceeded = out.budget_exceeded;
      row.counted = out.count;
      row.expected = claimed.evaluate_at(Rat(q));
      row.match = !out.budget_exceeded && Rat(out.count) == row.expected;
      cert.ok = cert.ok && row.match;
      cert.rows.push_back(row);
    }
    Json report;
    report["command"] = "class";
    report["mode"] = "certify";
    report["digest"] = presentation_digest(pres);
    report["claimed"] = claimed.to_string();
    report["certification"] = certify_to_json(cert);

    std::ostringstream human;
    human << presentation_summary(pres) << "claimed: " << claimed.to_string()
          << "\n";
    for (const CertifyRow& row : cert.rows)
      human << "q=" << row.q << ": " << row.counted
            << (row.match ? " == " : " != ") << row.expected
            << (row.budget_exceeded ? " (budget exceeded)" : "") << "\n";
    human << (cert.ok ? "certified\n" : "certification FAILED\n");
    emit(cfg, std::move(report), human.str());
    return cert.ok ? 0 : kExitCompute;
  }

  // Interpolation mode: fit counts to a polynomial in L.
  std::vector<CountSample> samples;
  std::string described = "samples from " + o.samples_path;
  std::string digest;
  if (!o.samples_path.empty()) {
    samples = validating(
        [&] { return samples_from_json(read_json_file(o.samples_path)); });
  } else {
    const SchemePresentation pres =
        resolve_presentation(s, o.presentation_path, o.construction);
    described = pres.construction + " presentation of " + pres.source;
    digest = presentation_digest(pres);
    for (const std::uint64_t q : cfg.s.primes)
      samples.push_back(CountSample{q, cached_count(cfg, cache, pres, q)});
  }
  if (samples.size() < 2) usage_error("interpolation needs at least 2 samples");
  const std::size_t degree_bound =
      o.degree_bound >= 0 ? static_cast<std::size_t>(o.degree_bound)
                          : samples.size() - 2;
  const InterpolationResult fit = validating(
      [&] { return interpolate_class(samples, degree_bound); });

  Json report;
  report["command"] = "class";
  report["mode"] = "interpolate";
  if (!digest.empty()) report["digest"] = digest;
  report["interpolation"] = interpolation_to_json(fit);

  std::ostringstream human;
  human << described << "\n";
  if (fit.ok)
    human << "class: " << fit.value.to_string() << " (validated on "
          << fit.holdout.size() << " hold-out primes)\n";
  else
    human << "interpolation failed: " << fit.failure << "\n";
  emit(cfg, std::move(report), human.str());
  if (!fit.ok)
    throw ComputeFailure{"no polynomial class: " + fit.failure};
  return 0;
}

struct ZetaOpts {
  SourceOpts source;
  int truncation = -1;
  bool classical = false;
  unsigned fiber_dim = 1;
};

int cmd_zeta(Effective cfg, const ZetaOpts& o) {
  Scenario s = merged_source(cfg.s, o.source);
  if (o.truncation >= 0) s.levels = static_cast<unsigned>(o.truncation);
  if (cfg.s.primes.size() < 2) usage_error("need at least two primes");
  const std::size_t degree_bound = cfg.s.primes.size() - 2;
  CountCache cache(cfg.cache_path);

  std::vector<MotivicClass> classes;
  std::vector<std::size_t> ranks;
  MotivicSeries series;
  if (o.classical) {
    // Jet-space series of the hypersurface, damped by dimension * level.
    const Polynomial f = germ_poly(s);
    std::vector<long long> exponents;
    for (unsigned i = 0; i <= s.levels; ++i) {
      classes.push_back(cached_interpolation(
          cfg, cache, jet_presentation(f, i), degree_bound));
      exponents.push_back(static_cast<long long>(o.fiber_dim) * i);
    }
    series = assemble_zeta(classes,
                           NormalizationPolicy::explicit_seq(exponents));
  } else {
    const NormalizationPolicy policy = validating([&] { return policy_of(s); });
    const AdmissibleSystem sys = validating([&] { return system_of(s); });
    for (unsigned i = 0; i <= s.levels; ++i) {
      const FatPoint& point = sys.level(i);
      ranks.push_back(point.rank());
      classes.push_back(cached_interpolation(
          cfg, cache, endo_presentation(*point.algebra), degree_bound));
    }
    series = assemble_zeta(classes, policy, ranks);
  }

  Json report;
  report["command"] = "zeta";
  report["scenario_digest"] = scenario_digest(s);
  report["policy"] = o.classical ? "classical" : s.policy;
  Json class_list = Json::array();
  for (const MotivicClass& c : classes) class_list.push_back(c.to_string());
  report["classes"] = class_list;
  report["series"] = series_to_json(series);
  if (cfg.latex) report["latex"] = to_latex(series);

  std::ostringstream human;
  human << to_string(series) << "\n";
  if (cfg.latex) human << to_latex(series) << "\n";
  emit(cfg, std::move(report), human.str());
  return 0;
}

struct FitOpts {
  std::string series_path;
  FitBounds bounds;
};

int cmd_fit(Effective cfg, const FitOpts& o) {
  const MotivicSeries series = validating([&] {
    Json j = read_json_file(o.series_path);
    // Accept either a bare series or a report wrapping one.
    if (j.contains("series")) j = j["series"];
    return series_from_json(j);
  });
  const std::optional<RationalForm> form = fit_rational(series, o.bounds);
  if (!form)
    throw ComputeFailure{"no rational form within the bounds fits the series"};
  const MotivicSeries check = expand_rational(*form, series.truncation);

  Json report;
  report["command"] = "fit";
  report["form"] = rational_form_to_json(*form);
  report["matches_series"] = (check == series);
  if (cfg.latex) report["latex"] = to_latex(*form);

  std::ostringstream human;
  human << to_string(*form) << "\n";
  if (cfg.latex) human << to_latex(*form) << "\n";
  emit(cfg, std::move(report), human.str());
  return check == series ? 0 : kExitCompute;
}

struct VerifyOpts {
  std::vector<std::string> suites;
  bool list = false;
};

int cmd_verify(Effective cfg, const VerifyOpts& o) {
  const std::vector<std::string> known = verify_suite_names();
  if (o.list) {
    for (const std::string& name : known) std::cout << name << "\n";
    return 0;
  }
  std::vector<std::string> chosen = o.suites.empty() ? known : o.suites;
  for (const std::string& name : chosen)
    if (std::find(known.begin(), known.end(), name) == known.end())
      usage_error("unknown verify suite '" + name + "'");

  bool all_ok = true;
  Json suite_list = Json::array();
  std::ostringstream human;
  for (const std::string& name : chosen) {
    const SuiteReport suite = run_suite(name, cfg.copts());
    all_ok = all_ok && suite.ok;
    human << "suite " << suite.suite << ": " << (suite.ok ? "PASS" : "FAIL")
          << "\n";
    Json checks = Json::array();
    for (const CheckResult& check : suite.checks) {
      human << "  [" << (check.ok ? "ok" : "FAIL") << "] " << check.label
            << ": " << check.detail << "\n";
      Json jc;
      jc["label"] = check.label;
      jc["ok"] = check.ok;
      jc["detail"] = check.detail;
      checks.push_back(jc);
    }
    Json js;
    js["suite"] = suite.suite;
    js["ok"] = suite.ok;
    js["checks"] = checks;
    suite_list.push_back(js);
  }
  Json report;
  report["command"] = "verify";
  report["ok"] = all_ok;
  report["suites"] = suite_list;
  emit(cfg, std::move(report), human.str());
  return all_ok ? 0 : kExitCompute;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "autarc: exact truncated auto-arc spaces of fat points — "
      "presentations, finite-field point counts, Grothendieck-ring "
      "classes, and zeta series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "autarc 0.1.0");
  // Let global flags appear after the subcommand name as well.
  app.fallthrough();

  std::string scenario_path, cache_path, policy_name;
  std::vector<std::uint64_t> primes;
  std::uint64_t budget = 0;
  unsigned jobs = 0;
  bool json_out = false, latex_out = false;

  auto* opt_scenario =
      app.add_option("--scenario", scenario_path, "scenario JSON file")
          ->envname("AUTARC_SCENARIO")
          ->check(CLI::ExistingFile);
  auto* opt_cache =
      app.add_option("--cache", cache_path,
                     "append-only JSONL count cache (empty disables)")
          ->envname("AUTARC_CACHE");
  auto* opt_primes =
      app.add_option("--primes", primes, "primes to count over")
          ->delimiter(',')
          ->envname("AUTARC_PRIMES");
  auto* opt_budget =
      app.add_option("--budget", budget, "node budget per counting run")
          ->envname("AUTARC_BUDGET");
  auto* opt_policy =
      app.add_option("--policy", policy_name,
                     "series normalization: raw|degree|explicit|paper")
          ->check(CLI::IsMember({"raw", "degree", "explicit", "paper"}))
          ->envname("AUTARC_POLICY");
  auto* opt_jobs =
      app.add_option("--jobs", jobs, "concurrent root branches per count")
          ->check(CLI::PositiveNumber)
          ->envname("AUTARC_JOBS");
  app.add_flag("--json", json_out, "print the JSON report to stdout")
      ->envname("AUTARC_JSON");
  app.add_flag("--latex", latex_out, "include LaTeX renderings")
      ->envname("AUTARC_LATEX");

  TruncateOpts topts;
  auto* sub_truncate = app.add_subcommand(
      "truncate", "basis and rank of a fat point (germ or monomial)");
  add_source_opts(sub_truncate, topts.source, "truncation level");
  sub_truncate->add_option(
      "--at", topts.at, "center the germ at this rational point a,b first");

  PresentOpts eopts, aopts, hopts, jopts;
  auto* sub_endo = app.add_subcommand(
      "endo", "polynomial presentation of the self-map space");
  add_source_opts(sub_endo, eopts.source, "fat-point level");
  auto* sub_aut = app.add_subcommand(
      "aut", "presentation of self-maps with invertible linear part");
  add_source_opts(sub_aut, aopts.source, "fat-point level");
  auto* sub_hom = app.add_subcommand(
      "hom", "presentation of maps from the fat point into a target");
  add_source_opts(sub_hom, hopts.source, "fat-point level");
  sub_hom->add_option("--target-coords", hopts.target_coords,
                      "target coordinate names")
      ->delimiter(',');
  sub_hom->add_option("--target-eq", hopts.target_eqs,
                      "target equation (repeatable)");
  sub_hom->add_flag("--product", hopts.product,
                    "multiply by the self-map space (trivial deformation)");
  auto* sub_jet = app.add_subcommand(
      "jet", "presentation of the order-m jet space of the germ");
  add_source_opts(sub_jet, jopts.source, "(unused; see --order)");
  sub_jet->add_option("-m,--order", jopts.order, "jet order")
      ->check(CLI::NonNegativeNumber);

  CountOpts copts_cmd;
  auto* sub_count = app.add_subcommand(
      "count", "exact F_q point counts of a presentation (cache-aware)");
  add_source_opts(sub_count, copts_cmd.source, "fat-point level");
  sub_count->add_option("-p,--presentation", copts_cmd.presentation_path,
                        "presentation JSON file (instead of building one)");
  sub_count->add_option("--construction", copts_cmd.construction,
                        "what to build when no file is given")
      ->check(CLI::IsMember({"endo", "aut", "hom", "jet", "product"}));

  ClassOpts clopts;
  auto* sub_class = app.add_subcommand(
      "class", "interpolate counts to a class in L, or certify a claim");
  add_source_opts(sub_class, clopts.source, "fat-point level");
  sub_class->add_option("-p,--presentation", clopts.presentation_path,
                        "presentation JSON file (instead of building one)");
  sub_class->add_option("--construction", clopts.construction,
                        "what to build when no file is given")
      ->check(CLI::IsMember({"endo", "aut", "hom", "jet", "product"}));
  sub_class->add_option("--samples", clopts.samples_path,
                        "samples JSON file (skip counting)");
  sub_class->add_option("--claimed", clopts.claimed,
                        "certify this class instead of interpolating");
  sub_class->add_option("--degree-bound", clopts.degree_bound,
                        "polynomial degree bound (default #primes - 2)")
      ->check(CLI::NonNegativeNumber);

  ZetaOpts zopts;
  auto* sub_zeta = app.add_subcommand(
      "zeta", "assemble the auto-arc zeta series of the scenario family");
  add_source_opts(sub_zeta, zopts.source, "series truncation (levels 0..i)");
  sub_zeta->add_option("-T,--truncation", zopts.truncation,
                       "series truncation (overrides --level)")
      ->check(CLI::NonNegativeNumber);
  sub_zeta->add_flag("--classical", zopts.classical,
                     "jet-space series of the germ instead of self-maps");
  sub_zeta->add_option("--fiber-dim", zopts.fiber_dim,
                       "damping dimension for --classical (default 1)");

  FitOpts fopts;
  auto* sub_fit = app.add_subcommand(
      "fit", "recognize a series as a rational form");
  sub_fit->add_option("-s,--series", fopts.series_path, "series JSON file")
      ->required();
  sub_fit->add_option("--max-exponent", fopts.bounds.max_abs_exponent,
                      "largest |a| in denominator factors (1 - L^a t^b)");
  sub_fit->add_option("--max-period", fopts.bounds.max_period,
                      "largest b in denominator factors");
  sub_fit->add_option("--max-factors", fopts.bounds.max_factors,
                      "largest number of denominator factors");
  sub_fit->add_option("--max-degree", fopts.bounds.max_numerator_degree,
                      "largest numerator degree");

  VerifyOpts vopts;
  auto* sub_verify = app.add_subcommand(
      "verify", "run named verification suites (default: all)");
  sub_verify->add_option("suites", vopts.suites, "suite names");
  sub_verify->add_flag("--list", vopts.list, "list suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Effective cfg;
    if (opt_scenario->count() > 0)
      cfg.s = validating([&] { return load_scenario(scenario_path); });
    if (opt_primes->count() > 0) {
      for (const std::uint64_t p : primes)
        if (!is_prime(p))
          usage_error("--primes entries must be prime, got " +
                      std::to_string(p));
      cfg.s.primes = primes;
    }
    if (cfg.s.primes.empty()) usage_error("at least one prime is required");
    if (opt_budget->count() > 0) cfg.s.budget = budget;
    if (opt_jobs->count() > 0) cfg.s.jobs = jobs;
    if (opt_policy->count() > 0) cfg.s.policy = policy_name;
    cfg.cache_path =
        opt_cache->count() > 0 ? cache_path : cfg.s.cache_path;
    cfg.json = json_out;
    cfg.latex = latex_out;

    CLI::App* sub = app.get_subcommands().at(0);
    const std::string name = sub->get_name();
    if (name == "truncate") return cmd_truncate(cfg, topts);
    if (name == "endo") return cmd_presentation(cfg, "endo", eopts);
    if (name == "aut") return cmd_presentation(cfg, "aut", aopts);
    if (name == "hom") return cmd_presentation(cfg, "hom", hopts);
    if (name == "jet") {
      jopts.order_set = sub_jet->count("--order") > 0;
      return cmd_presentation(cfg, "jet", jopts);
    }
    if (name == "count") return cmd_count(cfg, copts_cmd);
    if (name == "class") return cmd_class(cfg, clopts);
    if (name == "zeta") return cmd_zeta(cfg, zopts);
    if (name == "fit") return cmd_fit(cfg, fopts);
    return cmd_verify(cfg, vopts);
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const ComputeFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
}
