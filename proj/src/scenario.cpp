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
#include "autarc/scenario.hpp"

#include <set>

#include "autarc/digest.hpp"
#include "autarc/errors.hpp"

namespace autarc {

namespace {

const std::set<std::string>& known_fields() {
  static const std::set<std::string> fields = {
      "kind",          "germ",          "dimension",
      "levels",        "target_coordinates", "target_equations",
      "primes",        "budget",        "jobs",
      "policy",        "policy_exponents",   "policy_dim",
      "policy_e",      "cache_path",    "output_path"};
  return fields;
}

}  // namespace

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw Error("scenario must be a JSON object");
  for (const auto& item : j.items())
    if (!known_fields().count(item.key()))
      throw Error("unknown scenario field '" + item.key() + "'");
  Scenario s;
  try {
    if (j.contains("kind")) s.kind = j["kind"].get<std::string>();
    if (j.contains("germ")) s.germ = j["germ"].get<std::string>();
    if (j.contains("dimension")) s.dimension = j["dimension"].get<unsigned>();
    if (j.contains("levels")) s.levels = j["levels"].get<unsigned>();
    if (j.contains("target_coordinates"))
      s.target_coordinates =
          j["target_coordinates"].get<std::vector<std::string>>();
    if (j.contains("target_equations"))
      s.target_equations = j["target_equations"].get<std::vector<std::string>>();
    if (j.contains("primes"))
      s.primes = j["primes"].get<std::vector<std::uint64_t>>();
    if (j.contains("budget")) s.budget = j["budget"].get<std::uint64_t>();
    if (j.contains("jobs")) s.jobs = j["jobs"].get<unsigned>();
    if (j.contains("policy")) s.policy = j["policy"].get<std::string>();
    if (j.contains("policy_exponents"))
      s.policy_exponents =
          j["policy_exponents"].get<std::vector<long long>>();
    if (j.contains("policy_dim"))
      s.policy_dim = j["policy_dim"].get<long long>();
    if (j.contains("policy_e")) s.policy_e = j["policy_e"].get<long long>();
    if (j.contains("cache_path"))
      s.cache_path = j["cache_path"].get<std::string>();
    if (j.contains("output_path"))
      s.output_path = j["output_path"].get<std::string>();
  } catch (const Json::exception& err) {
    throw Error(std::string("malformed scenario: ") + err.what());
  }
  if (s.kind != "germ" && s.kind != "monomial")
    throw Error("scenario kind must be \"germ\" or \"monomial\", got \"" +
                s.kind + "\"");
  if (s.kind == "monomial" && s.dimension == 0)
    throw Error("monomial scenario needs dimension >= 1");
  if (s.primes.empty()) throw Error("scenario needs at least one prime");
  for (const std::uint64_t p : s.primes)
    if (!is_prime(p))
      throw Error("scenario primes must be prime; " + std::to_string(p) +
                  " is not");
  if (s.jobs == 0) throw Error("scenario jobs must be >= 1");
  parse_policy_kind(s.policy);  // validates the name
  return s;
}

Json scenario_to_json(const Scenario& s) {
  Json j;
  j["kind"] = s.kind;
  j["germ"] = s.germ;
  j["dimension"] = s.dimension;
  j["levels"] = s.levels;
  j["target_coordinates"] = s.target_coordinates;
  j["target_equations"] = s.target_equations;
  j["primes"] = s.primes;
  j["budget"] = s.budget;
  j["jobs"] = s.jobs;
  j["policy"] = s.policy;
  j["policy_exponents"] = s.policy_exponents;
  j["policy_dim"] = s.policy_dim;
  j["policy_e"] = s.policy_e;
  j["cache_path"] = s.cache_path;
  j["output_path"] = s.output_path;
  return j;
}

Scenario load_scenario(const std::string& path) {
  return scenario_from_json(read_json_file(path));
}

std::string scenario_digest(const Scenario& s) {
  return text_digest(scenario_to_json(s).dump());
}

AdmissibleSystem system_of(const Scenario& s) {
  if (s.kind == "monomial") return AdmissibleSystem::monomial(s.dimension);
  const VarsPtr vars = make_vars({"x", "y"});
  const Polynomial f =
      parse_polynomial(s.germ, Domain::rationals(), vars);
  return AdmissibleSystem::germ(f);
}

NormalizationPolicy policy_of(const Scenario& s) {
  switch (parse_policy_kind(s.policy)) {
    case NormalizationPolicy::Kind::raw:
      return NormalizationPolicy::raw();
    case NormalizationPolicy::Kind::degree:
      return NormalizationPolicy::degree();
    case NormalizationPolicy::Kind::explicit_seq:
      if (s.policy_exponents.size() < s.levels + 1)
        throw Error("explicit policy needs " + std::to_string(s.levels + 1) +
                    " exponents (levels 0.." + std::to_string(s.levels) +
                    "), got " + std::to_string(s.policy_exponents.size()));
      return NormalizationPolicy::explicit_seq(s.policy_exponents);
    case NormalizationPolicy::Kind::paper:
      return NormalizationPolicy::paper(s.policy_dim, s.policy_e);
  }
  throw Error("unreachable policy kind");
}

}  // namespace autarc
