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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "autarc/cache.hpp"
#include "autarc/digest.hpp"
#include "autarc/errors.hpp"
#include "autarc/fatpoint.hpp"
#include "autarc/json_io.hpp"
#include "autarc/presentation.hpp"
#include "autarc/scenario.hpp"

using namespace autarc;

namespace {

// Fresh scratch directory per test case, removed on destruction.
struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("autarc-io-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
  static int& counter() {
    static int value = 0;
    return value;
  }
};

SchemePresentation line_endo(unsigned n) {
  return endo_presentation(*monomial_fatpoint(1, n).algebra);
}

}  // namespace

TEST_CASE("FNV-1a matches the published reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
  CHECK(text_digest("") == "cbf29ce484222325");
  CHECK(text_digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("canonical payloads identify the counting problem") {
  const SchemePresentation a = line_endo(2);
  const SchemePresentation b = line_endo(2);
  const SchemePresentation c = line_endo(3);
  const std::string payload = canonical_payload(a);
  CHECK(payload.find("vars=") != std::string::npos);
  CHECK(payload.find("equations=") != std::string::npos);
  CHECK(canonical_payload(b) == payload);
  CHECK(presentation_digest(a) == presentation_digest(b));
  CHECK(presentation_digest(a) != presentation_digest(c));
  CHECK(presentation_digest(a).size() == 16);
}

TEST_CASE("presentation JSON round trip preserves the payload") {
  const FatPoint cusp = germ_truncation(
      parse_polynomial("y^2 - x^3", Domain::rationals(),
                       make_vars({"x", "y"})),
      2);
  const SchemePresentation pres = endo_presentation(*cusp.algebra);
  const Json j = presentation_to_json(pres);
  CHECK(j.contains("construction"));
  CHECK(j.at("variables").size() == pres.variables->size());
  CHECK(j.at("equations").size() == pres.equations.size());
  const SchemePresentation back = presentation_from_json(j);
  CHECK(canonical_payload(back) == canonical_payload(pres));
  CHECK(presentation_digest(back) == presentation_digest(pres));
}

TEST_CASE("series and rational form JSON round trips") {
  MotivicSeries series = MotivicSeries::zeros(3);
  series.coefficients[0] = MotivicClass::parse("L^-1");
  series.coefficients[2] = MotivicClass::parse("2*L^3 - 1");
  CHECK(series_from_json(series_to_json(series)) == series);

  RationalForm form;
  form.numerator = {MotivicClass::one(), MotivicClass::lefschetz(7)};
  form.factors = {DenominatorFactor{0, 1}, DenominatorFactor{1, 3}};
  form.additive = {MotivicClass::parse("L^-1")};
  const RationalForm back = rational_form_from_json(rational_form_to_json(form));
  CHECK(back.numerator == form.numerator);
  CHECK(back.factors == form.factors);
  CHECK(back.additive == form.additive);
}

TEST_CASE("count samples serialize with exact big integers") {
  std::vector<CountSample> samples(2);
  samples[0].q = 2;
  samples[0].count = Int("36893488147419103232");  // 2^65
  samples[1].q = 3;
  samples[1].count = 9;
  const auto back = samples_from_json(samples_to_json(samples));
  REQUIRE(back.size() == 2);
  CHECK(back[0].q == 2);
  CHECK(back[0].count == samples[0].count);
  CHECK(back[1].count == 9);
}

TEST_CASE("text and JSON file helpers") {
  TempDir dir;
  const std::string path = dir.file("note.json");
  write_text_file(path, "{\"k\": 1}\n");
  CHECK(read_text_file(path) == "{\"k\": 1}\n");
  CHECK(read_json_file(path).at("k") == 1);
  CHECK_THROWS_AS(read_text_file(dir.file("absent")), Error);
  write_text_file(path, "not json");
  CHECK_THROWS_AS(read_json_file(path), Error);
}

TEST_CASE("timestamps are ISO-8601 UTC") {
  const std::string stamp = utc_timestamp();
  REQUIRE(stamp.size() == 20);
  CHECK(stamp[4] == '-');
  CHECK(stamp[10] == 'T');
  CHECK(stamp.back() == 'Z');
}

TEST_CASE("a disabled cache computes every time") {
  CountCache cache("");
  CHECK_FALSE(cache.enabled());
  const SchemePresentation pres = line_endo(3);
  bool hit = true;
  const CountOutcome out = cache.counted(pres, 3, CountOptions{}, &hit);
  CHECK_FALSE(hit);
  CHECK(out.count == 9);
  CHECK_FALSE(
      cache.lookup("00", 3, "payload", 100).has_value());
}

TEST_CASE("cache cold and warm runs agree") {
  TempDir dir;
  CountCache cache(dir.file("counts.jsonl"));
  const SchemePresentation pres = line_endo(3);
  bool hit = true;
  const CountOutcome cold = cache.counted(pres, 5, CountOptions{}, &hit);
  CHECK_FALSE(hit);
  CHECK(cold.count == 25);
  const CountOutcome warm = cache.counted(pres, 5, CountOptions{}, &hit);
  CHECK(hit);
  CHECK(warm.count == cold.count);
  // The store is line-oriented JSON.
  std::ifstream in(cache.path());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(Json::parse(line).at("q") == 5);
}

TEST_CASE("cache refuses digest collisions and conflicting counts") {
  TempDir dir;
  CountCache cache(dir.file("counts.jsonl"));
  CacheRecord record;
  record.digest = "feedfacefeedface";
  record.q = 7;
  record.count = 10;
  record.budget = 1000;
  record.payload = "payload-A";
  record.timestamp = utc_timestamp();
  cache.store(record);
  // Same key, different presentation text: the digest lied.
  CHECK_THROWS_AS(cache.lookup(record.digest, 7, "payload-B", 1000), Error);
  // Same key and payload, different completed count: corruption.
  CacheRecord conflicting = record;
  conflicting.count = 11;
  CHECK_THROWS_AS(cache.store(conflicting), Error);
  // An equivalent record is absorbed silently.
  cache.store(record);
  const auto found = cache.lookup(record.digest, 7, "payload-A", 1000);
  REQUIRE(found.has_value());
  CHECK(found->count == 10);
}

TEST_CASE("exceeded verdicts are reusable only at smaller budgets") {
  TempDir dir;
  CountCache cache(dir.file("counts.jsonl"));
  CacheRecord gave_up;
  gave_up.digest = "0123456789abcdef";
  gave_up.q = 2;
  gave_up.budget_exceeded = true;
  gave_up.budget = 10;
  gave_up.payload = "payload";
  cache.store(gave_up);
  const auto small = cache.lookup(gave_up.digest, 2, "payload", 5);
  REQUIRE(small.has_value());
  CHECK(small->budget_exceeded);
  // A larger budget might succeed, so the verdict must not be reused.
  CHECK_FALSE(cache.lookup(gave_up.digest, 2, "payload", 50).has_value());
  // A later completed count supersedes the exceeded verdict.
  CacheRecord done = gave_up;
  done.budget_exceeded = false;
  done.count = 4;
  done.budget = 100;
  cache.store(done);
  const auto after = cache.lookup(gave_up.digest, 2, "payload", 50);
  REQUIRE(after.has_value());
  CHECK_FALSE(after->budget_exceeded);
  CHECK(after->count == 4);
}

TEST_CASE("corrupt cache lines are reported with their location") {
  TempDir dir;
  const std::string path = dir.file("counts.jsonl");
  write_text_file(path, "this is not a record\n");
  CountCache cache(path);
  std::string message;
  try {
    cache.lookup("00", 2, "p", 1);
  } catch (const Error& err) {
    message = err.what();
  }
  CHECK(message.find(":1") != std::string::npos);
}

TEST_CASE("scenario defaults round trip") {
  const Scenario defaults;
  const Scenario back = scenario_from_json(scenario_to_json(defaults));
  CHECK(back.kind == "germ");
  CHECK(back.germ == "y^2 - x^3");
  CHECK(back.levels == 2);
  CHECK(back.primes == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
  CHECK(back.policy == "degree");
  CHECK(scenario_digest(back) == scenario_digest(defaults));
}

TEST_CASE("scenario parsing is strict") {
  std::string message;
  try {
    scenario_from_json(Json{{"typo_field", 1}});
  } catch (const Error& err) {
    message = err.what();
  }
  CHECK(message.find("typo_field") != std::string::npos);
  CHECK_THROWS_AS(scenario_from_json(Json{{"kind", "exotic"}}), Error);
  CHECK_THROWS_AS(scenario_from_json(Json{{"primes", Json::array({4})}}),
                  Error);
  CHECK_THROWS_AS(scenario_from_json(Json{{"primes", Json::array()}}), Error);
  CHECK_THROWS_AS(scenario_from_json(Json{{"jobs", 0}}), Error);
  CHECK_THROWS_AS(scenario_from_json(Json{{"policy", "bogus"}}), Error);
  CHECK_THROWS_AS(
      scenario_from_json(Json{{"kind", "monomial"}, {"dimension", 0}}),
      Error);
  CHECK_THROWS_AS(scenario_from_json(Json::array()), Error);
}

TEST_CASE("scenario digests ignore input field order") {
  Json forward;
  forward["kind"] = "monomial";
  forward["dimension"] = 1;
  forward["levels"] = 4;
  Json reversed;
  reversed["levels"] = 4;
  reversed["dimension"] = 1;
  reversed["kind"] = "monomial";
  CHECK(scenario_digest(scenario_from_json(forward)) ==
        scenario_digest(scenario_from_json(reversed)));
}

TEST_CASE("scenario file loading and derived objects") {
  TempDir dir;
  const std::string path = dir.file("scenario.json");
  write_text_file(path,
                  "{\"kind\": \"monomial\", \"dimension\": 1,"
                  " \"levels\": 3, \"policy\": \"explicit\","
                  " \"policy_exponents\": [0, 1, 2, 3]}\n");
  const Scenario s = load_scenario(path);
  CHECK(s.dimension == 1);
  const AdmissibleSystem system = system_of(s);
  CHECK(system.level(3).rank() == 4);  // k[x]/x^4
  const NormalizationPolicy policy = policy_of(s);
  CHECK(policy.kind == NormalizationPolicy::Kind::explicit_seq);
  REQUIRE(policy.exponents.size() == 4);
  CHECK(policy.exponents[3] == 3);

  // The explicit policy must cover every studied level.
  Scenario short_list = s;
  short_list.policy_exponents = {0, 1};
  CHECK_THROWS_AS(policy_of(short_list), Error);
  CHECK_THROWS_AS(load_scenario(dir.file("missing.json")), Error);
}
