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
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autarc/fatpoint.hpp"
#include "autarc/json_io.hpp"
#include "autarc/zeta.hpp"

namespace autarc {

// A reproducible run configuration: which family of fat points to
// study, how deep, which primes and budgets, and how to normalize and
// emit results.  Serializes to a single JSON object; the content
// digest is taken over the canonical re-serialization, so field order
// in the input file does not matter.
struct Scenario {
  std::string kind = "germ";        // "germ" | "monomial"
  std::string germ = "y^2 - x^3";   // germ equation (kind = germ)
  unsigned dimension = 2;           // ambient dimension (kind = monomial)
  unsigned levels = 2;              // levels 0..levels are studied
  std::vector<std::string> target_coordinates;  // optional map target
  std::vector<std::string> target_equations;    // optional map target
  std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11};
  std::uint64_t budget = 200'000'000;
  unsigned jobs = 1;
  std::string policy = "degree";    // raw | degree | explicit | paper
  std::vector<long long> policy_exponents;  // explicit policy sequence
  long long policy_dim = 0;         // paper policy: fiber dimension
  long long policy_e = 0;           // paper policy: damping multiplier
  std::string cache_path;           // empty disables the cache
  std::string output_path;          // empty prints to stdout only
};

// Strict parse: unknown fields and out-of-range values are errors so a
// typo cannot silently run the default scenario.
Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& s);
Scenario load_scenario(const std::string& path);

// Digest of the canonical serialization (field-order independent).
std::string scenario_digest(const Scenario& s);

// The fat-point family the scenario describes.
AdmissibleSystem system_of(const Scenario& s);

// The normalization policy object, validated for the scenario's range.
NormalizationPolicy policy_of(const Scenario& s);

}  // namespace autarc
