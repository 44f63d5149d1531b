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
#include <span>
#include <string>
#include <vector>

#include "autarc/motive.hpp"
#include "autarc/presentation.hpp"

namespace autarc {

struct CountOptions {
  std::uint64_t budget = 200'000'000;  // visited-node limit
  unsigned jobs = 1;                   // root-branch parallelism
};

// Result of a counting run.  Exceeding the node budget is an ordinary
// outcome, never a wrong count.
struct CountOutcome {
  bool budget_exceeded = false;
  Int count = 0;             // valid only when the budget held
  std::uint64_t nodes = 0;   // assignments visited (capped per branch)
};

// Exact number of F_q solutions of the presentation's equations,
// found by depth-first assignment in the declared variable order with
// incremental partial evaluation.  A branch dies as soon as an
// equation becomes a nonzero constant; once no equations remain the
// free tail contributes q^(remaining) without traversal.  With
// several jobs the root variable's branches run concurrently; the
// verdict does not depend on the job count.
CountOutcome count_points(const SchemePresentation& pres, std::uint64_t q,
                          const CountOptions& opts = {});

// All solutions, each a value per variable in declared order.  Meant
// for small search spaces; throws Error when the budget is exhausted.
std::vector<std::vector<std::uint64_t>> enumerate_points(
    const SchemePresentation& pres, std::uint64_t q,
    std::uint64_t budget = 50'000'000);

struct CountSample {
  std::uint64_t q = 0;
  Int count = 0;
};

// Outcome of fitting counts to a polynomial in q.
struct InterpolationResult {
  bool ok = false;
  std::string failure;     // set when !ok
  MotivicClass value;      // the interpolated class when ok
  std::vector<CountSample> used;     // interpolation nodes
  std::vector<CountSample> holdout;  // verified but unused samples
};

// Lagrange interpolation through the first degree_bound+1 samples,
// validated exactly on the remaining hold-out samples.  Fails (ok =
// false) when a coefficient is not an integer or a hold-out count
// disagrees; throws on duplicate primes or too few samples.
InterpolationResult interpolate_class(std::span<const CountSample> samples,
                                      std::size_t degree_bound);

// Per-prime comparison of actual counts against a claimed class.
struct CertifyRow {
  std::uint64_t q = 0;
  bool budget_exceeded = false;
  Int counted = 0;
  Rat expected = 0;
  bool match = false;
};
struct CertifyReport {
  bool ok = false;  // conjunction over rows
  std::vector<CertifyRow> rows;
};

// Claimed classes must be polynomial in L (no negative powers).
CertifyReport certify(const SchemePresentation& pres,
                      const MotivicClass& claimed,
                      std::span<const std::uint64_t> primes,
                      const CountOptions& opts = {});

}  // namespace autarc
