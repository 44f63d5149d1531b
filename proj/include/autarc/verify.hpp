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

#include <string>
#include <vector>

#include "autarc/count.hpp"

namespace autarc {

struct CheckResult {
  std::string label;
  bool ok = false;
  std::string detail;  // measured vs expected, for the report table
};

struct SuiteReport {
  std::string suite;
  bool ok = false;  // conjunction of the checks
  std::vector<CheckResult> checks;
};

// Names accepted by run_suite, in report order:
//   closed-forms              endomorphism/automorphism closed forms of
//                             monomial fat points, certified by counting
//   interpolated-line-classes line closed forms recovered by hold-out
//                             interpolation
//   cusp-classes              certified low-level cusp auto-arc classes
//   cusp-factorization        level-4 cusp endomorphism count factors as
//                             q^7 times the order-3 cusp jet count
//   product-identity          trivial-deformation count is jet count
//                             times endomorphism count
//   classical-series          damped jet series of a smooth curve is
//                             constant
//   series-round-trip         rational-form expand/fit round trip
//   property-suites           algebraic property checks (Buchberger
//                             criterion, order-independent rank, monoid
//                             closure, count insensitivity, product law,
//                             interpolation hold-outs)
std::vector<std::string> verify_suite_names();

// Runs one suite; throws Error for an unknown name.
SuiteReport run_suite(const std::string& name, const CountOptions& opts = {});

}  // namespace autarc
