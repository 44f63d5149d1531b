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

// Runs the eight acceptance checks, one verification suite each, and
// prints a single PASS/FAIL line per criterion.  Exits nonzero when
// any criterion fails.

#include <cstdio>

#include "autarc/verify.hpp"

int main() {
  const struct {
    const char* label;
    const char* suite;
  } criteria[] = {
      {"criterion 1 (monomial closed forms certified by counting)",
       "closed-forms"},
      {"criterion 2 (line classes recovered by hold-out interpolation)",
       "interpolated-line-classes"},
      {"criterion 3 (cusp auto-arc classes certified at low levels)",
       "cusp-classes"},
      {"criterion 4 (cusp endomorphism count factors through jets)",
       "cusp-factorization"},
      {"criterion 5 (trivial-deformation product identity)",
       "product-identity"},
      {"criterion 6 (damped jet series of a smooth curve is constant)",
       "classical-series"},
      {"criterion 7 (rational closed form expand/fit round trip)",
       "series-round-trip"},
      {"criterion 8 (exhaustive algebraic property suites)",
       "property-suites"},
  };

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    autarc::SuiteReport report;
    bool threw = false;
    try {
      report = autarc::run_suite(criterion.suite);
    } catch (const std::exception& e) {
      threw = true;
      std::printf("%s: FAIL\n  exception: %s\n", criterion.label, e.what());
    }
    if (threw) {
      all_ok = false;
      continue;
    }
    std::printf("%s: %s\n", criterion.label, report.ok ? "PASS" : "FAIL");
    if (!report.ok) {
      all_ok = false;
      for (const autarc::CheckResult& check : report.checks)
        if (!check.ok)
          std::printf("  failed: %s — %s\n", check.label.c_str(),
                      check.detail.c_str());
    }
  }
  return all_ok ? 0 : 1;
}
