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
#include <optional>
#include <string>
#include <vector>

#include "autarc/count.hpp"
#include "autarc/fatpoint.hpp"
#include "autarc/motive.hpp"

namespace autarc {

// A generating series truncated at an explicit order: coefficients of
// t^0 .. t^truncation.  Arithmetic never mixes truncations silently.
struct MotivicSeries {
  unsigned truncation = 0;
  std::vector<MotivicClass> coefficients;  // size truncation + 1

  static MotivicSeries zeros(unsigned truncation);
  const MotivicClass& at(unsigned i) const;
  bool operator==(const MotivicSeries& o) const = default;
};

// One denominator factor (1 - L^a t^b).
struct DenominatorFactor {
  int a = 0;
  unsigned b = 1;
  bool operator==(const DenominatorFactor& o) const = default;
};

// Canonical factor order: by period b, then by exponent a.
bool factor_before(const DenominatorFactor& lhs, const DenominatorFactor& rhs);

// additive + numerator / prod (1 - L^a t^b).  The additive polynomial
// part is optional (empty when absent); factors are kept sorted
// canonically.
struct RationalForm {
  std::vector<MotivicClass> numerator;      // coefficient of t^i
  std::vector<DenominatorFactor> factors;   // sorted by factor_before
  std::vector<MotivicClass> additive;       // optional polynomial part

  void sort_factors();
};

// How raw coefficient classes are damped to series coefficients
// c_i = [A_i] * L^(-n_i).
struct NormalizationPolicy {
  enum class Kind { raw, degree, explicit_seq, paper };
  Kind kind = Kind::degree;
  // explicit_seq: user-supplied exponents n_i covering the whole range.
  std::vector<long long> exponents;
  // paper: n_i = (dim + e) * (rank_i - 1), needing the fat-point ranks.
  long long fiber_dim = 0;
  long long e = 0;

  static NormalizationPolicy raw();
  static NormalizationPolicy degree();
  static NormalizationPolicy explicit_seq(std::vector<long long> exponents);
  static NormalizationPolicy paper(long long fiber_dim, long long e);
};

// Parse "raw" | "degree" | "explicit" | "paper"; throws Error otherwise.
NormalizationPolicy::Kind parse_policy_kind(const std::string& name);

// Series with coefficient i = classes[i] * L^(-n_i) per the policy.
// ranks (one per level) are consulted only by the paper policy.
// Errors: degree policy meeting a zero class; explicit sequence or
// rank list not covering the range.
MotivicSeries assemble_zeta(const std::vector<MotivicClass>& classes,
                            const NormalizationPolicy& policy,
                            const std::vector<std::size_t>& ranks = {});

// Exact expansion of a rational form to the requested truncation.
MotivicSeries expand_rational(const RationalForm& form, unsigned truncation);

// series * (1 - L^a t^b), same truncation.
MotivicSeries multiply_by_factor(const MotivicSeries& series,
                                 const DenominatorFactor& factor);

// Search bounds for rational-form recognition.
struct FitBounds {
  int max_abs_exponent = 8;          // |a| <= this
  unsigned max_period = 4;           // b <= this
  unsigned max_factors = 2;          // at most this many factors
  unsigned max_numerator_degree = 8; // numerator degree <= this
};

// Recognize the series as numerator / prod (1 - L^a t^b): candidate
// factor multisets are enumerated canonically (fewer factors first,
// then lexicographically by sorted (b, a)); a candidate needs
// truncation >= max_numerator_degree + sum(b) + 2 so that acceptance
// verifies a real tail.  The numerator is the product
// series * denominator truncated at the degree bound; the candidate is
// accepted iff every later coefficient of that product vanishes.
// Returns the first accepted form, or nullopt when none fits.
std::optional<RationalForm> fit_rational(const MotivicSeries& series,
                                         const FitBounds& bounds);

// Coefficient i = y0_class * end_classes[i] * L^(fiber_dim * (ranks[i]-1)),
// then normalized per the policy: the smooth-fiber factorization of
// hom spaces over a fat point.  end_classes and ranks are per level
// 0..T with T = end_classes.size() - 1.
MotivicSeries smooth_fiber_series(const MotivicClass& y0_class,
                                  unsigned fiber_dim,
                                  const std::vector<MotivicClass>& end_classes,
                                  const std::vector<std::size_t>& ranks,
                                  const NormalizationPolicy& policy);

// Point counts of the presentation at the given primes, fitted to a
// polynomial in L of degree at most primes.size() - 2 (the last sample
// is a hold-out).  Throws Error on budget exhaustion or when the
// counts admit no such polynomial.
MotivicClass interpolated_class(const SchemePresentation& pres,
                                const std::vector<std::uint64_t>& primes,
                                const CountOptions& options = {});

// Coefficient i = [jet space of f at order i] * L^(-dim * i), the
// classical damping for a hypersurface germ of the given dimension.
// Jet classes are produced by interpolated_class; failures carry the
// offending level in the message.
MotivicSeries classical_igusa_series(const Polynomial& f, unsigned dim,
                                     unsigned truncation,
                                     const std::vector<std::uint64_t>& primes,
                                     const CountOptions& options = {});

std::string to_string(const MotivicSeries& series);
std::string to_latex(const MotivicSeries& series);
std::string to_string(const RationalForm& form);
std::string to_latex(const RationalForm& form);

}  // namespace autarc
