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
#include "autarc/zeta.hpp"

#include <algorithm>
#include <sstream>

#include "autarc/errors.hpp"
#include "autarc/presentation.hpp"

namespace autarc {

MotivicSeries MotivicSeries::zeros(unsigned truncation) {
  MotivicSeries s;
  s.truncation = truncation;
  s.coefficients.assign(truncation + 1, MotivicClass::zero());
  return s;
}

const MotivicClass& MotivicSeries::at(unsigned i) const {
  if (i >= coefficients.size())
    throw Error("series coefficient index " + std::to_string(i) +
                " beyond truncation " + std::to_string(truncation));
  return coefficients[i];
}

bool factor_before(const DenominatorFactor& lhs, const DenominatorFactor& rhs) {
  if (lhs.b != rhs.b) return lhs.b < rhs.b;
  return lhs.a < rhs.a;
}

void RationalForm::sort_factors() {
  std::sort(factors.begin(), factors.end(), factor_before);
}

NormalizationPolicy NormalizationPolicy::raw() {
  NormalizationPolicy p;
  p.kind = Kind::raw;
  return p;
}

NormalizationPolicy NormalizationPolicy::degree() {
  NormalizationPolicy p;
  p.kind = Kind::degree;
  return p;
}

NormalizationPolicy NormalizationPolicy::explicit_seq(
    std::vector<long long> exponents) {
  NormalizationPolicy p;
  p.kind = Kind::explicit_seq;
  p.exponents = std::move(exponents);
  return p;
}

NormalizationPolicy NormalizationPolicy::paper(long long fiber_dim,
                                               long long e) {
  NormalizationPolicy p;
  p.kind = Kind::paper;
  p.fiber_dim = fiber_dim;
  p.e = e;
  return p;
}

NormalizationPolicy::Kind parse_policy_kind(const std::string& name) {
  if (name == "raw") return NormalizationPolicy::Kind::raw;
  if (name == "degree") return NormalizationPolicy::Kind::degree;
  if (name == "explicit") return NormalizationPolicy::Kind::explicit_seq;
  if (name == "paper") return NormalizationPolicy::Kind::paper;
  throw Error("unknown normalization policy '" + name +
              "' (expected raw, degree, explicit, or paper)");
}

namespace {

long long exponent_for(const NormalizationPolicy& policy, std::size_t i,
                       const MotivicClass& raw_class,
                       const std::vector<std::size_t>& ranks) {
  switch (policy.kind) {
    case NormalizationPolicy::Kind::raw:
      return 0;
    case NormalizationPolicy::Kind::degree:
      if (raw_class.is_zero())
        throw Error("degree normalization is undefined for the zero class "
                    "(level " + std::to_string(i) + ")");
      return raw_class.max_power();
    case NormalizationPolicy::Kind::explicit_seq:
      if (i >= policy.exponents.size())
        throw Error("explicit normalization sequence has " +
                    std::to_string(policy.exponents.size()) +
                    " entries but level " + std::to_string(i) + " is needed");
      return policy.exponents[i];
    case NormalizationPolicy::Kind::paper:
      if (i >= ranks.size())
        throw Error("normalization needs the fat-point rank at level " +
                    std::to_string(i));
      return (policy.fiber_dim + policy.e) *
             (static_cast<long long>(ranks[i]) - 1);
  }
  throw Error("unreachable policy kind");
}

}  // namespace

MotivicSeries assemble_zeta(const std::vector<MotivicClass>& classes,
                            const NormalizationPolicy& policy,
                            const std::vector<std::size_t>& ranks) {
  if (classes.empty()) throw Error("cannot assemble a series from no classes");
  MotivicSeries series;
  series.truncation = static_cast<unsigned>(classes.size() - 1);
  series.coefficients.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const long long n = exponent_for(policy, i, classes[i], ranks);
    series.coefficients.push_back(
        classes[i].shifted(static_cast<int>(-n)));
  }
  return series;
}

MotivicSeries expand_rational(const RationalForm& form, unsigned truncation) {
  MotivicSeries series = MotivicSeries::zeros(truncation);
  for (std::size_t i = 0;
       i < form.numerator.size() && i <= truncation; ++i)
    series.coefficients[i] = form.numerator[i];
  // Multiply by each geometric series sum_k L^(a k) t^(b k).
  for (const DenominatorFactor& f : form.factors) {
    if (f.b == 0) throw Error("denominator factor needs period b >= 1");
    MotivicSeries next = MotivicSeries::zeros(truncation);
    for (unsigned i = 0; i <= truncation; ++i) {
      MotivicClass acc = MotivicClass::zero();
      for (unsigned k = 0; k * f.b <= i; ++k) {
        const MotivicClass& c = series.coefficients[i - k * f.b];
        if (c.is_zero()) continue;
        acc = acc + c.shifted(f.a * static_cast<int>(k));
      }
      next.coefficients[i] = acc;
    }
    series = std::move(next);
  }
  for (std::size_t i = 0;
       i < form.additive.size() && i <= truncation; ++i)
    series.coefficients[i] = series.coefficients[i] + form.additive[i];
  return series;
}

MotivicSeries multiply_by_factor(const MotivicSeries& series,
                                 const DenominatorFactor& factor) {
  if (factor.b == 0) throw Error("denominator factor needs period b >= 1");
  MotivicSeries out = MotivicSeries::zeros(series.truncation);
  for (unsigned i = 0; i <= series.truncation; ++i) {
    MotivicClass c = series.coefficients[i];
    if (i >= factor.b) {
      const MotivicClass& prev = series.coefficients[i - factor.b];
      if (!prev.is_zero()) c = c - prev.shifted(factor.a);
    }
    out.coefficients[i] = c;
  }
  return out;
}

namespace {

// Multisets of candidate factors: fewer factors first, then
// lexicographically by the sorted (b, a) sequence.  Enumerated as
// non-decreasing index tuples over the canonically ordered candidate
// list, which yields exactly that order.
bool try_candidate(const MotivicSeries& series,
                   const std::vector<DenominatorFactor>& factors,
                   unsigned degree_bound, RationalForm& out) {
  unsigned period_sum = 0;
  for (const DenominatorFactor& f : factors) period_sum += f.b;
  // Acceptance must look at a genuine tail beyond the numerator.
  if (series.truncation < degree_bound + period_sum + 2) return false;
  MotivicSeries prod = series;
  for (const DenominatorFactor& f : factors)
    prod = multiply_by_factor(prod, f);
  for (unsigned i = degree_bound + 1; i <= prod.truncation; ++i)
    if (!prod.coefficients[i].is_zero()) return false;
  out.numerator.assign(prod.coefficients.begin(),
                       prod.coefficients.begin() + degree_bound + 1);
  while (!out.numerator.empty() && out.numerator.back().is_zero())
    out.numerator.pop_back();
  out.factors = factors;
  out.additive.clear();
  return true;
}

bool search_multisets(const MotivicSeries& series,
                      const std::vector<DenominatorFactor>& candidates,
                      std::vector<DenominatorFactor>& chosen,
                      std::size_t first, std::size_t remaining,
                      unsigned degree_bound, RationalForm& out) {
  if (remaining == 0)
    return try_candidate(series, chosen, degree_bound, out);
  for (std::size_t i = first; i < candidates.size(); ++i) {
    chosen.push_back(candidates[i]);
    if (search_multisets(series, candidates, chosen, i, remaining - 1,
                         degree_bound, out))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<RationalForm> fit_rational(const MotivicSeries& series,
                                         const FitBounds& bounds) {
  std::vector<DenominatorFactor> candidates;
  for (unsigned b = 1; b <= bounds.max_period; ++b)
    for (int a = -bounds.max_abs_exponent; a <= bounds.max_abs_exponent; ++a)
      candidates.push_back(DenominatorFactor{a, b});
  // candidates are already sorted by factor_before by construction.
  for (std::size_t count = 0; count <= bounds.max_factors; ++count) {
    std::vector<DenominatorFactor> chosen;
    RationalForm out;
    if (search_multisets(series, candidates, chosen, 0, count,
                         bounds.max_numerator_degree, out))
      return out;
  }
  return std::nullopt;
}

MotivicSeries smooth_fiber_series(const MotivicClass& y0_class,
                                  unsigned fiber_dim,
                                  const std::vector<MotivicClass>& end_classes,
                                  const std::vector<std::size_t>& ranks,
                                  const NormalizationPolicy& policy) {
  if (end_classes.empty())
    throw Error("smooth-fiber series needs at least the level-0 class");
  if (ranks.size() < end_classes.size())
    throw Error("smooth-fiber series needs one rank per level");
  std::vector<MotivicClass> raw;
  raw.reserve(end_classes.size());
  for (std::size_t i = 0; i < end_classes.size(); ++i) {
    const int shift =
        static_cast<int>(fiber_dim) * (static_cast<int>(ranks[i]) - 1);
    raw.push_back((y0_class * end_classes[i]).shifted(shift));
  }
  return assemble_zeta(raw, policy, ranks);
}

MotivicClass interpolated_class(const SchemePresentation& pres,
                                const std::vector<std::uint64_t>& primes,
                                const CountOptions& options) {
  if (primes.size() < 2)
    throw Error("class interpolation needs at least two primes");
  std::vector<CountSample> samples;
  samples.reserve(primes.size());
  for (const std::uint64_t q : primes) {
    const CountOutcome outcome = count_points(pres, q, options);
    if (outcome.budget_exceeded)
      throw Error("node budget exhausted while counting points at q = " +
                  std::to_string(q));
    samples.push_back(CountSample{q, outcome.count});
  }
  const std::size_t degree_bound = primes.size() - 2;
  const InterpolationResult result = interpolate_class(samples, degree_bound);
  if (!result.ok)
    throw Error("point counts do not interpolate to a class: " +
                result.failure);
  return result.value;
}

MotivicSeries classical_igusa_series(const Polynomial& f, unsigned dim,
                                     unsigned truncation,
                                     const std::vector<std::uint64_t>& primes,
                                     const CountOptions& options) {
  MotivicSeries series = MotivicSeries::zeros(truncation);
  for (unsigned i = 0; i <= truncation; ++i) {
    const SchemePresentation jets = jet_presentation(f, i);
    MotivicClass jet_class;
    try {
      jet_class = interpolated_class(jets, primes, options);
    } catch (const Error& err) {
      throw Error("jet level " + std::to_string(i) + ": " + err.what());
    }
    series.coefficients[i] =
        jet_class.shifted(-static_cast<int>(dim) * static_cast<int>(i));
  }
  return series;
}

namespace {

std::string join_series(const MotivicSeries& series, bool latex) {
  std::ostringstream out;
  bool first = true;
  for (unsigned i = 0; i <= series.truncation; ++i) {
    const MotivicClass& c = series.coefficients[i];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    const std::string body = latex ? c.to_latex() : c.to_string();
    const bool wrap = body.find(' ') != std::string::npos && i > 0;
    if (wrap)
      out << "(" << body << ")";
    else
      out << body;
    if (i == 1)
      out << (latex ? " t" : "*t");
    else if (i > 1)
      out << (latex ? " t^{" + std::to_string(i) + "}"
                    : "*t^" + std::to_string(i));
  }
  if (first) out << "0";
  if (series.truncation + 1 > 0) {
    out << (latex ? " + O(t^{" + std::to_string(series.truncation + 1) + "})"
                  : " + O(t^" + std::to_string(series.truncation + 1) + ")");
  }
  return out.str();
}

std::string one_factor(const DenominatorFactor& f, bool latex) {
  std::ostringstream out;
  const std::string ell = latex ? "\\mathbb{L}" : "L";
  out << "(1 - ";
  if (f.a == 0) {
    // plain t^b
  } else if (f.a == 1) {
    out << ell << (latex ? " " : "*");
  } else {
    if (latex)
      out << ell << "^{" << f.a << "} ";
    else
      out << ell << "^" << f.a << "*";
  }
  if (f.b == 1)
    out << "t";
  else if (latex)
    out << "t^{" << f.b << "}";
  else
    out << "t^" << f.b;
  out << ")";
  return out.str();
}

std::string poly_in_t(const std::vector<MotivicClass>& coeffs, bool latex) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const MotivicClass& c = coeffs[i];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    const std::string body = latex ? c.to_latex() : c.to_string();
    const bool wrap = body.find(' ') != std::string::npos && i > 0;
    out << (wrap ? "(" + body + ")" : body);
    if (i == 1)
      out << (latex ? " t" : "*t");
    else if (i > 1)
      out << (latex ? " t^{" + std::to_string(i) + "}"
                    : "*t^" + std::to_string(i));
  }
  if (first) out << "0";
  return out.str();
}

std::string form_to_text(const RationalForm& form, bool latex) {
  std::ostringstream out;
  if (!form.additive.empty()) out << poly_in_t(form.additive, latex) << " + ";
  if (form.factors.empty()) {
    out << poly_in_t(form.numerator, latex);
    return out.str();
  }
  std::ostringstream denom;
  for (const DenominatorFactor& f : form.factors)
    denom << one_factor(f, latex);
  if (latex) {
    out << "\\frac{" << poly_in_t(form.numerator, true) << "}{" << denom.str()
        << "}";
  } else {
    out << "(" << poly_in_t(form.numerator, false) << ") / (" << denom.str()
        << ")";
  }
  return out.str();
}

}  // namespace

std::string to_string(const MotivicSeries& series) {
  return join_series(series, false);
}

std::string to_latex(const MotivicSeries& series) {
  return join_series(series, true);
}

std::string to_string(const RationalForm& form) {
  return form_to_text(form, false);
}

std::string to_latex(const RationalForm& form) {
  return form_to_text(form, true);
}

}  // namespace autarc
