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
#include "autarc/count.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <thread>

#include "autarc/errors.hpp"

namespace autarc {

namespace {

using EqPtr = std::shared_ptr<const Polynomial>;

// Substitute variable `var` := `value` and renormalize mod q.
Polynomial assign_variable(const Polynomial& p, std::size_t var,
                           std::uint64_t value, std::uint64_t q) {
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    const unsigned e = t.mono.exponent(var);
    if (e == 0) {
      terms.push_back(t);
      continue;
    }
    const std::uint64_t scale = pow_mod(value % q, e, q);
    if (scale == 0) continue;
    std::vector<unsigned> exps = t.mono.exponents();
    exps[var] = 0;
    terms.push_back(Term{Monomial(std::move(exps)),
                         t.coeff * Rat(Int(scale))});
  }
  return Polynomial(p.domain(), p.vars(), std::move(terms));
}

Int pow_int(std::uint64_t q, std::size_t e) {
  Int acc = 1;
  for (std::size_t i = 0; i < e; ++i) acc *= q;
  return acc;
}

// One branch of the search with its own node allowance; verdicts stay
// deterministic because a branch that would push the shared total over
// the budget necessarily exhausts its private allowance too.
class Searcher {
 public:
  Searcher(std::uint64_t q, std::size_t nvars, std::uint64_t budget)
      : q_(q), nvars_(nvars), budget_(budget) {}

  std::uint64_t nodes() const { return nodes_; }
  bool exceeded() const { return exceeded_; }

  // Count solutions extending the current partial assignment, where
  // `level` is the next variable and only values congruent to `first`
  // modulo `step` are explored at this level (root partitioning).
  Int count(std::size_t level, const std::vector<EqPtr>& eqs,
            std::uint64_t first, std::uint64_t step) {
    if (eqs.empty()) {
      // Free tail: remaining variables are unconstrained.
      if (level >= nvars_) return 1;
      const Int tail = pow_int(q_, nvars_ - level - 1);
      Int values_here = 0;
      for (std::uint64_t v = first; v < q_; v += step) ++values_here;
      return values_here * tail;
    }
    Int total = 0;
    for (std::uint64_t value = first; value < q_; value += step) {
      if (++nodes_ > budget_) {
        exceeded_ = true;
        return total;
      }
      std::vector<EqPtr> next;
      next.reserve(eqs.size());
      bool dead = false;
      for (const EqPtr& eq : eqs) {
        if (!eq->uses_variable(level)) {
          next.push_back(eq);
          continue;
        }
        Polynomial reduced = assign_variable(*eq, level, value, q_);
        if (reduced.is_zero()) continue;  // satisfied
        if (reduced.is_constant()) {      // nonzero constant: contradiction
          dead = true;
          break;
        }
        next.push_back(std::make_shared<const Polynomial>(std::move(reduced)));
      }
      if (dead) continue;
      total += count(level + 1, next, 0, 1);
      if (exceeded_) return total;
    }
    return total;
  }

 private:
  std::uint64_t q_;
  std::size_t nvars_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

// Reduce the equations mod q.  Returns false when a nonzero-constant
// equation makes the solution set empty outright.
bool prepare_equations(const SchemePresentation& pres, std::uint64_t q,
                       std::vector<EqPtr>& out) {
  for (const Polynomial& eq : pres.equations) {
    Polynomial reduced = eq.reduce_mod(q);
    if (reduced.is_zero()) continue;
    if (reduced.is_constant()) return false;
    out.push_back(std::make_shared<const Polynomial>(std::move(reduced)));
  }
  return true;
}

}  // namespace

CountOutcome count_points(const SchemePresentation& pres, std::uint64_t q,
                          const CountOptions& opts) {
  if (!is_prime(q))
    throw Error("counting field size " + std::to_string(q) + " is not prime");
  CountOutcome outcome;
  std::vector<EqPtr> eqs;
  if (!prepare_equations(pres, q, eqs)) {
    outcome.count = 0;
    return outcome;
  }
  const std::size_t n = pres.nvars();
  if (eqs.empty()) {
    outcome.count = pow_int(q, n);
    return outcome;
  }

  const unsigned workers =
      std::min<std::uint64_t>(std::max(1u, opts.jobs), q);
  std::vector<Int> counts(workers, Int(0));
  std::vector<std::uint64_t> nodes(workers, 0);
  std::vector<char> exceeded(workers, 0);
  auto run = [&](unsigned w) {
    Searcher searcher(q, n, opts.budget);
    counts[w] = searcher.count(0, eqs, w, workers);
    nodes[w] = searcher.nodes();
    exceeded[w] = searcher.exceeded() ? 1 : 0;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (unsigned w = 0; w < workers; ++w) {
    outcome.count += counts[w];
    outcome.nodes += nodes[w];
    if (exceeded[w]) outcome.budget_exceeded = true;
  }
  if (outcome.nodes > opts.budget) outcome.budget_exceeded = true;
  if (outcome.budget_exceeded) outcome.count = 0;
  return outcome;
}

namespace {

void enumerate_rec(std::size_t level, const std::vector<EqPtr>& eqs,
                   std::uint64_t q, std::size_t nvars,
                   std::vector<std::uint64_t>& partial,
                   std::vector<std::vector<std::uint64_t>>& out,
                   std::uint64_t budget, std::uint64_t& nodes) {
  if (level == nvars) {
    if (eqs.empty()) out.push_back(partial);
    return;
  }
  for (std::uint64_t value = 0; value < q; ++value) {
    if (++nodes > budget) throw Error("enumeration budget exceeded");
    std::vector<EqPtr> next;
    bool dead = false;
    for (const EqPtr& eq : eqs) {
      if (!eq->uses_variable(level)) {
        next.push_back(eq);
        continue;
      }
      Polynomial reduced = assign_variable(*eq, level, value, q);
      if (reduced.is_zero()) continue;
      if (reduced.is_constant()) {
        dead = true;
        break;
      }
      next.push_back(std::make_shared<const Polynomial>(std::move(reduced)));
    }
    if (dead) continue;
    partial.push_back(value);
    enumerate_rec(level + 1, next, q, nvars, partial, out, budget, nodes);
    partial.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> enumerate_points(
    const SchemePresentation& pres, std::uint64_t q, std::uint64_t budget) {
  if (!is_prime(q))
    throw Error("counting field size " + std::to_string(q) + " is not prime");
  std::vector<EqPtr> eqs;
  std::vector<std::vector<std::uint64_t>> out;
  if (!prepare_equations(pres, q, eqs)) return out;
  std::vector<std::uint64_t> partial;
  std::uint64_t nodes = 0;
  enumerate_rec(0, eqs, q, pres.nvars(), partial, out, budget, nodes);
  return out;
}

InterpolationResult interpolate_class(std::span<const CountSample> samples,
                                      std::size_t degree_bound) {
  if (samples.size() < degree_bound + 2)
    throw Error("interpolation needs degree_bound + 2 samples "
                "(including a hold-out)");
  {
    std::set<std::uint64_t> seen;
    for (const CountSample& s : samples) {
      if (!seen.insert(s.q).second)
        throw Error("duplicate prime " + std::to_string(s.q) + " in samples");
    }
  }
  InterpolationResult result;
  result.used.assign(samples.begin(), samples.begin() + degree_bound + 1);
  result.holdout.assign(samples.begin() + degree_bound + 1, samples.end());

  // Lagrange: sum over nodes of count_i * prod_{j != i} (X - q_j)/(q_i - q_j),
  // accumulated as dense coefficients in X.
  std::vector<Rat> coeffs(degree_bound + 1, Rat(0));
  for (std::size_t i = 0; i < result.used.size(); ++i) {
    std::vector<Rat> basis = {Rat(1)};  // expanding numerator product
    Rat denom = 1;
    for (std::size_t j = 0; j < result.used.size(); ++j) {
      if (j == i) continue;
      const Rat qj = Rat(Int(result.used[j].q));
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * qj;
      }
      basis = std::move(next);
      denom *= Rat(Int(result.used[i].q)) - qj;
    }
    const Rat scale = Rat(result.used[i].count) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k)
      coeffs[k] += basis[k] * scale;
  }

  MotivicClass value;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (denominator(coeffs[k]) != 1) {
      result.failure = "coefficient of L^" + std::to_string(k) +
                       " is not an integer; counts are not polynomial in q "
                       "at this degree bound";
      return result;
    }
    value = value + MotivicClass::from_int(numerator(coeffs[k])) *
                        MotivicClass::lefschetz(static_cast<int>(k));
  }
  for (const CountSample& s : samples) {
    if (value.evaluate_at(Rat(Int(s.q))) != Rat(s.count)) {
      result.failure =
          "interpolated class disagrees with the sample at q = " +
          std::to_string(s.q);
      return result;
    }
  }
  result.ok = true;
  result.value = value;
  return result;
}

CertifyReport certify(const SchemePresentation& pres,
                      const MotivicClass& claimed,
                      std::span<const std::uint64_t> primes,
                      const CountOptions& opts) {
  if (!claimed.is_zero() && claimed.min_power() < 0)
    throw Error("claimed class has negative powers of L; "
                "counts can only certify polynomial classes");
  CertifyReport report;
  report.ok = true;
  for (const std::uint64_t q : primes) {
    CertifyRow row;
    row.q = q;
    const CountOutcome outcome = count_points(pres, q, opts);
    row.budget_exceeded = outcome.budget_exceeded;
    row.counted = outcome.count;
    row.expected = claimed.evaluate_at(Rat(Int(q)));
    row.match = !outcome.budget_exceeded && Rat(outcome.count) == row.expected;
    if (!row.match) report.ok = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace autarc
