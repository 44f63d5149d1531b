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
#include "autarc/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "autarc/errors.hpp"

namespace autarc {

const Term& leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error("zero polynomial has no leading term");
  const auto terms = f.terms();
  if (order.is_canonical()) return terms.front();  // storage order is grevlex
  const Term* best = &terms.front();
  for (const Term& t : terms.subspan(1)) {
    if (order.less(best->mono, t.mono)) best = &t;
  }
  return *best;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  const Term& lf = leading_term(f, order);
  const Term& lg = leading_term(g, order);
  const Monomial l = Monomial::lcm(lf.mono, lg.mono);
  // (l / lt(f)) * f  -  (l / lt(g)) * g
  return f.times_monomial(l.divided_by(lf.mono), f.domain().invert(lf.coeff)) -
         g.times_monomial(l.divided_by(lg.mono), g.domain().invert(lg.coeff));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order) {
  Polynomial p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = leading_term(p, order);
    const Polynomial* reducer = nullptr;
    for (const Polynomial& g : basis) {
      if (g.is_zero()) continue;
      if (leading_term(g, order).mono.divides(lt.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      const Term& lg = leading_term(*reducer, order);
      const Rat scale = lt.coeff * p.domain().invert(lg.coeff);
      p = p - reducer->times_monomial(lt.mono.divided_by(lg.mono), scale);
    } else {
      remainder.push_back(lt);
      p = p - Polynomial::from_monomial(p.domain(), p.vars(), lt.mono,
                                        lt.coeff);
    }
  }
  return Polynomial(f.domain(), f.vars(), std::move(remainder));
}

namespace {

struct Pair {
  std::size_t i, j;      // i < j, indices into the working basis
  Monomial lcm_mono;
};

// Scale a nonzero polynomial to keep intermediate coefficients small:
// over the rationals, clear denominators and divide by the content so
// the result is a primitive integer polynomial; over a finite field,
// make it monic.
Polynomial tidy_scale(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  if (f.domain().kind() != DomainKind::rational)
    return f.scaled(f.domain().invert(leading_term(f, order).coeff));
  Int den_lcm = 1;
  for (const Term& t : f.terms()) {
    const Int d = denominator(t.coeff);
    den_lcm = den_lcm / gcd(den_lcm, d) * d;
  }
  Int content = 0;
  for (const Term& t : f.terms()) {
    Int n = numerator(t.coeff) * (den_lcm / denominator(t.coeff));
    if (n < 0) n = -n;
    content = gcd(content, n);
  }
  Rat scale = Rat(den_lcm, content);
  if (leading_term(f, order).coeff < 0) scale = -scale;
  return f.scaled(scale);
}

// Interreduce and normalize a basis whose leading terms already generate
// the leading-term ideal: drop redundant members, fully reduce each one
// against the others, and scale to a leading coefficient of one.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis,
                                     const MonomialOrder& order) {
  // Minimal generating set of the leading-term ideal.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& mi = leading_term(basis[i], order).mono;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mj = leading_term(basis[j], order).mono;
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Tail reduction of each member against all the others.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial nf = normal_form(minimal[i], others, order);
    if (!nf.is_zero()) {
      const Rat lc = leading_term(nf, order).coeff;
      reduced.push_back(nf.scaled(nf.domain().invert(lc)));
    }
  }
  std::sort(reduced.begin(), reduced.end(),
            [&order](const Polynomial& a, const Polynomial& b) {
              return order.less(leading_term(a, order).mono,
                                leading_term(b, order).mono);
            });
  return reduced;
}

}  // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   const MonomialOrder& order) {
  if (gens.empty()) return {};
  const Domain domain = gens.front().domain();
  if (!domain.is_field())
    throw Error("Groebner bases need field coefficients, got " +
                domain.describe());
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (!g.is_zero()) basis.push_back(tidy_scale(g, order));
  }
  if (basis.empty()) return {};

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> handled;
  auto push_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back(Pair{i, j,
                             Monomial::lcm(leading_term(basis[i], order).mono,
                                           leading_term(basis[j], order).mono)});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_with(j);

  while (!pending.empty()) {
    // Normal selection: smallest lcm degree, ties broken by the order.
    std::size_t pick = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const Monomial& a = pending[k].lcm_mono;
      const Monomial& b = pending[pick].lcm_mono;
      if (a.degree() < b.degree() ||
          (a.degree() == b.degree() && order.less(a, b)))
        pick = k;
    }
    const Pair pair = pending[pick];
    pending.erase(pending.begin() + pick);
    handled.insert({pair.i, pair.j});

    const Monomial& li = leading_term(basis[pair.i], order).mono;
    const Monomial& lj = leading_term(basis[pair.j], order).mono;
    // Coprimality criterion: disjoint leading supports reduce to zero.
    if (pair.lcm_mono == li * lj) continue;
    // Chain criterion: a third member dividing the lcm whose pairs with
    // both ends are already settled makes this pair redundant.
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!leading_term(basis[k], order).mono.divides(pair.lcm_mono)) continue;
      const auto key_ik = std::minmax(pair.i, k);
      const auto key_jk = std::minmax(pair.j, k);
      if (handled.count({key_ik.first, key_ik.second}) &&
          handled.count({key_jk.first, key_jk.second}))
        chained = true;
    }
    if (chained) continue;

    const Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], order);
    const Polynomial nf = normal_form(s, basis, order);
    if (!nf.is_zero()) {
      basis.push_back(tidy_scale(nf, order));
      push_pairs_with(basis.size() - 1);
    }
  }
  return reduce_basis(std::move(basis), order);
}

bool is_zero_dimensional(std::span<const Polynomial> gb,
                         const MonomialOrder& order) {
  if (gb.empty()) return false;
  const std::size_t n = gb.front().nvars();
  // The ideal is the whole ring when 1 is a leading monomial.
  for (const Polynomial& g : gb) {
    if (leading_term(g, order).mono.is_one()) return true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool pure_power = false;
    for (const Polynomial& g : gb) {
      const Monomial& lm = leading_term(g, order).mono;
      if (lm.exponent(i) == 0 || lm.degree() != lm.exponent(i)) continue;
      pure_power = true;
      break;
    }
    if (!pure_power) return false;
  }
  return true;
}

std::vector<Monomial> standard_monomials(std::span<const Polynomial> gb,
                                         const MonomialOrder& order) {
  if (!is_zero_dimensional(gb, order))
    throw NotZeroDimensional("quotient algebra is not finite dimensional");
  const std::size_t n = gb.front().nvars();
  std::vector<Monomial> leads;
  for (const Polynomial& g : gb) leads.push_back(leading_term(g, order).mono);
  for (const Monomial& lm : leads) {
    if (lm.is_one()) return {};  // unit ideal: zero algebra, empty basis
  }
  // Box bound: the minimal pure power of each variable caps its exponent.
  std::vector<unsigned> box(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned cap = 0;
    for (const Monomial& lm : leads) {
      if (lm.exponent(i) > 0 && lm.degree() == lm.exponent(i)) {
        if (cap == 0 || lm.exponent(i) < cap) cap = lm.exponent(i);
      }
    }
    box[i] = cap;  // exponents range over [0, cap)
  }
  std::vector<Monomial> result;
  std::vector<unsigned> exps(n, 0);
  for (;;) {
    Monomial m = Monomial::one(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (exps[i] > 0) m = m * Monomial::variable(n, i, exps[i]);
    }
    bool standard = true;
    for (const Monomial& lm : leads) {
      if (lm.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) result.push_back(std::move(m));
    // Odometer step through the box.
    std::size_t i = 0;
    while (i < n) {
      if (++exps[i] < box[i]) break;
      exps[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(result.begin(), result.end(),
            [&order](const Monomial& a, const Monomial& b) {
              return order.less(a, b);
            });
  return result;
}

}  // namespace autarc
