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
#include "autarc/fatpoint.hpp"

#include <algorithm>
#include <functional>

#include "autarc/errors.hpp"

namespace autarc {

namespace {

// All monomials of exact degree `deg` in `nvars` variables.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned deg) {
  std::vector<Monomial> out;
  std::vector<unsigned> exps(nvars, 0);
  // Walk compositions of deg into nvars parts.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i,
                                                       unsigned left) {
    if (i + 1 == nvars) {
      exps[i] = left;
      Monomial m = Monomial::one(nvars);
      for (std::size_t k = 0; k < nvars; ++k) {
        if (exps[k] > 0) m = m * Monomial::variable(nvars, k, exps[k]);
      }
      out.push_back(std::move(m));
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[i] = e;
      rec(i + 1, left - e);
    }
  };
  if (nvars == 0) return out;
  rec(0, deg);
  return out;
}

// Generators of m^power for m = (all variables).
std::vector<Polynomial> power_of_maximal_ideal(const Domain& domain,
                                               const VarsPtr& vars,
                                               unsigned power) {
  std::vector<Polynomial> gens;
  for (Monomial& m : monomials_of_degree(vars->size(), power)) {
    gens.push_back(Polynomial::from_monomial(domain, vars, std::move(m), 1));
  }
  return gens;
}

}  // namespace

FatPoint germ_truncation(const Polynomial& f, unsigned level) {
  if (f.nvars() != 2)
    throw Error("germ truncation expects a polynomial in two variables");
  const std::vector<Rat> origin(2, Rat(0));
  if (f.evaluate(origin) != 0)
    throw Error("germ must vanish at the origin");
  const Domain domain = f.domain();
  if (!domain.is_field())
    throw Error("germ truncation needs field coefficients, got " +
                domain.describe());
  std::vector<Polynomial> gens = {f};
  for (Polynomial& g :
       power_of_maximal_ideal(domain, f.vars(), level + 1)) {
    gens.push_back(std::move(g));
  }
  FatPoint fp;
  fp.algebra = std::make_shared<const ArtinAlgebra>(
      domain, f.vars(), std::move(gens), MonomialOrder::make_grevlex(2));
  fp.level = level;
  fp.origin = "germ " + f.to_string() + " level " + std::to_string(level);
  return fp;
}

FatPoint monomial_fatpoint(unsigned d, unsigned n) {
  if (d < 1) throw Error("monomial fat point needs d >= 1");
  if (n < 1) throw Error("monomial fat point needs n >= 1");
  std::vector<std::string> names;
  if (d == 1) {
    names.push_back("x");
  } else {
    for (unsigned i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
  }
  const VarsPtr vars = make_vars(std::move(names));
  const Domain domain = Domain::rationals();
  FatPoint fp;
  fp.algebra = std::make_shared<const ArtinAlgebra>(
      domain, vars, power_of_maximal_ideal(domain, vars, n),
      MonomialOrder::make_grevlex(d));
  fp.level = n - 1;
  fp.origin = "monomial(d=" + std::to_string(d) + ", n=" + std::to_string(n) +
              ")";
  return fp;
}

MonomialClosedForms monomial_closed_forms(unsigned d, unsigned n) {
  if (d < 1) throw Error("monomial fat point needs d >= 1");
  if (n < 1) throw Error("monomial fat point needs n >= 1");
  if (n == 1) {
    // The algebra is the ground field; only the identity map exists.
    return {MotivicClass::one(), MotivicClass::one()};
  }
  const Int rank = binomial(n - 1 + d, d);
  const Int r = Int(d) * (rank - 1);
  const int ri = r.convert_to<int>();
  const int d2 = static_cast<int>(d) * static_cast<int>(d);
  MonomialClosedForms forms;
  forms.end_class = MotivicClass::lefschetz(ri);
  forms.aut_class =
      MotivicClass::general_linear(d) * MotivicClass::lefschetz(ri - d2);
  return forms;
}

Polynomial translated(const Polynomial& f, std::span<const Rat> point) {
  if (point.size() != f.nvars())
    throw Error("translation point has wrong dimension");
  std::vector<std::optional<Polynomial>> images;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    images.emplace_back(Polynomial::variable(f.domain(), f.vars(), i) +
                        Polynomial::constant(f.domain(), f.vars(), point[i]));
  }
  return f.substitute(images);
}

AdmissibleSystem AdmissibleSystem::germ(Polynomial f) {
  const std::vector<Rat> origin(f.nvars(), Rat(0));
  if (f.nvars() != 2)
    throw Error("germ system expects a polynomial in two variables");
  if (f.evaluate(origin) != 0)
    throw Error("germ must vanish at the origin");
  AdmissibleSystem sys;
  sys.germ_poly_ = std::move(f);
  return sys;
}

AdmissibleSystem AdmissibleSystem::monomial(unsigned d) {
  if (d < 1) throw Error("monomial system needs d >= 1");
  AdmissibleSystem sys;
  sys.monomial_dim_ = d;
  return sys;
}

const FatPoint& AdmissibleSystem::level(unsigned i) const {
  auto it = cache_.find(i);
  if (it == cache_.end()) {
    FatPoint fp = germ_poly_ ? germ_truncation(*germ_poly_, i)
                             : monomial_fatpoint(monomial_dim_, i + 1);
    it = cache_.emplace(i, std::move(fp)).first;
  }
  return it->second;
}

std::string AdmissibleSystem::describe() const {
  if (germ_poly_) return "germ system of " + germ_poly_->to_string();
  return "thickenings of the origin in affine " +
         std::to_string(monomial_dim_) + "-space";
}

bool AdmissibleSystem::transitions_nested(unsigned up_to) const {
  for (unsigned i = 0; i < up_to; ++i) {
    const auto& small = level(i).algebra->basis();
    const auto& big = level(i + 1).algebra->basis();
    for (const Monomial& m : small) {
      if (std::find(big.begin(), big.end(), m) == big.end()) return false;
    }
  }
  return true;
}

}  // namespace autarc
