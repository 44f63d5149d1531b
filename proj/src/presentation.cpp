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
#include "autarc/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "autarc/errors.hpp"

namespace autarc {

namespace {

// An element of B tensored with a polynomial ring R: coordinates over
// B's quotient basis, each a polynomial in the coefficient variables.
using Vec = std::vector<Polynomial>;

Vec vec_zero(const ArtinAlgebra& B, const Domain& R, const VarsPtr& rvars) {
  return Vec(B.rank(), Polynomial::zero(R, rvars));
}

Vec vec_add(const Vec& u, const Vec& v) {
  Vec out = u;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] + v[k];
  return out;
}

// Product via B's multiplication table.
Vec vec_mul(const ArtinAlgebra& B, const Vec& u, const Vec& v,
            const Domain& R, const VarsPtr& rvars) {
  Vec out = vec_zero(B, R, rvars);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      const Polynomial prod = u[i] * v[j];
      const auto row = B.product_coords(i, j);
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (row[k] != 0) out[k] = out[k] + prod.scaled(row[k]);
      }
    }
  }
  return out;
}

// Evaluate a polynomial in B's ambient variables at per-generator
// images, inside B (x) R.
Vec evaluate_in_tensor(const ArtinAlgebra& B, const Polynomial& f,
                       const std::vector<Vec>& images, const Domain& R,
                       const VarsPtr& rvars) {
  // Power cache per generator.
  std::vector<std::vector<Vec>> powers(images.size());
  auto power_of = [&](std::size_t g, unsigned e) -> const Vec& {
    auto& cache = powers[g];
    if (cache.empty()) {
      Vec unit = vec_zero(B, R, rvars);
      unit[0] = Polynomial::constant(R, rvars, 1);  // basis[0] is 1
      cache.push_back(std::move(unit));
    }
    while (cache.size() <= e)
      cache.push_back(vec_mul(B, cache.back(), images[g], R, rvars));
    return cache[e];
  };

  Vec acc = vec_zero(B, R, rvars);
  for (const Term& t : f.terms()) {
    Vec piece = vec_zero(B, R, rvars);
    piece[0] = Polynomial::constant(R, rvars, t.coeff);
    for (std::size_t g = 0; g < images.size(); ++g) {
      const unsigned e = t.mono.exponent(g);
      if (e > 0) piece = vec_mul(B, piece, power_of(g, e), R, rvars);
    }
    acc = vec_add(acc, piece);
  }
  return acc;
}

// 0 for the basis monomial 1, 1 for degree one, 2 otherwise; the
// counting backtracker wants the nilpotency-forcing constants first.
int degree_class(const Monomial& m) {
  if (m.degree() == 0) return 0;
  return m.degree() == 1 ? 1 : 2;
}

struct CoefficientGrid {
  VarsPtr rvars;                                  // ordered variable names
  std::vector<VariableInfo> info;                 // parallel to rvars
  std::vector<std::vector<std::size_t>> slot;     // [generator][basis] -> var
};

// Lay out one coefficient variable per (source generator, basis
// monomial) in the canonical order, with a caller-chosen naming rule.
CoefficientGrid make_grid(
    const ArtinAlgebra& B, const std::vector<std::string>& generators,
    const std::function<std::string(const std::string&, std::size_t)>& name) {
  struct Entry {
    std::size_t g, k;
  };
  std::vector<Entry> entries;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (std::size_t k = 0; k < B.rank(); ++k) entries.push_back({g, k});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [&B](const Entry& a, const Entry& b) {
                     const int ca = degree_class(B.basis()[a.k]);
                     const int cb = degree_class(B.basis()[b.k]);
                     if (ca != cb) return ca < cb;
                     if (a.g != b.g) return a.g < b.g;
                     return a.k < b.k;
                   });
  CoefficientGrid grid;
  std::vector<std::string> names;
  grid.slot.assign(generators.size(),
                   std::vector<std::size_t>(B.rank(), 0));
  for (std::size_t pos = 0; pos < entries.size(); ++pos) {
    const auto [g, k] = entries[pos];
    VariableInfo vi;
    vi.name = name(generators[g], k);
    vi.role = "coefficient";
    vi.generator = generators[g];
    vi.basis_monomial = B.basis()[k].to_string(*B.vars());
    vi.generator_index = static_cast<int>(g);
    vi.basis_index = static_cast<int>(k);
    names.push_back(vi.name);
    grid.info.push_back(std::move(vi));
    grid.slot[g][k] = pos;
  }
  grid.rvars = make_vars(std::move(names));
  return grid;
}

// The image vectors P_g = sum_k a_{g,k} basis[k].
std::vector<Vec> grid_images(const ArtinAlgebra& B, const CoefficientGrid& grid,
                             const Domain& R) {
  std::vector<Vec> images;
  for (const auto& slots : grid.slot) {
    Vec v;
    for (std::size_t k = 0; k < B.rank(); ++k)
      v.push_back(Polynomial::variable(R, grid.rvars, slots[k]));
    images.push_back(std::move(v));
  }
  return images;
}

// One equation per nonzero coordinate of each evaluated relation.
std::vector<Polynomial> coefficient_equations(
    const ArtinAlgebra& B, const std::vector<Polynomial>& relations,
    const std::vector<Vec>& images, const Domain& R, const VarsPtr& rvars) {
  std::vector<Polynomial> equations;
  for (const Polynomial& rel : relations) {
    const Vec w = evaluate_in_tensor(B, rel, images, R, rvars);
    for (const Polynomial& coord : w) {
      if (!coord.is_zero()) equations.push_back(coord);
    }
  }
  return equations;
}

std::string describe_algebra(const ArtinAlgebra& B) {
  std::string out = B.domain().describe() + "[";
  for (std::size_t i = 0; i < B.vars()->size(); ++i) {
    if (i > 0) out += ",";
    out += (*B.vars())[i];
  }
  out += "]/(";
  for (std::size_t i = 0; i < B.groebner().size(); ++i) {
    if (i > 0) out += ", ";
    out += B.groebner()[i].to_string();
  }
  out += ")";
  return out;
}

// Determinant by first-row expansion; fine at the ambient dimensions
// seen here (d <= 3).
Polynomial matrix_det(const std::vector<std::vector<Polynomial>>& m,
                      const Domain& R, const VarsPtr& rvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(R, rvars, 1);
  if (n == 1) return m[0][0];
  Polynomial acc = Polynomial::zero(R, rvars);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t row = 1; row < n; ++row) {
      std::vector<Polynomial> line;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) line.push_back(m[row][c]);
      }
      minor.push_back(std::move(line));
    }
    Polynomial cofactor = m[0][col] * matrix_det(minor, R, rvars);
    acc = (col % 2 == 0) ? acc + cofactor : acc - cofactor;
  }
  return acc;
}

}  // namespace

SchemePresentation endo_presentation(const ArtinAlgebra& B) {
  if (!B.is_local())
    throw Error("self-map presentation needs a local algebra");
  const Domain R = Domain::rationals();
  const CoefficientGrid grid = make_grid(
      B, *B.vars(), [](const std::string& g, std::size_t k) {
        return "a_" + g + "_" + std::to_string(k);
      });
  const std::vector<Vec> images = grid_images(B, grid, R);
  SchemePresentation pres;
  pres.variables = grid.rvars;
  pres.info = grid.info;
  pres.equations =
      coefficient_equations(B, B.groebner(), images, R, grid.rvars);
  pres.construction = "endo";
  pres.source = describe_algebra(B);
  return pres;
}

SchemePresentation aut_presentation(const ArtinAlgebra& B) {
  SchemePresentation pres = endo_presentation(B);
  // Degree-one basis monomials, in basis order.
  std::vector<std::size_t> linear;
  for (std::size_t k = 0; k < B.rank(); ++k) {
    if (B.basis()[k].degree() == 1) linear.push_back(k);
  }
  const std::size_t d = B.vars()->size();
  if (linear.size() < d)
    throw UnsupportedEmbedding(
        "some generator is redundant: only " + std::to_string(linear.size()) +
        " degree-one basis monomials for " + std::to_string(d) +
        " generators");

  // Extend the variable list with the determinant inverse z.
  std::vector<std::string> names(*pres.variables);
  names.push_back("z");
  const VarsPtr vars = make_vars(std::move(names));
  const Domain R = Domain::rationals();
  std::vector<Polynomial> equations;
  for (const Polynomial& eq : pres.equations) {
    std::vector<Term> terms;
    for (const Term& t : eq.terms()) {
      std::vector<unsigned> exps = t.mono.exponents();
      exps.push_back(0);
      terms.push_back(Term{Monomial(std::move(exps)), t.coeff});
    }
    equations.push_back(Polynomial(R, vars, std::move(terms)));
  }

  // M[g][j]: coefficient of the j-th degree-one basis monomial in the
  // image of generator g.
  CoefficientGrid grid = make_grid(
      B, *B.vars(), [](const std::string& g, std::size_t k) {
        return "a_" + g + "_" + std::to_string(k);
      });
  std::vector<std::vector<Polynomial>> m;
  for (std::size_t g = 0; g < d; ++g) {
    std::vector<Polynomial> row;
    for (const std::size_t k : linear) {
      row.push_back(Polynomial::variable(R, vars, grid.slot[g][k]));
    }
    m.push_back(std::move(row));
  }
  const Polynomial det = matrix_det(m, R, vars);
  const Polynomial z = Polynomial::variable(R, vars, vars->size() - 1);
  equations.push_back(z * det - Polynomial::constant(R, vars, 1));

  pres.variables = vars;
  VariableInfo zi;
  zi.name = "z";
  zi.role = "aux";
  pres.info.push_back(std::move(zi));
  pres.equations = std::move(equations);
  pres.construction = "aut";
  return pres;
}

SchemePresentation hom_presentation(const ArtinAlgebra& B,
                                    const VarsPtr& target_coords,
                                    std::span<const Polynomial> target_eqs) {
  for (const Polynomial& g : target_eqs) {
    if (!same_vars(g.vars(), target_coords))
      throw Error("target equation is not over the target coordinates");
    if (g.domain().kind() != DomainKind::rational)
      throw Error("target equations must have rational coefficients");
  }
  const Domain R = Domain::rationals();
  const CoefficientGrid grid = make_grid(
      B, *target_coords, [](const std::string& c, std::size_t k) {
        return "c_" + c + "_" + std::to_string(k);
      });
  const std::vector<Vec> images = grid_images(B, grid, R);
  std::vector<Polynomial> relations(target_eqs.begin(), target_eqs.end());
  SchemePresentation pres;
  pres.variables = grid.rvars;
  pres.info = grid.info;
  pres.equations =
      coefficient_equations(B, relations, images, R, grid.rvars);
  pres.construction = "hom";
  pres.source = describe_algebra(B) + " -> V(" +
                [&] {
                  std::string s;
                  for (std::size_t i = 0; i < relations.size(); ++i) {
                    if (i > 0) s += ", ";
                    s += relations[i].to_string();
                  }
                  return s;
                }() +
                ")";
  return pres;
}

SchemePresentation jet_presentation(const Polynomial& f, unsigned m) {
  const Domain Q = Domain::rationals();
  const VarsPtr tvar = make_vars({"t"});
  const ArtinAlgebra B(
      Q, tvar,
      {Polynomial::from_monomial(Q, tvar, Monomial::variable(1, 0, m + 1), 1)},
      MonomialOrder::make_grevlex(1));
  Polynomial f_rat = f;
  if (f.domain().kind() == DomainKind::integer) f_rat = f.with_domain(Q);
  const CoefficientGrid grid = make_grid(
      B, *f_rat.vars(), [](const std::string& c, std::size_t k) {
        return c + std::to_string(k);  // coefficient of t^k in coordinate c
      });
  const std::vector<Vec> images = grid_images(B, grid, Q);
  SchemePresentation pres;
  pres.variables = grid.rvars;
  pres.info = grid.info;
  pres.equations =
      coefficient_equations(B, {f_rat}, images, Q, grid.rvars);
  pres.construction = "jet";
  pres.source =
      "order-" + std::to_string(m) + " jets of " + f_rat.to_string();
  return pres;
}

SchemePresentation trivial_deformation_autoarc(
    const ArtinAlgebra& B, const VarsPtr& target_coords,
    std::span<const Polynomial> target_eqs) {
  const SchemePresentation hom = hom_presentation(B, target_coords, target_eqs);
  const SchemePresentation endo = endo_presentation(B);

  std::vector<std::string> names(*hom.variables);
  names.insert(names.end(), endo.variables->begin(), endo.variables->end());
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("variable name collision between product factors");
  }
  const VarsPtr vars = make_vars(std::move(names));
  const Domain R = Domain::rationals();
  const std::size_t total = vars->size();

  // Re-embed each factor's equations into the combined variable list.
  auto lift = [&](const Polynomial& p, std::size_t offset) {
    std::vector<Term> terms;
    for (const Term& t : p.terms()) {
      std::vector<unsigned> exps(total, 0);
      for (std::size_t i = 0; i < t.mono.nvars(); ++i)
        exps[offset + i] = t.mono.exponent(i);
      terms.push_back(Term{Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial(R, vars, std::move(terms));
  };

  SchemePresentation pres;
  pres.variables = vars;
  pres.info = hom.info;
  pres.info.insert(pres.info.end(), endo.info.begin(), endo.info.end());
  for (const Polynomial& eq : hom.equations) pres.equations.push_back(lift(eq, 0));
  for (const Polynomial& eq : endo.equations)
    pres.equations.push_back(lift(eq, hom.nvars()));
  pres.construction = "product";
  pres.source = "(" + hom.source + ") x (self-maps of " +
                describe_algebra(B) + ")";
  return pres;
}

namespace {

// Reduce a coordinate vector entrywise into [0, q).
std::vector<Rat> reduce_vec(const std::vector<Rat>& v, std::uint64_t q) {
  std::vector<Rat> out;
  for (const Rat& c : v) out.push_back(Rat(Int(residue_mod(c, q))));
  return out;
}

// Image of polynomial `p` (in B's ambient variables) under the
// assignment, computed with B's table and reduced mod q.
std::vector<Rat> image_of(const ArtinAlgebra& B, const EndoPoint& point,
                          const Polynomial& p) {
  const std::size_t rank = B.rank();
  std::vector<Rat> acc(rank, Rat(0));
  for (const Term& t : p.terms()) {
    std::vector<Rat> piece(rank, Rat(0));
    piece[0] = t.coeff;
    for (std::size_t g = 0; g < point.images.size(); ++g) {
      for (unsigned e = 0; e < t.mono.exponent(g); ++e) {
        piece = B.multiply(piece, point.images[g]);
        piece = reduce_vec(piece, point.q);
      }
    }
    for (std::size_t k = 0; k < rank; ++k) acc[k] += piece[k];
  }
  return reduce_vec(acc, point.q);
}

}  // namespace

EndoPoint identity_endo(const ArtinAlgebra& B, std::uint64_t q) {
  EndoPoint point;
  point.q = q;
  for (std::size_t g = 0; g < B.vars()->size(); ++g) {
    point.images.push_back(reduce_vec(
        B.coordinates(Polynomial::variable(B.domain(), B.vars(), g)), q));
  }
  return point;
}

bool satisfies_endo(const ArtinAlgebra& B, const EndoPoint& point) {
  if (point.images.size() != B.vars()->size()) return false;
  for (const auto& img : point.images) {
    if (img.size() != B.rank()) return false;
  }
  for (const Polynomial& f : B.groebner()) {
    for (const Rat& c : image_of(B, point, f)) {
      if (c != 0) return false;
    }
  }
  return true;
}

EndoPoint compose_endos(const ArtinAlgebra& B, const EndoPoint& e1,
                        const EndoPoint& e2) {
  if (e1.q != e2.q) throw Error("cannot compose points over different fields");
  if (!satisfies_endo(B, e1) || !satisfies_endo(B, e2))
    throw Error("input is not an endomorphism of the algebra");
  EndoPoint out;
  out.q = e1.q;
  for (std::size_t g = 0; g < B.vars()->size(); ++g) {
    // Polynomial representative of e1's image of generator g, then
    // push it through e2.
    const Polynomial rep = B.from_coordinates(e1.images[g]);
    out.images.push_back(image_of(B, e2, rep));
  }
  return out;
}

EndoPoint endo_point_from_assignment(const SchemePresentation& pres,
                                     const ArtinAlgebra& B,
                                     std::span<const std::uint64_t> values,
                                     std::uint64_t q) {
  if (values.size() < pres.nvars())
    throw Error("assignment is shorter than the variable list");
  EndoPoint point;
  point.q = q;
  point.images.assign(B.vars()->size(),
                      std::vector<Rat>(B.rank(), Rat(0)));
  for (std::size_t v = 0; v < pres.nvars(); ++v) {
    const VariableInfo& vi = pres.info[v];
    if (vi.role != "coefficient") continue;
    point.images[vi.generator_index][vi.basis_index] =
        Rat(Int(values[v] % q));
  }
  return point;
}

}  // namespace autarc
