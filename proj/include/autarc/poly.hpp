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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autarc/monomial.hpp"
#include "autarc/numbers.hpp"

namespace autarc {

enum class DomainKind { integer, rational, prime_field };

/// Coefficient domain tag: Z, Q, or F_p for a prime p. Prime-field values
/// are stored as reduced representatives in [0, p).
class Domain {
 public:
  static Domain integers() { return Domain(DomainKind::integer, 0); }
  static Domain rationals() { return Domain(DomainKind::rational, 0); }
  static Domain prime_field(std::uint64_t p);

  DomainKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != DomainKind::integer; }

  /// Canonical representative of c in this domain; rejects non-integers
  /// over Z and non-invertible denominators over F_p.
  Rat normalize(const Rat& c) const;
  Rat invert(const Rat& c) const;

  bool operator==(const Domain& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Domain& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  Domain(DomainKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  DomainKind kind_;
  std::uint64_t p_;
};

using VarsPtr = std::shared_ptr<const std::vector<std::string>>;
VarsPtr make_vars(std::vector<std::string> names);
bool same_vars(const VarsPtr& a, const VarsPtr& b);

struct Term {
  Monomial mono;
  Rat coeff;
};

/// Sparse multivariate polynomial over a tagged coefficient domain.
/// Variables are positional; names are display metadata. Terms are kept in
/// descending graded reverse lexicographic order with no zero coefficients,
/// which makes printing canonical and equality structural.
class Polynomial {
 public:
  Polynomial(Domain domain, VarsPtr vars, std::vector<Term> terms);
  static Polynomial zero(Domain domain, VarsPtr vars);
  static Polynomial constant(Domain domain, VarsPtr vars, const Rat& c);
  static Polynomial variable(Domain domain, VarsPtr vars, std::size_t index);
  static Polynomial from_monomial(Domain domain, VarsPtr vars, Monomial m,
                                  const Rat& c = 1);

  const Domain& domain() const { return domain_; }
  const VarsPtr& vars() const { return vars_; }
  const std::vector<std::string>& var_names() const { return *vars_; }
  std::size_t nvars() const { return vars_->size(); }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool uses_variable(std::size_t i) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial pow(unsigned e) const;
  Polynomial scaled(const Rat& c) const;
  Polynomial times_monomial(const Monomial& m, const Rat& c) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Ring-homomorphic image substituting images[i] for variable i. Every
  /// variable that occurs in the polynomial needs an image; all images must
  /// share one ambient variable list and one domain.
  Polynomial substitute(
      std::span<const std::optional<Polynomial>> images) const;

  /// Coefficientwise reduction Z/Q -> F_p.
  Polynomial reduce_mod(std::uint64_t p) const;

  /// Exact embedding into a wider domain (Z -> Q); identity when equal.
  Polynomial with_domain(const Domain& target) const;

  Rat evaluate(std::span<const Rat> values) const;

  /// Canonical rendering; parse_polynomial of the result is the identity.
  std::string to_string() const;

 private:
  void normalize();

  Domain domain_;
  VarsPtr vars_;
  std::vector<Term> terms_;
};

/// Parses the expression grammar
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := identifier | number | '(' expr ')'
/// where number is an integer literal optionally followed by '/' and a
/// positive integer (so printed rational coefficients read back exactly).
/// Implicit multiplication is a syntax error.
Polynomial parse_polynomial(std::string_view text, Domain domain,
                            const VarsPtr& vars);

std::string coeff_to_string(const Rat& c);

}  // namespace autarc
