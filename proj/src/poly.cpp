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
#include "autarc/poly.hpp"

#include <algorithm>
#include <map>

#include "autarc/errors.hpp"

namespace autarc {

Domain Domain::prime_field(std::uint64_t p) {
  if (!is_prime(p))
    throw Error("modulus " + std::to_string(p) + " is not prime");
  return Domain(DomainKind::prime_field, p);
}

Rat Domain::normalize(const Rat& c) const {
  switch (kind_) {
    case DomainKind::integer:
      if (denominator(c) != 1)
        throw Error("non-integer coefficient in integer domain");
      return c;
    case DomainKind::rational:
      return c;
    case DomainKind::prime_field:
      return Rat(Int(residue_mod(c, p_)));
  }
  return c;
}

Rat Domain::invert(const Rat& c) const {
  switch (kind_) {
    case DomainKind::integer:
      throw Error("integer domain is not a field");
    case DomainKind::rational:
      if (c == 0) throw Error("division by zero");
      return Rat(1) / c;
    case DomainKind::prime_field: {
      const std::uint64_t v = residue_mod(c, p_);
      return Rat(Int(inverse_mod(v, p_)));
    }
  }
  return c;
}

std::string Domain::describe() const {
  switch (kind_) {
    case DomainKind::integer:
      return "Z";
    case DomainKind::rational:
      return "Q";
    case DomainKind::prime_field:
      return "F" + std::to_string(p_);
  }
  return "?";
}

VarsPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarsPtr& a, const VarsPtr& b) {
  return a == b || (a && b && *a == *b);
}

Polynomial::Polynomial(Domain domain, VarsPtr vars, std::vector<Term> terms)
    : domain_(domain), vars_(std::move(vars)), terms_(std::move(terms)) {
  if (!vars_) throw Error("polynomial needs a variable list");
  for (const Term& t : terms_) {
    if (t.mono.nvars() != vars_->size())
      throw Error("monomial width does not match the variable list");
  }
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return grevlex_less(b.mono, a.mono);  // descending
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (Term& t : out) {
    Rat c = domain_.normalize(t.coeff);
    if (c != 0) terms_.push_back(Term{std::move(t.mono), std::move(c)});
  }
}

Polynomial Polynomial::zero(Domain domain, VarsPtr vars) {
  return Polynomial(domain, std::move(vars), {});
}

Polynomial Polynomial::constant(Domain domain, VarsPtr vars, const Rat& c) {
  const std::size_t n = vars->size();
  return Polynomial(domain, std::move(vars), {Term{Monomial::one(n), c}});
}

Polynomial Polynomial::variable(Domain domain, VarsPtr vars,
                                std::size_t index) {
  const std::size_t n = vars->size();
  return Polynomial(domain, std::move(vars),
                    {Term{Monomial::variable(n, index), 1}});
}

Polynomial Polynomial::from_monomial(Domain domain, VarsPtr vars, Monomial m,
                                     const Rat& c) {
  return Polynomial(domain, std::move(vars), {Term{std::move(m), c}});
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // Leading term has maximal degree under the graded storage order.
  return static_cast<int>(terms_.front().mono.degree());
}

bool Polynomial::uses_variable(std::size_t i) const {
  for (const Term& t : terms_) {
    if (t.mono.exponent(i) > 0) return true;
  }
  return false;
}

namespace {
void require_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.domain() != b.domain())
    throw Error("coefficient domain mismatch: " + a.domain().describe() +
                " vs " + b.domain().describe());
  if (!same_vars(a.vars(), b.vars()))
    throw Error("variable list mismatch");
}
}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_compatible(*this, o);
  std::vector<Term> out(terms_.begin(), terms_.end());
  out.insert(out.end(), o.terms_.begin(), o.terms_.end());
  return Polynomial(domain_, vars_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(Term{t.mono, -t.coeff});
  return Polynomial(domain_, vars_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_compatible(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      out.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
    }
  }
  return Polynomial(domain_, vars_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = Polynomial::constant(domain_, vars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(Term{t.mono, t.coeff * c});
  return Polynomial(domain_, vars_, std::move(out));
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rat& c) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(Term{t.mono * m, t.coeff * c});
  return Polynomial(domain_, vars_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (domain_ != o.domain_ || !same_vars(vars_, o.vars_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  }
  return true;
}

Polynomial Polynomial::substitute(
    std::span<const std::optional<Polynomial>> images) const {
  if (images.size() != nvars())
    throw Error("substitution needs one image slot per variable");
  const Polynomial* model = nullptr;
  for (const auto& im : images) {
    if (!im) continue;
    if (model) {
      require_compatible(*model, *im);
    } else {
      model = &*im;
    }
  }
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (!images[i] && uses_variable(i))
      throw Error("missing image for variable " + var_names()[i]);
  }
  if (!model)
    throw Error("substitution needs at least one image to fix the target ring");
  if (model->domain() != domain_)
    throw Error("substitution domain mismatch: " + domain_.describe() +
                " vs " + model->domain().describe());

  const Domain tdom = model->domain();
  const VarsPtr tvars = model->vars();
  // Per-variable power cache; powers[i][k] = images[i]^k.
  std::vector<std::vector<Polynomial>> powers(nvars());
  auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(tdom, tvars, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[i]);
    return cache[e];
  };

  Polynomial acc = Polynomial::zero(tdom, tvars);
  for (const Term& t : terms_) {
    Polynomial piece = Polynomial::constant(tdom, tvars, t.coeff);
    for (std::size_t i = 0; i < nvars(); ++i) {
      const unsigned e = t.mono.exponent(i);
      if (e > 0) piece = piece * power_of(i, e);
    }
    acc = acc + piece;
  }
  return acc;
}

Polynomial Polynomial::reduce_mod(std::uint64_t p) const {
  if (domain_.kind() == DomainKind::prime_field) {
    if (domain_.characteristic() == p) return *this;
    throw Error("polynomial already lives in " + domain_.describe());
  }
  const Domain target = Domain::prime_field(p);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(Term{t.mono, t.coeff});
  return Polynomial(target, vars_, std::move(out));
}

Polynomial Polynomial::with_domain(const Domain& target) const {
  if (target == domain_) return *this;
  if (domain_.kind() == DomainKind::integer &&
      target.kind() == DomainKind::rational) {
    std::vector<Term> out(terms_.begin(), terms_.end());
    return Polynomial(target, vars_, std::move(out));
  }
  throw Error("no exact embedding from " + domain_.describe() + " into " +
              target.describe());
}

Rat Polynomial::evaluate(std::span<const Rat> values) const {
  if (values.size() != nvars())
    throw Error("evaluation needs one value per variable");
  Rat acc = 0;
  for (const Term& t : terms_) {
    Rat v = t.coeff;
    for (std::size_t i = 0; i < nvars(); ++i) {
      for (unsigned k = 0; k < t.mono.exponent(i); ++k) v *= values[i];
    }
    acc += v;
  }
  return domain_.normalize(acc);
}

std::string coeff_to_string(const Rat& c) {
  const Int num = numerator(c);
  const Int den = denominator(c);
  std::string out = num.str();
  if (den != 1) out += "/" + den.str();
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coeff < 0;
    const Rat mag = negative ? Rat(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += coeff_to_string(mag);
    } else if (mag == 1) {
      out += t.mono.to_string(var_names());
    } else {
      out += coeff_to_string(mag) + "*" + t.mono.to_string(var_names());
    }
  }
  return out;
}

}  // namespace autarc
