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
#include "autarc/motive.hpp"

#include <cctype>
#include <cstdlib>

#include "autarc/errors.hpp"

namespace autarc {

void MotivicClass::set(int power, Int value) {
  if (value == 0) {
    coeffs_.erase(power);
  } else {
    coeffs_[power] = std::move(value);
  }
}

MotivicClass MotivicClass::from_int(const Int& n) {
  MotivicClass c;
  c.set(0, n);
  return c;
}

MotivicClass MotivicClass::lefschetz(int k) {
  MotivicClass c;
  c.set(k, 1);
  return c;
}

MotivicClass MotivicClass::general_linear(unsigned d) {
  MotivicClass acc = one();
  for (unsigned i = 0; i < d; ++i) {
    acc = acc * (lefschetz(static_cast<int>(d)) -
                 lefschetz(static_cast<int>(i)));
  }
  return acc;
}

int MotivicClass::max_power() const {
  if (coeffs_.empty()) throw Error("zero class has no degree");
  return coeffs_.rbegin()->first;
}

int MotivicClass::min_power() const {
  if (coeffs_.empty()) throw Error("zero class has no degree");
  return coeffs_.begin()->first;
}

const Int& MotivicClass::coefficient(int power) const {
  static const Int kZero = 0;
  const auto it = coeffs_.find(power);
  return it == coeffs_.end() ? kZero : it->second;
}

MotivicClass MotivicClass::operator+(const MotivicClass& o) const {
  MotivicClass out = *this;
  for (const auto& [p, c] : o.coeffs_) out.set(p, out.coefficient(p) + c);
  return out;
}

MotivicClass MotivicClass::operator-() const {
  MotivicClass out;
  for (const auto& [p, c] : coeffs_) out.coeffs_[p] = -c;
  return out;
}

MotivicClass MotivicClass::operator-(const MotivicClass& o) const {
  return *this + (-o);
}

MotivicClass MotivicClass::operator*(const MotivicClass& o) const {
  MotivicClass out;
  for (const auto& [p1, c1] : coeffs_) {
    for (const auto& [p2, c2] : o.coeffs_) {
      out.set(p1 + p2, out.coefficient(p1 + p2) + c1 * c2);
    }
  }
  return out;
}

MotivicClass MotivicClass::pow(unsigned e) const {
  MotivicClass acc = one();
  MotivicClass base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return acc;
}

MotivicClass MotivicClass::shifted(int k) const {
  MotivicClass out;
  for (const auto& [p, c] : coeffs_) out.coeffs_[p + k] = c;
  return out;
}

Rat MotivicClass::evaluate_at(const Rat& q) const {
  Rat acc = 0;
  for (const auto& [p, c] : coeffs_) {
    Rat power = 1;
    if (p >= 0) {
      for (int i = 0; i < p; ++i) power *= q;
    } else {
      if (q == 0) throw Error("cannot evaluate a negative power of L at 0");
      for (int i = 0; i < -p; ++i) power /= q;
    }
    acc += Rat(c) * power;
  }
  return acc;
}

namespace {
std::string power_text(int p, bool latex) {
  if (p == 1) return latex ? "\\mathbb{L}" : "L";
  const std::string head = latex ? "\\mathbb{L}^{" : "L^";
  const std::string tail = latex ? "}" : "";
  return head + std::to_string(p) + tail;
}
}  // namespace

std::string MotivicClass::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const int p = it->first;
    const Int& c = it->second;
    const bool negative = c < 0;
    const Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (p == 0) {
      out += mag.str();
    } else if (mag == 1) {
      out += power_text(p, false);
    } else {
      out += mag.str() + "*" + power_text(p, false);
    }
  }
  return out;
}

std::string MotivicClass::to_latex() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const int p = it->first;
    const Int& c = it->second;
    const bool negative = c < 0;
    const Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (p == 0) {
      out += mag.str();
    } else if (mag == 1) {
      out += power_text(p, true);
    } else {
      out += mag.str() + power_text(p, true);
    }
  }
  return out;
}

namespace {

// Minimal recursive-descent parser for Laurent expressions in L.
class ClassParser {
 public:
  explicit ClassParser(std::string_view text) : text_(text) {}

  MotivicClass parse() {
    MotivicClass value = expr();
    skip_space();
    if (pos_ < text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MotivicClass expr() {
    MotivicClass acc;
    bool negate = eat('-');
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MotivicClass term() {
    MotivicClass acc = factor();
    for (;;) {
      skip_space();
      if (eat('*')) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  MotivicClass factor() {
    MotivicClass base_value = base();
    skip_space();
    if (eat('^')) {
      skip_space();
      const bool neg = eat('-');
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == start) throw ParseError("expected an exponent", start);
      const int e = std::atoi(std::string(text_.substr(start, pos_ - start)).c_str());
      if (neg) {
        // Negative exponents only make sense for a bare power of L.
        if (base_value.coefficients().size() != 1 ||
            base_value.coefficients().begin()->second != 1 ||
            base_value.coefficients().begin()->first != 1)
          throw ParseError("negative exponent on a non-L base", start);
        return MotivicClass::lefschetz(-e);
      }
      return base_value.pow(static_cast<unsigned>(e));
    }
    return base_value;
  }

  MotivicClass base() {
    skip_space();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MotivicClass inner = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (c == 'L') {
      ++pos_;
      return MotivicClass::lefschetz(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return MotivicClass::from_int(
          Int(std::string(text_.substr(start, pos_ - start))));
    }
    throw ParseError("expected 'L', a number, or '('", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MotivicClass MotivicClass::parse(std::string_view text) {
  return ClassParser(text).parse();
}

}  // namespace autarc
