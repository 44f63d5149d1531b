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
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "autarc/errors.hpp"
#include "autarc/poly.hpp"

namespace autarc {
namespace {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t pos;     // byte offset of the first character
  std::string text;    // identifier name or number literal
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = Token{Tok::end, start, ""};
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': current_ = Token{Tok::plus, start, "+"}; ++pos_; return;
      case '-': current_ = Token{Tok::minus, start, "-"}; ++pos_; return;
      case '*': current_ = Token{Tok::star, start, "*"}; ++pos_; return;
      case '^': current_ = Token{Tok::caret, start, "^"}; ++pos_; return;
      case '(': current_ = Token{Tok::lparen, start, "("}; ++pos_; return;
      case ')': current_ = Token{Tok::rparen, start, ")"}; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[end])))
        ++end;
      // Rational literal: digits '/' digits, with no space around the slash.
      if (end < text_.size() && text_[end] == '/' && end + 1 < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[end + 1]))) {
        ++end;
        while (end < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[end])))
          ++end;
      }
      current_ =
          Token{Tok::number, start, std::string(text_.substr(start, end - start))};
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '_'))
        ++end;
      current_ =
          Token{Tok::ident, start, std::string(text_.substr(start, end - start))};
      pos_ = end;
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::end, 0, ""};
};

class Parser {
 public:
  Parser(std::string_view text, Domain domain, VarsPtr vars)
      : lexer_(text), domain_(domain), vars_(std::move(vars)) {}

  Polynomial parse() {
    Polynomial p = expr();
    const Token& t = lexer_.peek();
    if (t.kind != Tok::end)
      throw ParseError("unexpected trailing input", t.pos);
    return p;
  }

 private:
  // expr := ['-'] term (('+'|'-') term)*
  Polynomial expr() {
    bool negate = false;
    if (lexer_.peek().kind == Tok::minus) {
      lexer_.take();
      negate = true;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      const Tok k = lexer_.peek().kind;
      if (k == Tok::plus) {
        lexer_.take();
        acc = acc + term();
      } else if (k == Tok::minus) {
        lexer_.take();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  // term := factor ('*' factor)*
  Polynomial term() {
    Polynomial acc = factor();
    while (lexer_.peek().kind == Tok::star) {
      lexer_.take();
      acc = acc * factor();
    }
    return acc;
  }

  // factor := base ('^' uint)?
  Polynomial factor() {
    Polynomial base_poly = base();
    if (lexer_.peek().kind == Tok::caret) {
      lexer_.take();
      const Token t = lexer_.peek();
      if (t.kind != Tok::number || t.text.find('/') != std::string::npos)
        throw ParseError("expected a non-negative integer exponent", t.pos);
      lexer_.take();
      unsigned long e = 0;
      try {
        e = std::stoul(t.text);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", t.pos);
      }
      if (e > 100000) throw ParseError("exponent out of range", t.pos);
      return base_poly.pow(static_cast<unsigned>(e));
    }
    return base_poly;
  }

  // base := identifier | number | '(' expr ')'
  Polynomial base() {
    const Token t = lexer_.peek();
    switch (t.kind) {
      case Tok::number: {
        lexer_.take();
        const std::size_t slash = t.text.find('/');
        Rat value;
        if (slash == std::string::npos) {
          value = Rat(Int(t.text));
        } else {
          const Int den(t.text.substr(slash + 1));
          if (den == 0) throw ParseError("zero denominator", t.pos);
          value = Rat(Int(t.text.substr(0, slash)), den);
        }
        return Polynomial::constant(domain_, vars_, value);
      }
      case Tok::ident: {
        lexer_.take();
        for (std::size_t i = 0; i < vars_->size(); ++i) {
          if ((*vars_)[i] == t.text)
            return Polynomial::variable(domain_, vars_, i);
        }
        throw ParseError("unknown variable '" + t.text + "'", t.pos);
      }
      case Tok::lparen: {
        lexer_.take();
        Polynomial inner = expr();
        const Token close = lexer_.peek();
        if (close.kind != Tok::rparen)
          throw ParseError("expected ')'", close.pos);
        lexer_.take();
        return inner;
      }
      default:
        throw ParseError("expected a variable, number, or '('", t.pos);
    }
  }

  Lexer lexer_;
  Domain domain_;
  VarsPtr vars_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, Domain domain,
                            const VarsPtr& vars) {
  Parser parser(text, domain, vars);
  return parser.parse();
}

}  // namespace autarc
