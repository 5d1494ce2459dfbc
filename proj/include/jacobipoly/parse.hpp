#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "jacobipoly/errors.hpp"
#include "jacobipoly/poly.hpp"
#include "jacobipoly/rings.hpp"

namespace jacobipoly {

namespace detail {

template <class Ring>
concept HasGenerator = requires(const Ring& r) {
  { r.variable_name() } -> std::convertible_to<std::string>;
  { r.generator() } -> std::same_as<typename Ring::value_type>;
};

// Recursive-descent reader for
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := primary ['^' uint]
//   primary := uint | identifier | '(' expr ')'
//
// Whitespace is insignificant. The extension variable of an F_p[t] ring may only
// appear inside parentheses, so coefficients such as (1+2*t^2) are unambiguous.
template <CoefficientRing Ring>
class PolyReader {
 public:
  using Poly = MultiPoly<Ring>;

  PolyReader(std::string_view text, const VarList& vars, const Ring& ring)
      : text_(text), vars_(vars), ring_(ring) {
    if constexpr (HasGenerator<Ring>) {
      if (vars_.index_of(ring_.variable_name()))
        throw Error("extension variable '" + ring_.variable_name() +
                    "' collides with a polynomial variable");
    }
  }

  Poly read() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_primary(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Poly expr() {
    Poly acc(ring_, vars_);
    bool negate = false;
    if (char c = peek(); c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Poly first = term();
    acc = negate ? -first : first;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Poly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (starts_primary(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      std::uint64_t e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
        if (e > 1'000'000) fail("exponent too large");
      }
      return pow(base, e);
    }
    return base;
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      std::size_t open = pos_++;
      ++depth_;
      Poly inner = expr();
      --depth_;
      if (peek() != ')') {
        if (pos_ >= text_.size()) throw SyntaxError("unbalanced '('", open);
        fail("expected ')'");
      }
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer n(std::string(text_.substr(start, pos_ - start)));
      return Poly::constant(ring_, vars_, ring_.from_integer(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (vars_.index_of(name)) return Poly::variable(ring_, vars_, name);
      if constexpr (HasGenerator<Ring>) {
        if (name == ring_.variable_name()) {
          if (depth_ == 0)
            throw SyntaxError("extension-ring coefficient must be parenthesized", start);
          return Poly::constant(ring_, vars_, ring_.generator());
        }
      }
      if (depth_ > 0)
        throw CoefficientNotInRing("'" + name + "' is neither a variable nor a coefficient of " +
                                   ring_.name());
      throw UnknownVariable(name);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VarList& vars_;
  const Ring& ring_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace detail

template <CoefficientRing Ring>
MultiPoly<Ring> parse_poly(std::string_view text, const VarList& vars, const Ring& ring) {
  return detail::PolyReader<Ring>(text, vars, ring).read();
}

}  // namespace jacobipoly
