#pragma once

// Plain-text polynomial syntax shared by the CLI and the JSON documents.
//
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := factor { ('*'|'/') factor }
//   factor  := primary [ '^' integer ]
//   primary := integer | 'x' | 't' | '(' expr ')'
//
// Whitespace is ignored. Polynomials accept '/' only by a nonzero rational
// constant; rational functions accept any divisor but no 't'.
//
// Printing is canonical and compact: x-terms by descending degree, inner
// t-coefficients by ascending degree, no spaces. Rational functions print
// with coprime integer coefficients, e.g. x^3/(9*x^2+24*x+16).

#include <cctype>
#include <string>
#include <string_view>

#include "ramcover/error.hpp"
#include "ramcover/poly.hpp"
#include "ramcover/ratfunc.hpp"

namespace ramcover {

namespace text_detail {

constexpr unsigned kMaxExponent = 4096;

template <class Algebra>
struct Traits;

template <>
struct Traits<QtPoly> {
  static QtPoly literal(const Integer& n) { return QtPoly(QPoly(Rational(n), 't'), 'x'); }
  static QtPoly variable(char v) {
    if (v == 'x') return QtPoly::variable('x');
    return QtPoly(QPoly::variable('t'), 'x');
  }
  static QtPoly divide(const QtPoly& a, const QtPoly& b) {
    if (!b.is_constant() || b.is_zero() || !b.leading().is_constant())
      throw ParseError("polynomials may only be divided by a nonzero rational constant");
    return a.scaled(QPoly(b.leading().leading().inverse(), 't'));
  }
  static QtPoly pow(const QtPoly& a, unsigned e) { return a.pow(e); }
};

template <>
struct Traits<RatFunc> {
  static RatFunc literal(const Integer& n) { return RatFunc(QPoly(Rational(n), 'x')); }
  static RatFunc variable(char v) {
    if (v != 'x') throw ParseError("rational functions are in x only");
    return RatFunc::variable('x');
  }
  static RatFunc divide(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ParseError("division by zero");
    return a / b;
  }
  static RatFunc pow(const RatFunc& a, unsigned e) { return a.pow(e); }
};

template <class Algebra>
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Algebra parse() {
    Algebra value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  using T = Traits<Algebra>;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Algebra expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Algebra acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }
  Algebra term() {
    Algebra acc = factor();
    while (true) {
      if (accept('*')) acc = acc * factor();
      else if (accept('/')) acc = T::divide(acc, factor());
      else return acc;
    }
  }
  Algebra factor() {
    Algebra base = primary();
    if (!accept('^')) return base;
    std::string d = digits();
    if (d.empty()) fail("exponent must be a nonnegative integer literal");
    if (d.size() > 6 || std::stoul(d) > kMaxExponent) fail("exponent too large");
    return T::pow(base, static_cast<unsigned>(std::stoul(d)));
  }
  Algebra primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return T::literal(Integer(digits()));
    if (c == 'x' || c == 't') {
      ++pos_;
      return T::variable(c);
    }
    if (accept('(')) {
      Algebra inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// "c*v^k" pieces with sign handling; `first` suppresses a leading '+'.
inline void append_monomial(std::string& out, const Rational& c, const std::string& vars, bool first) {
  if (c.sign() < 0) out += '-';
  else if (!first) out += '+';
  Rational mag = c.abs();
  if (vars.empty()) {
    out += mag.to_string();
  } else {
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += vars;
  }
}

inline std::string power(char var, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(k);
}

inline std::string join_vars(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

inline std::string format_qpoly(const QPoly& p, bool ascending) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  auto emit = [&](std::size_t k) {
    const Rational& c = p.coeffs()[k];
    if (c.is_zero()) return;
    append_monomial(out, c, power(p.var(), k), first);
    first = false;
  };
  const std::size_t n = p.coeffs().size();
  if (ascending) {
    for (std::size_t k = 0; k < n; ++k) emit(k);
  } else {
    for (std::size_t k = n; k-- > 0;) emit(k);
  }
  return out;
}

inline std::size_t term_count(const QPoly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs()) n += c.is_zero() ? 0 : 1;
  return n;
}

}  // namespace text_detail

inline std::string to_string(const QPoly& p) { return text_detail::format_qpoly(p, false); }

inline std::string to_string(const QtPoly& p) {
  using namespace text_detail;
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const QPoly& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string xk = power('x', k);
    if (term_count(c) == 1) {
      std::size_t m = c.valuation();
      append_monomial(out, c.coeffs()[m], join_vars(power('t', m), xk), first);
    } else {
      if (!first) out += '+';
      out += "(" + format_qpoly(c, true) + ")";
      if (!xk.empty()) out += "*" + xk;
    }
    first = false;
  }
  return out;
}

inline std::string to_string(const RatFunc& f) {
  using namespace text_detail;
  if (f.is_polynomial()) return to_string(f.num());
  auto [num, den] = integer_fraction(f);
  std::string ns = to_string(num), ds = to_string(den);
  if (term_count(num) > 1) ns = "(" + ns + ")";
  if (term_count(den) > 1 || !den.leading().is_one()) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

inline std::string to_string(const Rational& r) { return r.to_string(); }

inline QtPoly parse_qt_poly(std::string_view text) {
  return text_detail::Parser<QtPoly>(text).parse();
}

// Polynomial in a single variable: 'x' rejects t, 't' rejects x.
inline QPoly parse_qpoly(std::string_view text, char var = 'x') {
  QtPoly p = parse_qt_poly(text);
  if (var == 't') {
    if (p.degree() > 0) throw ParseError("expected a polynomial in t only: '" + std::string(text) + "'");
    return p.coeff(0);
  }
  if (!is_t_free(p)) throw ParseError("expected a polynomial in x only: '" + std::string(text) + "'");
  return drop_t(p);
}

inline RatFunc parse_ratfunc(std::string_view text) {
  return text_detail::Parser<RatFunc>(text).parse();
}

}  // namespace ramcover
