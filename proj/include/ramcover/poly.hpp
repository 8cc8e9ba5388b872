#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "ramcover/error.hpp"
#include "ramcover/rational.hpp"

namespace ramcover {

template <class R>
class Poly;

template <class T>
struct is_poly : std::false_type {};
template <class R>
struct is_poly<Poly<R>> : std::true_type {};

// Dense univariate polynomial over the ring R, coefficients stored lowest
// degree first with no trailing zeros. The variable tag only matters for
// non-constant polynomials: constants combine with anything.
//
// R is either Rational (Q[x], Q[t]) or Poly<Rational> (Q[t][x], x outermost).
template <class R>
class Poly {
 public:
  using coeff_type = R;
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(char var) : var_(var) {}
  explicit Poly(const R& c, char var = 'x') : var_(var) {
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit Poly(long c, char var = 'x') : Poly(R(c), var) {}
  explicit Poly(std::vector<R> coeffs, char var = 'x') : c_(std::move(coeffs)), var_(var) {
    trim();
  }

  static Poly variable(char var = 'x') { return monomial(R(1L), 1, var); }
  static Poly monomial(const R& c, std::size_t k, char var = 'x') {
    Poly p(var);
    if (c.is_zero()) return p;
    p.c_.assign(k + 1, R());
    p.c_[k] = c;
    return p;
  }

  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  char var() const { return var_; }
  std::span<const R> coeffs() const { return c_; }

  // Coefficient of var^k; zero beyond the degree.
  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(); }
  const R& leading() const {
    if (c_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
    return c_.back();
  }
  // Order of vanishing at var = 0.
  std::size_t valuation() const {
    if (c_.empty()) throw InvalidInput("valuation of the zero polynomial");
    std::size_t k = 0;
    while (c_[k].is_zero()) ++k;
    return k;
  }
  // True when the polynomial is c * var^k for a single k.
  bool is_monomial() const {
    return !c_.empty() && valuation() == c_.size() - 1;
  }

  Poly& operator+=(const Poly& o) {
    adopt_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    adopt_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.var_);
    r.adopt_var(b);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, R());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  Poly scaled(const R& s) const {
    Poly r(var_);
    if (s.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.trim();
    return r;
  }
  // Multiply by var^k.
  Poly shifted(std::size_t k) const {
    Poly r = *this;
    if (!r.c_.empty()) r.c_.insert(r.c_.begin(), k, R());
    return r;
  }
  Poly pow(unsigned e) const {
    Poly result(R(1L), var_);
    Poly base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_ != b.c_) return false;
    return a.is_constant() || a.var_ == b.var_;
  }

  // Horner evaluation at a ring element.
  R operator()(const R& at) const {
    R acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly derivative() const {
    Poly r(var_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r.c_.push_back(c_[k] * R(static_cast<long>(k)));
    r.trim();
    return r;
  }

  // this(inner(var)).
  Poly compose(const Poly& inner) const {
    Poly acc(inner.var_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it, inner.var_);
    return acc;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Poly<S>(std::move(out), var_);
  }

  // Pieces of a polynomial with var^k terms only, k >= from (divided by var^from).
  Poly drop_low(std::size_t from) const {
    Poly r(var_);
    if (from < c_.size()) r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(from), c_.end());
    return r;
  }
  Poly truncated(std::size_t below) const {
    Poly r(var_);
    r.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(below, c_.size())));
    r.trim();
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  void adopt_var(const Poly& o) {
    if (o.is_constant()) return;
    if (!is_constant() && var_ != o.var_)
      throw InvalidInput(std::string("polynomial variables differ: ") + var_ + " vs " + o.var_);
    var_ = o.var_;
  }

  std::vector<R> c_;
  char var_ = 'x';
};

using QPoly = Poly<Rational>;   // Q[x] or Q[t]
using QtPoly = Poly<QPoly>;     // Q[t][x]

inline Rational exact_quotient(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZero("rational division by zero");
  return a / b;
}

template <class R>
Poly<R> exact_quotient(const Poly<R>& a, const Poly<R>& b);

// Long division over a field: a = q*b + r with deg r < deg b.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Rational inv_lead = b.leading().inverse();
  std::vector<Rational> quo;
  if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db + 1), Rational());
  auto bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    Rational q = top * inv_lead;
    const std::size_t shift = static_cast<std::size_t>(k - db);
    for (std::size_t i = 0; i < bc.size(); ++i) rem[shift + i] -= q * bc[i];
    quo[shift] = q;
  }
  return {QPoly(std::move(quo), a.var()), QPoly(std::move(rem), a.var())};
}

// a / b when b divides a exactly; NotDivisible otherwise. Works over Q[x]
// and over Q[t][x] (where leading-coefficient division must itself be exact).
template <class R>
Poly<R> exact_quotient(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if constexpr (std::is_same_v<R, Rational>) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw NotDivisible("nonzero remainder in exact division");
    return q;
  } else {
    std::vector<R> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    std::vector<R> quo;
    if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db + 1), R());
    auto bc = b.coeffs();
    for (int k = a.degree(); k >= db; --k) {
      if (rem[static_cast<std::size_t>(k)].is_zero()) continue;
      R q = exact_quotient(rem[static_cast<std::size_t>(k)], b.leading());
      const std::size_t shift = static_cast<std::size_t>(k - db);
      for (std::size_t i = 0; i < bc.size(); ++i) rem[shift + i] -= q * bc[i];
      quo[shift] = q;
    }
    for (const auto& c : rem)
      if (!c.is_zero()) throw NotDivisible("nonzero remainder in exact division");
    return Poly<R>(std::move(quo), a.var());
  }
}

inline QPoly make_monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading().inverse());
}

// Monic greatest common divisor over Q.
inline QPoly poly_gcd(QPoly a, QPoly b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

// Product of the distinct irreducible factors of a, made monic.
inline QPoly squarefree_part(const QPoly& a) {
  if (a.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  if (a.is_constant()) return QPoly(Rational(1), a.var());
  return make_monic(exact_quotient(a, poly_gcd(a, a.derivative())));
}

// p = scale * q where q has coprime integer coefficients and positive
// leading coefficient. Zero maps to (1, 0).
struct IntegerForm {
  Rational scale;
  QPoly primitive;
};

inline IntegerForm integer_form(const QPoly& p) {
  if (p.is_zero()) return {Rational(1), p};
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
  }
  Rational scale(num_gcd, den_lcm);
  if (p.leading().sign() < 0) scale = -scale;
  return {scale, p.scaled(scale.inverse())};
}

// Lift a Q[x] polynomial into Q[t][x] with constant t-coefficients.
inline QtPoly lift_to_qt(const QPoly& p) {
  return p.map_coefficients([](const Rational& c) { return QPoly(c, 't'); });
}

// Coefficient of t^k in every x-coefficient, as a Q[x] polynomial.
inline QPoly t_coefficient(const QtPoly& p, std::size_t k) {
  return p.map_coefficients([k](const QPoly& c) { return c.coeff(k); });
}

inline bool is_t_free(const QtPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const QPoly& c) { return c.is_constant(); });
}

// Substitute t := value in every coefficient.
inline QtPoly specialize_t(const QtPoly& p, const Rational& value) {
  return p.map_coefficients([&value](const QPoly& c) { return QPoly(c(value), 't'); });
}

inline QPoly drop_t(const QtPoly& p) {
  if (!is_t_free(p)) throw InvalidInput("polynomial depends on t");
  return t_coefficient(p, 0);
}

}  // namespace ramcover
