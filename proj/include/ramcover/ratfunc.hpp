#pragma once

#include <utility>

#include "ramcover/error.hpp"
#include "ramcover/poly.hpp"

namespace ramcover {

// Reduced fraction num/den over Q with den monic. Two RatFuncs are equal
// exactly when their stored representations are.
class RatFunc {
 public:
  RatFunc() : num_('x'), den_(Rational(1), 'x') {}
  explicit RatFunc(QPoly num) : num_(std::move(num)), den_(Rational(1), num_.var()) {}
  RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
  }

  static RatFunc variable(char var = 'x') { return RatFunc(QPoly::variable(var)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  char var() const { return num_.is_constant() ? den_.var() : num_.var(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    // Cross-cancel first so the products stay small.
    QPoly g1 = a.num_.is_zero() ? QPoly(Rational(1)) : poly_gcd(a.num_, b.den_);
    QPoly g2 = b.num_.is_zero() ? QPoly(Rational(1)) : poly_gcd(b.num_, a.den_);
    return RatFunc(exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2),
                   exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1));
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return a * b.inverse();
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RatFunc(den_, num_);
  }

  RatFunc pow(unsigned e) const { return RatFunc(num_.pow(e), den_.pow(e)); }

  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  // this(inner): homogenize both parts at the common degree m so that
  // N(P/Q) / D(P/Q) = N_h(P, Q) / D_h(P, Q).
  RatFunc compose(const RatFunc& inner) const {
    const int m = std::max(num_.degree(), den_.degree());
    return RatFunc(homogenize(num_, inner, m), homogenize(den_, inner, m));
  }

  Rational operator()(const Rational& at) const {
    Rational d = den_(at);
    if (d.is_zero()) throw DivisionByZero("rational function evaluated at a pole");
    return num_(at) / d;
  }

 private:
  static QPoly homogenize(const QPoly& p, const RatFunc& inner, int m) {
    const char v = inner.var();
    QPoly acc(v);
    if (p.is_zero()) return acc;
    // sum_i p_i P^i Q^(m-i), Horner in P/Q scaled by powers of Q.
    std::vector<QPoly> qpow{QPoly(Rational(1), v)};
    for (int i = 1; i <= m; ++i) qpow.push_back(qpow.back() * inner.den_);
    QPoly ppow(Rational(1), v);
    for (int i = 0; i <= p.degree(); ++i) {
      const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
      if (!c.is_zero()) acc += (ppow * qpow[static_cast<std::size_t>(m - i)]).scaled(c);
      ppow *= inner.num_;
    }
    return acc;
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = QPoly(Rational(1), den_.var());
      return;
    }
    if (!den_.is_constant()) {
      QPoly g = poly_gcd(num_, den_);
      if (!g.is_one()) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
      }
    }
    Rational lead = den_.leading();
    if (!lead.is_one()) {
      Rational inv = lead.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  QPoly num_;
  QPoly den_;
};

// num/den rescaled to coprime integer coefficients with den's leading
// coefficient positive; the quotient is unchanged.
inline std::pair<QPoly, QPoly> integer_fraction(const RatFunc& f) {
  IntegerForm n = integer_form(f.num());
  IntegerForm d = integer_form(f.den());
  Rational overall = n.scale / d.scale;
  return {n.primitive.scaled(Rational(overall.numerator())),
          d.primitive.scaled(Rational(overall.denominator()))};
}

}  // namespace ramcover
