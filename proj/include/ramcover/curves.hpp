#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include "ramcover/error.hpp"
#include "ramcover/poly.hpp"
#include "ramcover/poly_text.hpp"
#include "ramcover/ratfunc.hpp"

namespace ramcover {

// Affine Weierstrass model y^2 = rhs(x) with rhs in Q[t][x]. Curves over Q
// are simply the t-free ones.
class HyperellipticCurve {
 public:
  explicit HyperellipticCurve(QtPoly rhs) : rhs_(std::move(rhs)) {
    if (rhs_.is_zero()) throw InvalidCurve("right-hand side is zero");
  }
  static HyperellipticCurve over_q(const QPoly& rhs) { return HyperellipticCurve(lift_to_qt(rhs)); }

  const QtPoly& rhs() const { return rhs_; }
  int degree() const { return rhs_.degree(); }
  bool is_over_q() const { return is_t_free(rhs_); }

  friend bool operator==(const HyperellipticCurve& a, const HyperellipticCurve& b) {
    return a.rhs_ == b.rhs_;
  }

 private:
  QtPoly rhs_;
};

// (x, y) -> (f1(x), f2(x) * y).
struct CoverMap {
  RatFunc f1;
  RatFunc f2;

  friend bool operator==(const CoverMap&, const CoverMap&) = default;
};

struct Cover {
  HyperellipticCurve source;
  HyperellipticCurve target;
  CoverMap map;
  int degree = 1;

  friend bool operator==(const Cover&, const Cover&) = default;
};

inline int genus_arithmetic(const HyperellipticCurve& c) {
  if (c.degree() < 3) throw InvalidCurve("degree " + std::to_string(c.degree()) + " is below 3");
  return (c.degree() - 1) / 2;
}

// Genus of the smooth model of y^2 = squarefree part of rhs.
inline int genus_geometric(const HyperellipticCurve& c) {
  if (!c.is_over_q()) throw InvalidCurve("geometric genus needs a curve over Q, got t-dependent rhs");
  const int d = squarefree_part(drop_t(c.rhs())).degree();
  return std::max(0, (d - 1) / 2);
}

inline HyperellipticCurve specialize_t(const HyperellipticCurve& c, const Rational& value) {
  return HyperellipticCurve(specialize_t(c.rhs(), value));
}

// A curve over Q is singular when its rhs has a repeated root.
inline bool is_singular(const HyperellipticCurve& c) {
  const QPoly p = drop_t(c.rhs());
  return !(squarefree_part(p) == make_monic(p));
}

// Degree of (x, y) -> (f1(x), f2(x) y): the degree of f1 as a map of lines.
inline int map_degree(const CoverMap& m) {
  return std::max(m.f1.num().degree(), m.f1.den().degree());
}

struct IdentityCertificate {
  bool holds = false;
  // f2^2 * p and q(f1) with common denominators cleared:
  //   lhs = C^2 p B^d,  rhs = E^2 sum_i q_i A^i B^(d-i)
  // for f1 = A/B, f2 = C/E (integer-normalized) and d = deg q.
  std::string lhs;
  std::string rhs;
  std::string difference;
};

namespace curves_detail {

inline QtPoly homogenized_target(const QtPoly& q, const QtPoly& a, const QtPoly& b) {
  const int d = q.degree();
  QtPoly acc;
  QtPoly apow = QtPoly(QPoly(Rational(1), 't'));
  std::vector<QtPoly> bpow{QtPoly(QPoly(Rational(1), 't'))};
  for (int i = 1; i <= d; ++i) bpow.push_back(bpow.back() * b);
  for (int i = 0; i <= d; ++i) {
    const QPoly& qi = q.coeffs()[static_cast<std::size_t>(i)];
    if (!qi.is_zero()) acc += (apow * bpow[static_cast<std::size_t>(d - i)]).scaled(qi);
    apow *= a;
  }
  return acc;
}

}  // namespace curves_detail

// The two cleared sides of f2^2 * p = q(f1) for f1 = A/B, f2 = C/E with
// polynomial parts over Q[t]. Used both for verification and for
// assembling deformation systems.
inline std::pair<QtPoly, QtPoly> cover_identity_sides(const QtPoly& p, const QtPoly& q,
                                                       const QtPoly& a, const QtPoly& b,
                                                       const QtPoly& c, const QtPoly& e) {
  QtPoly lhs = c * c * p * b.pow(static_cast<unsigned>(q.degree()));
  QtPoly rhs = e * e * curves_detail::homogenized_target(q, a, b);
  return {std::move(lhs), std::move(rhs)};
}

// Exact check that the map sends the source curve into the target curve,
// as a formal identity in Q(t)(x).
inline IdentityCertificate verify_cover_identity(const Cover& cov) {
  auto [a, b] = integer_fraction(cov.map.f1);
  auto [c, e] = integer_fraction(cov.map.f2);
  auto [lhs, rhs] = cover_identity_sides(cov.source.rhs(), cov.target.rhs(), lift_to_qt(a),
                                         lift_to_qt(b), lift_to_qt(c), lift_to_qt(e));
  IdentityCertificate cert;
  cert.holds = lhs == rhs;
  cert.difference = to_string(lhs - rhs);
  cert.lhs = to_string(lhs);
  cert.rhs = to_string(rhs);
  return cert;
}

// lambda(x) with f^*(dx/y) = lambda(x) dx/y, i.e. f1'(x) / f2(x).
// Assumes the cover identity holds.
inline RatFunc pullback_invariant_differential(const Cover& cov) {
  if (cov.map.f2.is_zero()) throw InvalidCover("f2 is zero");
  return cov.map.f1.derivative() / cov.map.f2;
}

struct RamificationReport {
  Rational branch_point_x;
  int ramification_index = 0;
  RatFunc pullback_coefficient;
  int vanishing_order_at_origin = 0;
  bool riemann_hurwitz_balanced = false;
  bool totally_ramified = false;
};

// Certifies covers shaped like the Legendre family: odd-degree source,
// monomial pullback c x^m. The divisor of lambda(x) dx/y on the source is
// 2m (0,0) since dx/y is holomorphic and nonvanishing for odd degree and
// x has a double zero at the Weierstrass point (0,0); its total degree
// 2g-2 leaves no room for zeros elsewhere, including at infinity.
inline RamificationReport ramification_report(const Cover& cov) {
  const QtPoly& p = cov.source.rhs();
  const QtPoly& q = cov.target.rhs();
  if (p.degree() % 2 == 0) throw UnsupportedShape("source rhs has even degree");
  if (!p.coeff(0).is_zero()) throw UnsupportedShape("(0,0) is not on the source curve");

  RatFunc lambda = pullback_invariant_differential(cov);
  if (!lambda.is_polynomial() || lambda.is_zero() || !lambda.num().is_monomial())
    throw UnsupportedShape("pullback coefficient " + to_string(lambda) + " is not a monomial");

  const RatFunc& f1 = cov.map.f1;
  if (f1.den().coeff(0).is_zero()) throw UnsupportedShape("f1 has a pole at x = 0");
  if (f1.is_zero()) throw UnsupportedShape("f1 is zero");

  RamificationReport rep;
  rep.branch_point_x = f1(Rational(0));
  if (!q(QPoly(rep.branch_point_x, 't')).is_zero())
    throw UnsupportedShape("image of (0,0) is not a Weierstrass point of the target");
  rep.pullback_coefficient = lambda;
  rep.vanishing_order_at_origin = 2 * static_cast<int>(lambda.num().valuation());
  // ord_P(f1(x)) = e * ord_{f(P)}(x - x0), both Weierstrass points, so the
  // doubled orders cancel.
  QPoly shifted = f1.num() - f1.den().scaled(rep.branch_point_x);
  rep.ramification_index = static_cast<int>(shifted.valuation());

  const int gs = genus_arithmetic(cov.source), gt = genus_arithmetic(cov.target);
  const int e = rep.ramification_index;
  rep.riemann_hurwitz_balanced = 2 * gs - 2 == cov.degree * (2 * gt - 2) + (e - 1) &&
                                 rep.vanishing_order_at_origin == e - 1 &&
                                 rep.vanishing_order_at_origin == 2 * gs - 2;
  rep.totally_ramified = e == cov.degree;
  return rep;
}

struct Specialization {
  Cover cover;
  // Set when either specialized curve is singular (t = 0 or t = 1 for the
  // Legendre family): the result is a degenerate cover, not an error.
  bool degenerate = false;
};

inline Specialization specialize_cover(const Cover& cov, const Rational& value) {
  Cover out{specialize_t(cov.source, value), specialize_t(cov.target, value), cov.map, cov.degree};
  const bool degenerate = is_singular(out.source) || is_singular(out.target);
  return {std::move(out), degenerate};
}

}  // namespace ramcover
