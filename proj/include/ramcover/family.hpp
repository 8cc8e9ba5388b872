#pragma once

#include <string>

#include "ramcover/curves.hpp"
#include "ramcover/error.hpp"
#include "ramcover/poly.hpp"
#include "ramcover/ratfunc.hpp"

namespace ramcover {

// One member of the genus-g family: C_t: y^2 = x(x+1)(x^(2g-1) + t j(x)^2)
// mapping to E_t: y^2 = x(x+1)(x+t) by (x^(2g-1)/j^2, x^(g-1) k / j^3 * y).
struct FamilyInstance {
  int genus = 1;
  QPoly j;
  QPoly k;
  Cover cover;

  friend bool operator==(const FamilyInstance&, const FamilyInstance&) = default;
};

namespace family_detail {

inline void require_genus(int g) {
  if (g < 1) throw InvalidGenus("genus must be at least 1, got " + std::to_string(g));
}

// sum_{i<g} C(2g-1, 2i + parity) (x+1)^i
inline QPoly binomial_sum(int g, unsigned parity) {
  const QPoly shift(std::vector<Rational>{Rational(1), Rational(1)});
  QPoly acc, power(Rational(1));
  const auto n = static_cast<std::uint64_t>(2 * g - 1);
  for (int i = 0; i < g; ++i) {
    acc += power.scaled(Rational(binomial(n, 2 * static_cast<std::uint64_t>(i) + parity)));
    power *= shift;
  }
  return acc;
}

}  // namespace family_detail

inline QPoly j_poly(int g) {
  family_detail::require_genus(g);
  return family_detail::binomial_sum(g, 0);
}

inline QPoly k_poly(int g) {
  family_detail::require_genus(g);
  return family_detail::binomial_sum(g, 1);
}

inline QPoly x_power(std::size_t k) { return QPoly::monomial(Rational(1), k); }

// E_t: y^2 = x(x+1)(x+t)
inline HyperellipticCurve legendre_curve() {
  const QtPoly x = QtPoly::variable('x');
  const QtPoly t(QPoly::variable('t'));
  const QtPoly one(QPoly(Rational(1), 't'));
  return HyperellipticCurve(x * (x + one) * (x + t));
}

inline FamilyInstance build_family(int g) {
  family_detail::require_genus(g);
  const auto n = static_cast<std::size_t>(2 * g - 1);
  QPoly j = j_poly(g);
  QPoly k = k_poly(g);
  QPoly j2 = j * j;

  const QtPoly t(QPoly::variable('t'));
  const QtPoly x_xplus1 = lift_to_qt(x_power(2) + x_power(1));
  HyperellipticCurve source(x_xplus1 * (lift_to_qt(x_power(n)) + t * lift_to_qt(j2)));

  CoverMap map{RatFunc(x_power(n), j2),
               RatFunc(x_power(static_cast<std::size_t>(g - 1)) * k, j2 * j)};
  Cover cover{std::move(source), legendre_curve(), std::move(map), 2 * g - 1};
  return FamilyInstance{g, std::move(j), std::move(k), std::move(cover)};
}

struct CompanionCertificate {
  // (x+1) k^2 = j^2 + x^(2g-1)
  bool norm_identity = false;
  // (2g-1) j - 2x j' = (2g-1) k
  bool derivative_identity = false;

  bool holds() const { return norm_identity && derivative_identity; }
};

inline CompanionCertificate companion_identities(int g) {
  family_detail::require_genus(g);
  const QPoly j = j_poly(g), k = k_poly(g);
  const QPoly xplus1 = x_power(1) + QPoly(Rational(1));
  const Rational n(2L * g - 1);
  CompanionCertificate cert;
  cert.norm_identity = xplus1 * k * k == j * j + x_power(static_cast<std::size_t>(2 * g - 1));
  cert.derivative_identity =
      j.scaled(n) - (x_power(1) * j.derivative()).scaled(Rational(2)) == k.scaled(n);
  return cert;
}

}  // namespace ramcover
