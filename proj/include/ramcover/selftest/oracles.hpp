#pragma once

// Independent reference computations used by the tests and the acceptance
// suite. Nothing here calls into family.hpp, degeneration.hpp, binomial()
// or Poly::compose; only plain polynomial ring arithmetic is shared.

#include <cstddef>
#include <vector>

#include "ramcover/poly.hpp"

namespace ramcover::oracle {

// (1 + sign*u)^n by repeated multiplication.
inline QPoly one_plus_u_power(int sign, int n) {
  const QPoly factor(std::vector<Rational>{Rational(1), Rational(sign)}, 'u');
  QPoly acc(Rational(1), 'u');
  for (int i = 0; i < n; ++i) acc = acc * factor;
  return acc;
}

// sum c_i w^i -> sum c_i (x+1)^i, expanding (x+1)^i by repeated products.
inline QPoly substitute_x_plus_one(const std::vector<Rational>& w_coeffs) {
  const QPoly shift(std::vector<Rational>{Rational(1), Rational(1)}, 'x');
  QPoly acc('x'), power(Rational(1), 'x');
  for (const auto& c : w_coeffs) {
    acc = acc + power.scaled(c);
    power = power * shift;
  }
  return acc;
}

struct CompanionExpansion {
  QPoly j;  // ((1+u)^n + (1-u)^n) / 2 with u^2 = x + 1
  QPoly k;  // ((1+u)^n - (1-u)^n) / (2u) with u^2 = x + 1
};

// The half-sum and half-difference of (1 +- u)^(2g-1), split by parity of u.
inline CompanionExpansion companion_expansion(int g) {
  const int n = 2 * g - 1;
  const QPoly plus = one_plus_u_power(1, n), minus = one_plus_u_power(-1, n);
  const QPoly even = (plus + minus).scaled(Rational(1, 2));
  const QPoly odd = (plus - minus).scaled(Rational(1, 2));
  std::vector<Rational> even_w, odd_w;
  for (int i = 0; i <= n; i += 2) even_w.push_back(even.coeff(static_cast<std::size_t>(i)));
  for (int i = 1; i <= n; i += 2) odd_w.push_back(odd.coeff(static_cast<std::size_t>(i)));
  return {substitute_x_plus_one(even_w), substitute_x_plus_one(odd_w)};
}

// x^m
inline QPoly x_to(std::size_t m) { return QPoly::monomial(Rational(1), m, 'x'); }

}  // namespace ramcover::oracle
