#pragma once

// Rediscovering the family from its t = 0 degeneration.
//
// At t = 0 the Legendre curve becomes the nodal cubic y^2 = x^3 + x^2 and
// the genus-g source becomes y^2 = x^(2g)(x+1), both rational. Covers
// between them are covers between their normalizing lines branched only
// over the node's preimages +-1, hence conjugates of z -> z^n. Perturbing
// that degenerate cover linearly in t and solving the order-t constraints
// recovers the smooth family.

#include <string>
#include <vector>

#include "ramcover/curves.hpp"
#include "ramcover/error.hpp"
#include "ramcover/family.hpp"
#include "ramcover/linear_system.hpp"
#include "ramcover/poly.hpp"
#include "ramcover/ratfunc.hpp"

namespace ramcover {

// u -> (x(u), y(u)), a parametrization of a rational Weierstrass curve.
struct ParametrizedCurve {
  QPoly x_of_u;
  QPoly y_of_u;

  bool parametrizes(const QPoly& rhs) const { return y_of_u * y_of_u == rhs.compose(x_of_u); }
};

namespace degeneration_detail {

inline QPoly upoly(std::vector<Rational> c) { return QPoly(std::move(c), 'u'); }

inline void require_genus(int g) {
  if (g < 2) throw InvalidGenus("degeneration needs genus at least 2, got " + std::to_string(g));
}

// sum c_{2i} u^{2i}  ->  sum c_{2i} (x+1)^i, i.e. substitute u^2 = x + 1.
inline QPoly even_to_x(const QPoly& p) {
  const QPoly shift(std::vector<Rational>{Rational(1), Rational(1)});
  QPoly acc, power(Rational(1));
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k % 2 == 1) {
      if (!p.coeffs()[k].is_zero()) throw PipelineError("expected an even function of u");
      continue;
    }
    acc += power.scaled(p.coeffs()[k]);
    power *= shift;
  }
  return acc;
}

inline std::string unknown_name(std::size_t index, std::size_t total, char group, std::size_t in_group) {
  if (total <= 26) return std::string(1, static_cast<char>('a' + index));
  return std::string(1, group) + std::to_string(in_group + 1);
}

}  // namespace degeneration_detail

// y^2 = x^3 + x^2 via u -> (u^2 - 1, u^3 - u); the node has preimages u = +-1.
inline ParametrizedCurve normalize_nodal_cubic() {
  using degeneration_detail::upoly;
  ParametrizedCurve pc{upoly({Rational(-1), Rational(0), Rational(1)}),
                       upoly({Rational(0), Rational(-1), Rational(0), Rational(1)})};
  if (!pc.parametrizes(QPoly(std::vector<Rational>{0L, 0L, 1L, 1L})))
    throw PipelineError("nodal cubic parametrization failed validation");
  return pc;
}

inline QPoly degenerate_source_rhs(int g) {
  // x^(2g) (x + 1)
  return QPoly::monomial(Rational(1), static_cast<std::size_t>(2 * g)) +
         QPoly::monomial(Rational(1), static_cast<std::size_t>(2 * g + 1));
}

// y^2 = x^(2g)(x+1) via u -> (u^2 - 1, u (u^2 - 1)^g).
inline ParametrizedCurve normalize_degenerate_source(int g) {
  using degeneration_detail::upoly;
  degeneration_detail::require_genus(g);
  QPoly x = upoly({Rational(-1), Rational(0), Rational(1)});
  ParametrizedCurve pc{x, x.pow(static_cast<unsigned>(g)).shifted(1)};
  if (!pc.parametrizes(degenerate_source_rhs(g)))
    throw PipelineError("degenerate source parametrization failed validation");
  return pc;
}

// ((1+z)^n - (1-z)^n) / ((1+z)^n + (1-z)^n): z^n conjugated by
// z -> (1+z)/(1-z); fixes +-1 and is branched only there.
inline RatFunc two_branch_map(int n, char var = 'z') {
  if (n < 1 || n % 2 == 0) throw InvalidDegree("two-branch map degree must be odd and positive, got " + std::to_string(n));
  const QPoly plus(std::vector<Rational>{Rational(1), Rational(1)}, var);
  const QPoly minus(std::vector<Rational>{Rational(1), Rational(-1)}, var);
  const QPoly a = plus.pow(static_cast<unsigned>(n)), b = minus.pow(static_cast<unsigned>(n));
  return RatFunc(a - b, a + b);
}

// The degree-(2g-1) cover y^2 = x^(2g)(x+1) -> y^2 = x^3 + x^2 obtained by
// going through the normalizations: (x, y) -> u = y / x^g -> z = T(u) ->
// (z^2 - 1, z^3 - z).
inline Cover degenerate_cover(int g) {
  using degeneration_detail::even_to_x;
  degeneration_detail::require_genus(g);
  const ParametrizedCurve src = normalize_degenerate_source(g);
  const ParametrizedCurve tgt = normalize_nodal_cubic();
  const RatFunc t_map = two_branch_map(2 * g - 1, 'u');
  const RatFunc u = RatFunc::variable('u');
  const RatFunc x_of_u(src.x_of_u), y_of_u(src.y_of_u);

  // Near-inverse of the source normalization: y / x^g = u off the node.
  if (!(y_of_u / x_of_u.pow(static_cast<unsigned>(g)) == u))
    throw PipelineError("y / x^g is not inverse to the source normalization");

  const RatFunc big_x = RatFunc(tgt.x_of_u).compose(t_map);  // x_E(T(u)), even in u
  const RatFunc big_y = RatFunc(tgt.y_of_u).compose(t_map);  // y_E(T(u)), odd in u
  const RatFunc y_over_u = big_y / u;

  const RatFunc f1(even_to_x(big_x.num()), even_to_x(big_x.den()));
  const RatFunc f2(even_to_x(y_over_u.num()),
                   even_to_x(y_over_u.den()) * x_power(static_cast<std::size_t>(g)));

  // The square must commute: f o (source normalization) = (target normalization) o T.
  if (!(f1.compose(x_of_u) == big_x) || !(f2.compose(x_of_u) * y_of_u == big_y))
    throw PipelineError("normalization square does not commute");

  Cover cover{HyperellipticCurve::over_q(degenerate_source_rhs(g)),
              HyperellipticCurve::over_q(QPoly(std::vector<Rational>{0L, 0L, 1L, 1L})),
              CoverMap{f1, f2}, 2 * g - 1};
  if (!verify_cover_identity(cover).holds) throw PipelineError("degenerate map violates the cover identity");
  return cover;
}

// First-order deformation of the degenerate cover:
//   source  x^(2g+1) + x^(2g) + t * sum_{i in curve_slots} a_i x^i
//   map     f1 = A / D^2,  f2 = C / D^3
//   D       shared_den + t * sum_{i in den_slots} d_i x^i
//   C       numerator_f2 + t * sum_{i in num_slots} n_i x^i
// with A = x^(2g-1) fixed and target x(x+1)(x+t). Unknowns are ordered
// curve slots, then denominator slots, then numerator slots, each by
// descending exponent.
struct DeformationAnsatz {
  int genus = 2;
  QPoly base_source;
  QtPoly target;
  QPoly numerator_f1;
  QPoly shared_den;
  QPoly numerator_f2;
  std::vector<std::size_t> curve_slots;
  std::vector<std::size_t> den_slots;
  std::vector<std::size_t> num_slots;
  std::vector<std::string> names;

  std::size_t unknowns() const { return curve_slots.size() + den_slots.size() + num_slots.size(); }
  std::size_t map_unknowns_begin() const { return curve_slots.size(); }
};

// Rescale the degenerate map so that A is monic: f1 = A / D^2, f2 = C / D^3.
inline DeformationAnsatz make_deformation_ansatz(int g) {
  degeneration_detail::require_genus(g);
  const Cover degenerate = degenerate_cover(g);
  const RatFunc& f1 = degenerate.map.f1;
  const RatFunc& f2 = degenerate.map.f2;

  const QPoly monic_den = exact_quotient(f2.den(), f1.den());
  if (!(monic_den * monic_den == f1.den())) throw PipelineError("f1 denominator is not the square of the shared one");
  const auto scale = rational_sqrt(f1.num().leading().inverse());
  if (!scale) throw PipelineError("leading coefficient of f1 is not a rational square");

  DeformationAnsatz a;
  a.genus = g;
  a.base_source = degenerate_source_rhs(g);
  a.target = legendre_curve().rhs();
  a.numerator_f1 = make_monic(f1.num());
  a.shared_den = monic_den.scaled(*scale);
  a.numerator_f2 = f2.num().scaled(*scale * *scale * *scale);

  for (std::size_t i = static_cast<std::size_t>(2 * g); i >= 1; --i) a.curve_slots.push_back(i);
  for (std::size_t i = static_cast<std::size_t>(a.shared_den.degree()) + 1; i-- > 0;) a.den_slots.push_back(i);
  const std::size_t low = a.numerator_f2.valuation();
  for (std::size_t i = static_cast<std::size_t>(a.numerator_f2.degree()); i-- > low;) a.num_slots.push_back(i);

  const std::size_t total = a.unknowns();
  std::size_t index = 0;
  for (std::size_t i = 0; i < a.curve_slots.size(); ++i, ++index)
    a.names.push_back(degeneration_detail::unknown_name(index, total, 'a', i));
  for (std::size_t i = 0; i < a.den_slots.size(); ++i, ++index)
    a.names.push_back(degeneration_detail::unknown_name(index, total, 'd', i));
  for (std::size_t i = 0; i < a.num_slots.size(); ++i, ++index)
    a.names.push_back(degeneration_detail::unknown_name(index, total, 'n', i));
  return a;
}

namespace degeneration_detail {

inline QtPoly perturbed(const QPoly& base, const std::vector<std::size_t>& slots,
                        const std::vector<Rational>& values, std::size_t offset) {
  QPoly delta;
  for (std::size_t i = 0; i < slots.size(); ++i)
    delta += QPoly::monomial(values[offset + i], slots[i]);
  return lift_to_qt(base) + QtPoly(QPoly::variable('t')) * lift_to_qt(delta);
}

// C^2 p - Q_h(A, D^2): zero exactly when the ansatz map is a cover.
inline QtPoly ansatz_residual(const DeformationAnsatz& a, const std::vector<Rational>& values) {
  const std::size_t nc = a.curve_slots.size(), nd = a.den_slots.size();
  const QtPoly p = perturbed(a.base_source, a.curve_slots, values, 0);
  const QtPoly d = perturbed(a.shared_den, a.den_slots, values, nc);
  const QtPoly c = perturbed(a.numerator_f2, a.num_slots, values, nc + nd);
  return c * c * p - curves_detail::homogenized_target(a.target, lift_to_qt(a.numerator_f1), d * d);
}

}  // namespace degeneration_detail

// One linear equation per power of x in the order-t part of the residual.
// The residual is affine in the unknowns at order t (every unknown carries
// a factor t), so column i is the order-t response to unknown i alone.
inline LinearSystem assemble_deformation_system(const DeformationAnsatz& a) {
  using degeneration_detail::ansatz_residual;
  const std::size_t n = a.unknowns();
  std::vector<Rational> values(n);
  const QtPoly base = ansatz_residual(a, values);
  if (!t_coefficient(base, 0).is_zero())
    throw PipelineError("degenerate cover does not satisfy the t = 0 identity");
  const QPoly base1 = t_coefficient(base, 1);

  std::vector<QPoly> columns;
  for (std::size_t i = 0; i < n; ++i) {
    values.assign(n, Rational());
    values[i] = Rational(1);
    columns.push_back(t_coefficient(ansatz_residual(a, values), 1) - base1);
  }

  int top = base1.degree();
  for (const auto& col : columns) top = std::max(top, col.degree());
  LinearSystem sys(n);
  for (int e = 0; e <= top; ++e) {
    const auto k = static_cast<std::size_t>(e);
    std::vector<Rational> row(n);
    bool nontrivial = !base1.coeff(k).is_zero();
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = columns[i].coeff(k);
      nontrivial = nontrivial || !row[i].is_zero();
    }
    if (nontrivial) sys.add_equation(std::move(row), -base1.coeff(k));
  }
  return sys;
}

inline LinearSystem assemble_deformation_system(int g) {
  return assemble_deformation_system(make_deformation_ansatz(g));
}

struct DeformationReport {
  DeformationAnsatz ansatz;
  LinearSystem system;
  SolveResult solve;
  IdentityCertificate exactness;
  FamilyInstance instance;
};

// Solve the order-t system, keep the map unperturbed, and certify the
// resulting curve exactly in t.
inline DeformationReport deform_with_report(const DeformationAnsatz& a) {
  LinearSystem sys = assemble_deformation_system(a);
  SolveResult sol = solve_exact(sys);
  if (!sol.solved()) throw DeformationFailed("order-t system for genus " + std::to_string(a.genus) + " is inconsistent");
  for (std::size_t i = a.map_unknowns_begin(); i < a.unknowns(); ++i) {
    if (!sol.solution[i].is_zero())
      throw FirstOrderOnly("map perturbation " + a.names[i] + " = " + sol.solution[i].to_string() +
                           " is nonzero; the unperturbed map does not deform");
  }

  std::vector<Rational> curve_values(sol.solution.begin(),
                                     sol.solution.begin() + static_cast<std::ptrdiff_t>(a.curve_slots.size()));
  HyperellipticCurve source(degeneration_detail::perturbed(a.base_source, a.curve_slots, curve_values, 0));
  const QPoly d2 = a.shared_den * a.shared_den;
  CoverMap map{RatFunc(a.numerator_f1, d2), RatFunc(a.numerator_f2, d2 * a.shared_den)};
  const int degree = map_degree(map);
  Cover cover{std::move(source), HyperellipticCurve(a.target), std::move(map), degree};

  IdentityCertificate exact = verify_cover_identity(cover);
  if (!exact.holds)
    throw FirstOrderOnly("first-order solution for genus " + std::to_string(a.genus) +
                         " does not satisfy the cover identity exactly");

  const std::size_t low = a.numerator_f2.valuation();
  FamilyInstance inst{a.genus, a.shared_den, a.numerator_f2.drop_low(low), std::move(cover)};
  return {a, std::move(sys), std::move(sol), std::move(exact), std::move(inst)};
}

inline DeformationReport deform_with_report(int g) { return deform_with_report(make_deformation_ansatz(g)); }

inline FamilyInstance deform(int g) { return deform_with_report(g).instance; }

}  // namespace ramcover
