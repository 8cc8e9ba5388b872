#pragma once

// The acceptance suite: one exact check per criterion, shared by the
// `acceptance` test binary and `ramcover selftest`.

#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ramcover/ramcover.hpp"
#include "ramcover/selftest/oracles.hpp"

namespace ramcover::selftest {

struct AcceptanceConfig {
  int family_max_genus = 12;
  int deform_max_genus = 8;
  int staircase_max_genus = 20;
  int relabelings = 100;
  std::uint32_t seed = 0x5eed;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace acceptance_detail {

// Collects the first failure; later checks still run so the detail names
// every broken case, up to a cap.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass_ = false;
    if (failures_++ < 4) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  bool pass() const { return pass_; }
  std::string detail(const std::string& on_pass) const {
    if (pass_) return on_pass;
    return failures_ > 4 ? detail_ + "; +" + std::to_string(failures_ - 4) + " more" : detail_;
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::string detail_;
};

inline std::string range(int lo, int hi) { return "g=" + std::to_string(lo) + ".." + std::to_string(hi); }

inline Permutation random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

}  // namespace acceptance_detail

inline CriterionResult theorem_reproduction(const AcceptanceConfig& cfg) {
  acceptance_detail::Checker c;
  for (int g = 1; g <= cfg.family_max_genus; ++g)
    c.expect(verify_cover_identity(build_family(g).cover).holds, "identity fails at g=" + std::to_string(g));
  return {1, "cover identity holds exactly over Q(t)", c.pass(),
          c.detail(acceptance_detail::range(1, cfg.family_max_genus))};
}

inline CriterionResult pullback_law(const AcceptanceConfig& cfg) {
  acceptance_detail::Checker c;
  for (int g = 1; g <= cfg.family_max_genus; ++g) {
    const RatFunc expected(oracle::x_to(static_cast<std::size_t>(g - 1)).scaled(Rational(2L * g - 1)));
    const RatFunc got = pullback_invariant_differential(build_family(g).cover);
    c.expect(got == expected, "g=" + std::to_string(g) + " pullback " + to_string(got));
  }
  return {2, "pullback of dx/y is (2g-1) x^(g-1) dx/y", c.pass(),
          c.detail(acceptance_detail::range(1, cfg.family_max_genus))};
}

inline CriterionResult published_value_regressions(const AcceptanceConfig&) {
  acceptance_detail::Checker c;
  const QtPoly g2 = parse_qt_poly("x^5+(1+9*t)*x^4+33*t*x^3+40*t*x^2+16*t*x");
  const QtPoly g3 = parse_qt_poly("x^7+(1+25*t)*x^6+225*t*x^5+760*t*x^4+1200*t*x^3+896*t*x^2+256*t*x");
  c.expect(build_family(2).cover.source.rhs() == g2, "g=2 curve " + to_string(build_family(2).cover.source.rhs()));
  c.expect(build_family(3).cover.source.rhs() == g3, "g=3 curve " + to_string(build_family(3).cover.source.rhs()));
  return {3, "genus-2 and genus-3 curves match coefficient for coefficient", c.pass(), c.detail("g=2, g=3")};
}

inline CriterionResult degeneration_rederivation(const AcceptanceConfig& cfg) {
  acceptance_detail::Checker c;
  const DeformationReport r2 = deform_with_report(2);
  const std::vector<std::pair<std::string, long>> expected{{"a", 9}, {"b", 33}, {"c", 40}, {"d", 16},
                                                           {"e", 0}, {"f", 0},  {"g", 0}};
  c.expect(r2.ansatz.names.size() == expected.size(), "genus-2 ansatz has " + std::to_string(r2.ansatz.names.size()) + " unknowns");
  for (std::size_t i = 0; i < expected.size() && i < r2.ansatz.names.size(); ++i) {
    c.expect(r2.ansatz.names[i] == expected[i].first && r2.solve.solution[i] == Rational(expected[i].second),
             r2.ansatz.names[i] + "=" + r2.solve.solution[i].to_string());
  }
  for (int g = 2; g <= cfg.deform_max_genus; ++g) {
    const DeformationReport r = deform_with_report(g);
    c.expect(r.exactness.holds, "exactness certificate fails at g=" + std::to_string(g));
    c.expect(r.instance == build_family(g), "deform differs from family at g=" + std::to_string(g));
  }
  return {4, "deformation recovers a=9,b=33,c=40,d=16,e=f=g=0 and the family", c.pass(),
          c.detail(acceptance_detail::range(2, cfg.deform_max_genus) + ", exact in t")};
}

inline CriterionResult origami_conformance(const AcceptanceConfig& cfg) {
  acceptance_detail::Checker c;
  const OrigamiDiagram l_shape = OrigamiDiagram::parse("3; right=(2 3); up=(1 2)");
  c.expect(commutator(l_shape) == Permutation::parse(3, "(1 3 2)"), "commutator " + commutator(l_shape).to_string());
  c.expect(vertex_count(l_shape) == 1, "L-shape vertex count");
  c.expect(genus(l_shape) == 2, "L-shape genus");

  for (int g = 1; g <= cfg.staircase_max_genus; ++g) {
    const OrigamiDiagram d = staircase(g);
    const std::vector<std::size_t> full{static_cast<std::size_t>(2 * g - 1)};
    c.expect(monodromy_cycle_type(d) == full && vertex_count(d) == 1 && genus(d) == g,
             "staircase g=" + std::to_string(g));
  }

  std::mt19937 rng(cfg.seed);
  for (std::size_t n : {3U, 5U, 7U}) {
    for (int trial = 0; trial < cfg.relabelings; ++trial) {
      // Alternate between the staircase and a random gluing.
      const OrigamiDiagram d = trial % 2 == 0
                                   ? staircase(static_cast<int>(n + 1) / 2)
                                   : OrigamiDiagram(acceptance_detail::random_permutation(n, rng),
                                                    acceptance_detail::random_permutation(n, rng));
      const Permutation sigma = acceptance_detail::random_permutation(n, rng);
      c.expect(monodromy_cycle_type(d.relabeled(sigma)) == monodromy_cycle_type(d),
               "cycle type changed under relabeling of " + d.to_string());
    }
  }
  return {5, "origami commutator, staircases, conjugation invariance", c.pass(),
          c.detail("(1 3 2); staircase " + acceptance_detail::range(1, cfg.staircase_max_genus) + "; " +
                   std::to_string(cfg.relabelings) + " relabelings per n in {3,5,7}")};
}

inline CriterionResult degenerate_specializations(const AcceptanceConfig& cfg) {
  acceptance_detail::Checker c;
  for (int g = 2; g <= cfg.deform_max_genus; ++g) {
    const HyperellipticCurve& ct = build_family(g).cover.source;
    const QPoly expected = oracle::x_to(static_cast<std::size_t>(2 * g + 1)) + oracle::x_to(static_cast<std::size_t>(2 * g));
    const HyperellipticCurve at0 = specialize_t(ct, Rational(0));
    const HyperellipticCurve at_minus1 = specialize_t(ct, Rational(-1));
    c.expect(drop_t(at0.rhs()) == expected, "g=" + std::to_string(g) + " C_0 = " + to_string(at0.rhs()));
    c.expect(genus_geometric(at0) == 0, "g=" + std::to_string(g) + " t=0 geometric genus " + std::to_string(genus_geometric(at0)));
    c.expect(genus_geometric(at_minus1) == 0,
             "g=" + std::to_string(g) + " t=-1 geometric genus " + std::to_string(genus_geometric(at_minus1)));
  }
  return {6, "t=0 gives x^(2g)(x+1); t=0 and t=-1 have geometric genus 0", c.pass(),
          c.detail(acceptance_detail::range(2, cfg.deform_max_genus))};
}

inline CriterionResult two_branch_map_law(const AcceptanceConfig&) {
  acceptance_detail::Checker c;
  const RatFunc expected(QPoly(std::vector<Rational>{0L, 3L, 0L, 1L}, 'z'),
                         QPoly(std::vector<Rational>{1L, 0L, 3L}, 'z'));
  c.expect(two_branch_map(3) == expected, "n=3 gives " + to_string(two_branch_map(3)));
  const QPoly z2m1(std::vector<Rational>{-1L, 0L, 1L}, 'z');
  for (int n : {1, 3, 5, 7, 9}) {
    const RatFunc f = two_branch_map(n);
    c.expect(f(Rational(1)) == Rational(1) && f(Rational(-1)) == Rational(-1), "n=" + std::to_string(n) + " moves +-1");
    // Derivative numerator (before reduction, f' = (N'D - ND') / D^2).
    const QPoly dnum = f.num().derivative() * f.den() - f.num() * f.den().derivative();
    const QPoly target = z2m1.pow(static_cast<unsigned>(n - 1));
    bool proportional = false;
    if (dnum.degree() == target.degree() && !dnum.is_zero())
      proportional = dnum == target.scaled(dnum.leading() / target.leading());
    c.expect(proportional, "n=" + std::to_string(n) + " derivative numerator " + to_string(dnum));
  }
  return {7, "two-branch map (z^3+3z)/(3z^2+1); fixes +-1, derivative ~ (z^2-1)^(n-1)", c.pass(),
          c.detail("n in {1,3,5,7,9}")};
}

inline CriterionResult companion_oracle(const AcceptanceConfig& cfg) {
  acceptance_detail::Checker c;
  for (int g = 1; g <= cfg.family_max_genus; ++g) {
    const oracle::CompanionExpansion ref = oracle::companion_expansion(g);
    const std::string at = "g=" + std::to_string(g);
    c.expect(j_poly(g) == ref.j, at + " j differs from (1+-u)^n expansion");
    c.expect(k_poly(g) == ref.k, at + " k differs from (1+-u)^n expansion");
    const QPoly xp1(std::vector<Rational>{1L, 1L}, 'x');
    const auto n = static_cast<std::size_t>(2 * g - 1);
    c.expect(xp1 * ref.k * ref.k == ref.j * ref.j + oracle::x_to(n), at + " oracle norm identity");
    const Rational nr(static_cast<long>(n));
    c.expect(ref.j.scaled(nr) - (oracle::x_to(1) * ref.j.derivative()).scaled(Rational(2)) == ref.k.scaled(nr),
             at + " oracle derivative identity");
    c.expect(companion_identities(g).holds(), at + " companion_identities reports failure");
  }
  return {8, "companion identities agree with the (1+-u)^(2g-1) oracle", c.pass(),
          c.detail(acceptance_detail::range(1, cfg.family_max_genus))};
}

// Runs every criterion, printing one PASS/FAIL line each.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg, std::ostream& out) {
  using Fn = std::function<CriterionResult(const AcceptanceConfig&)>;
  const std::vector<std::pair<int, Fn>> criteria{
      {1, theorem_reproduction},      {2, pullback_law},       {3, published_value_regressions},
      {4, degeneration_rederivation}, {5, origami_conformance}, {6, degenerate_specializations},
      {7, two_branch_map_law},        {8, companion_oracle}};
  std::vector<CriterionResult> results;
  for (const auto& [id, fn] : criteria) {
    CriterionResult r;
    try {
      r = fn(cfg);
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what()};
    }
    out << (r.pass ? "[PASS] " : "[FAIL] ") << "AC" << r.id << " " << r.name << " (" << r.detail << ")\n";
    results.push_back(std::move(r));
  }
  return results;
}

inline bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace ramcover::selftest
