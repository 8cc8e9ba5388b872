// ramcover: generate, verify, and rediscover totally ramified covers of
// Legendre elliptic curves.
//
// Exit status: 0 all checks pass, 1 a mathematical check failed,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramcover/ramcover.hpp"
#include "ramcover/selftest/acceptance.hpp"

namespace {

using ramcover::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accumulates named pass/fail checks for the certificate block.
class Checks {
 public:
  void add(const std::string& name, bool pass, const std::string& witness) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    c["witness"] = witness;
    list_.push_back(std::move(c));
    ok_ = ok_ && pass;
  }
  bool ok() const { return ok_; }
  const Json& json() const { return list_; }

 private:
  Json list_ = Json::array();
  bool ok_ = true;
};

Json envelope(const std::string& command, Json inputs) {
  Json doc;
  doc["command"] = command;
  doc["version"] = ramcover::kVersion;
  doc["inputs"] = std::move(inputs);
  return doc;
}

int finish(Json doc, const Checks& checks) {
  doc["checks"] = checks.json();
  doc["ok"] = checks.ok();
  std::cout << doc.dump(2) << "\n";
  return checks.ok() ? kOk : kCheckFailed;
}

void check_genus(int genus, int min, int max_genus) {
  if (genus < min)
    throw UsageError("--genus must be at least " + std::to_string(min) + ", got " + std::to_string(genus));
  if (genus > max_genus)
    throw UsageError("--genus " + std::to_string(genus) + " exceeds --max-genus " + std::to_string(max_genus));
}

// Identity, pullback, ramification and degree checks shared by generate
// and verify. Returns the certificate block.
Json certify_cover(const ramcover::Cover& cov, Checks& checks) {
  using namespace ramcover;
  const IdentityCertificate id = verify_cover_identity(cov);
  checks.add("cover_identity", id.holds, id.difference);

  const int declared = cov.degree, actual = map_degree(cov.map);
  checks.add("degree", declared == actual, "declared " + std::to_string(declared) + ", map degree " + std::to_string(actual));

  Json cert;
  cert["identity_ok"] = id.holds;
  cert["pullback"] = nullptr;
  cert["ramification_index"] = nullptr;
  cert["rh_balanced"] = nullptr;
  if (!id.holds || cov.map.f2.is_zero()) return cert;

  const RatFunc lambda = pullback_invariant_differential(cov);
  cert["pullback"] = to_string(lambda);
  try {
    const RamificationReport rep = ramification_report(cov);
    cert["ramification_index"] = rep.ramification_index;
    cert["rh_balanced"] = rep.riemann_hurwitz_balanced;
    std::ostringstream w;
    w << "e=" << rep.ramification_index << " at (0,0) over x=" << rep.branch_point_x.to_string()
      << ", ord of pullback " << rep.vanishing_order_at_origin;
    checks.add("riemann_hurwitz", rep.riemann_hurwitz_balanced, w.str());
    checks.add("totally_ramified", rep.totally_ramified, w.str());
  } catch (const UnsupportedShape& e) {
    cert["ramification_skipped"] = e.what();
  }
  return cert;
}

int cmd_generate(int genus, const std::string& format, int max_genus) {
  using namespace ramcover;
  check_genus(genus, 1, max_genus);
  const FamilyInstance fam = build_family(genus);
  Checks checks;
  Json cert = certify_cover(fam.cover, checks);

  const int g = genus;
  const RatFunc expected_pullback(x_power(static_cast<std::size_t>(g - 1)).scaled(Rational(2L * g - 1)));
  const bool pullback_ok = cert["pullback"].is_string() && pullback_invariant_differential(fam.cover) == expected_pullback;
  checks.add("pullback_law", pullback_ok, "expected " + to_string(expected_pullback));
  const CompanionCertificate comp = companion_identities(genus);
  checks.add("companion_norm_identity", comp.norm_identity, "(x+1)*k^2 = j^2 + x^" + std::to_string(2 * g - 1));
  checks.add("companion_derivative_identity", comp.derivative_identity, "(2g-1)*j - 2*x*j' = (2g-1)*k");

  if (format == "text") {
    std::cout << "genus " << g << ", degree " << fam.cover.degree << "\n"
              << "j(x) = " << to_string(fam.j) << "\n"
              << "k(x) = " << to_string(fam.k) << "\n"
              << "C_t: y^2 = " << to_string(fam.cover.source.rhs()) << "\n"
              << "E_t: y^2 = " << to_string(fam.cover.target.rhs()) << "\n"
              << "f1(x) = " << to_string(fam.cover.map.f1) << "\n"
              << "f2(x) = " << to_string(fam.cover.map.f2) << "\n"
              << "f*(dx/y) = (" << (cert["pullback"].is_string() ? cert["pullback"].get<std::string>() : "?")
              << ") dx/y\n";
    for (const auto& c : checks.json())
      std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "\n";
    return checks.ok() ? kOk : kCheckFailed;
  }

  Json doc = cover_to_json(fam.cover);
  Json head = envelope("generate", Json{{"genus", genus}});
  for (auto it = head.begin(); it != head.end(); ++it) doc[it.key()] = it.value();
  doc["genus"] = genus;
  doc["j"] = to_string(fam.j);
  doc["k"] = to_string(fam.k);
  doc["certificate"] = cert;
  return finish(std::move(doc), checks);
}

int cmd_verify(const std::string& path) {
  using namespace ramcover;
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const Cover cov = cover_from_json_text(text);
  Checks checks;
  Json cert = certify_cover(cov, checks);
  Json doc = envelope("verify", Json{{"file", path}});
  doc["cover"] = cover_to_json(cov);
  doc["certificate"] = cert;
  return finish(std::move(doc), checks);
}

int cmd_origami(int genus, int max_genus) {
  using namespace ramcover;
  check_genus(genus, 1, max_genus);
  const OrigamiDiagram d = staircase(genus);
  const auto n = static_cast<std::size_t>(2 * genus - 1);
  Checks checks;
  const bool connected = is_connected(d);
  checks.add("connected", connected, d.to_string());
  const std::vector<std::size_t> type = monodromy_cycle_type(d);
  checks.add("totally_ramified", type == std::vector<std::size_t>{n} && vertex_count(d) == 1,
             commutator(d).to_string());
  const int computed = connected ? ramcover::genus(d) : -1;
  checks.add("genus", computed == genus, "Euler genus " + std::to_string(computed));
  const FamilyInstance fam = build_family(genus);
  checks.add("matches_family", genus_arithmetic(fam.cover.source) == computed && fam.cover.degree == static_cast<int>(n),
             "family genus " + std::to_string(genus_arithmetic(fam.cover.source)) + ", degree " +
                 std::to_string(fam.cover.degree));

  Json doc = envelope("origami", Json{{"genus", genus}});
  doc["diagram"] = d.to_string();
  doc["monodromy"] = commutator(d).to_string();
  doc["cycle_type"] = type;
  doc["vertex_count"] = vertex_count(d);
  doc["genus"] = computed;
  return finish(std::move(doc), checks);
}

// "x^5+(1+a*t)*x^4+b*t*x^3+..." with the ansatz unknowns written in.
std::string describe_perturbed(const ramcover::QPoly& base, const std::vector<std::size_t>& slots,
                               const std::vector<std::string>& names, std::size_t offset) {
  using ramcover::to_string;
  std::string out;
  for (int k = std::max(base.degree(), slots.empty() ? 0 : static_cast<int>(slots.front())); k >= 0; --k) {
    const auto e = static_cast<std::size_t>(k);
    std::string unknown;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (slots[i] == e) unknown = names[offset + i];
    const ramcover::Rational c = base.coeff(e);
    if (c.is_zero() && unknown.empty()) continue;
    std::string coef;
    if (unknown.empty()) coef = c.to_string();
    else if (c.is_zero()) coef = unknown + "*t";
    else coef = "(" + c.to_string() + "+" + unknown + "*t)";
    std::string xk = e == 0 ? "" : (e == 1 ? "x" : "x^" + std::to_string(e));
    if (!out.empty()) out += "+";
    if (xk.empty()) out += coef;
    else if (coef == "1") out += xk;
    else out += coef + "*" + xk;
  }
  return out;
}

int cmd_degenerate(int genus, int max_genus) {
  using namespace ramcover;
  check_genus(genus, 2, max_genus);
  const DeformationAnsatz ansatz = make_deformation_ansatz(genus);
  Json doc = envelope("degenerate", Json{{"genus", genus}});
  const Cover degenerate = degenerate_cover(genus);
  doc["degenerate_cover"] = cover_to_json(degenerate);

  const std::string den = describe_perturbed(ansatz.shared_den, ansatz.den_slots, ansatz.names, ansatz.curve_slots.size());
  Json a;
  a["unknowns"] = ansatz.names;
  a["source"] = "y^2=" + describe_perturbed(ansatz.base_source, ansatz.curve_slots, ansatz.names, 0);
  a["target"] = "y^2=" + to_string(ansatz.target);
  a["f1"] = "(" + to_string(ansatz.numerator_f1) + ")/(" + den + ")^2";
  a["f2"] = "(" + describe_perturbed(ansatz.numerator_f2, ansatz.num_slots, ansatz.names,
                                     ansatz.curve_slots.size() + ansatz.den_slots.size()) +
            ")/(" + den + ")^3";
  doc["ansatz"] = a;

  Checks checks;
  const LinearSystem sys = assemble_deformation_system(ansatz);
  const SolveResult sol = solve_exact(sys);
  doc["matrix"] = Json{{"rows", sys.rows()}, {"cols", sys.cols}};
  doc["rank"] = sol.rank;
  doc["nullity"] = sol.nullity;
  checks.add("order_t_system_consistent", sol.solved(), "rank " + std::to_string(sol.rank));
  if (sol.solved()) {
    Json coeffs;
    for (std::size_t i = 0; i < ansatz.names.size(); ++i) coeffs[ansatz.names[i]] = sol.solution[i].to_string();
    doc["coefficients"] = coeffs;
    checks.add("resubstitution", sys.satisfied_by(sol.solution), "matrix * solution = rhs");
  }

  try {
    const DeformationReport rep = deform_with_report(ansatz);
    doc["deformed_cover"] = cover_to_json(rep.instance.cover);
    doc["exact"] = rep.exactness.holds;
    checks.add("exact_in_t", rep.exactness.holds, rep.exactness.difference);
    const bool agrees = rep.instance == build_family(genus);
    checks.add("agrees_with_family", agrees, to_string(build_family(genus).cover.source.rhs()));
  } catch (const DeformationFailed& e) {
    doc["exact"] = false;
    checks.add("deformation", false, e.what());
  } catch (const FirstOrderOnly& e) {
    doc["exact"] = false;
    checks.add("deformation", false, e.what());
  }
  return finish(std::move(doc), checks);
}

int cmd_selftest(int max_genus) {
  if (max_genus < 1) throw UsageError("--max-genus must be at least 1");
  ramcover::selftest::AcceptanceConfig cfg;
  cfg.family_max_genus = max_genus;
  const auto results = ramcover::selftest::run_acceptance(cfg, std::cout);
  return ramcover::selftest::all_passed(results) ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Totally ramified covers of Legendre elliptic curves"};
  app.set_version_flag("--version", std::string(ramcover::kVersion));
  app.require_subcommand(1);

  int genus = 0;
  int max_genus = 64;
  int selftest_max = 12;
  std::string format = "json";
  std::string file;

  auto* generate = app.add_subcommand("generate", "Build the genus-g cover and certify it");
  generate->add_option("--genus", genus, "Genus g >= 1")->required();
  generate->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  generate->add_option("--max-genus", max_genus, "Refuse genera above this");

  auto* verify = app.add_subcommand("verify", "Verify a cover JSON document ('-' reads stdin)");
  verify->add_option("file", file, "Cover document")->required();

  auto* origami = app.add_subcommand("origami", "Staircase origami of genus g");
  origami->add_option("--genus", genus, "Genus g >= 1")->required();
  origami->add_option("--max-genus", max_genus, "Refuse genera above this");

  auto* degenerate = app.add_subcommand("degenerate", "Rederive the genus-g cover from its t=0 degeneration");
  degenerate->add_option("--genus", genus, "Genus g >= 2")->required();
  degenerate->add_option("--max-genus", max_genus, "Refuse genera above this");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--max-genus", selftest_max, "Largest genus for the family-wide criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*generate) return cmd_generate(genus, format, max_genus);
    if (*verify) return cmd_verify(file);
    if (*origami) return cmd_origami(genus, max_genus);
    if (*degenerate) return cmd_degenerate(genus, max_genus);
    if (*selftest) return cmd_selftest(selftest_max);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ramcover::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ramcover::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
