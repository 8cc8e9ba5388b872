// Acceptance suite: one [PASS]/[FAIL] line per criterion.
// Usage: acceptance [max-genus]

#include <cstdlib>
#include <iostream>
#include <string>

#include "ramcover/selftest/acceptance.hpp"

int main(int argc, char** argv) {
  ramcover::selftest::AcceptanceConfig cfg;
  if (argc > 1) cfg.family_max_genus = std::atoi(argv[1]);
  if (cfg.family_max_genus < 1) {
    std::cerr << "usage: acceptance [max-genus >= 1]\n";
    return 2;
  }
  const auto results = ramcover::selftest::run_acceptance(cfg, std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
