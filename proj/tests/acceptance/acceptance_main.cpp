// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are exact and the
// per-criterion wall-clock limits live in gso::cli::time_limit.
//
// Usage: gso_acceptance [--families DIR] [--seed N]

#include <cstdlib>
#include <iostream>
#include <string>

#include "gso_cli/acceptance.hpp"

int main(int argc, char** argv) {
  gso::cli::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--families" && i + 1 < argc) {
      opts.families_dir = argv[++i];
    } else if (arg == "--seed" && i + 1 < argc) {
      opts.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: gso_acceptance [--families DIR] [--seed N]\n";
      return 2;
    }
  }

  int unexpected = 0;
  int documented = 0;
  opts.on_result = [&](const gso::cli::CheckResult& r) {
    std::cout << gso::cli::format_line(r) << std::endl;
    if (r.pass) return;
    if (r.known_divergence)
      ++documented;
    else
      ++unexpected;
  };
  gso::cli::run_acceptance(opts);

  if (documented > 0)
    std::cout << documented
              << " failing criterion(s) fail only through the documented pendant-slide divergence\n";
  return unexpected == 0 ? 0 : 1;
}
