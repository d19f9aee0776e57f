#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gso::cli {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped_part = false;  // some part needs external data and was not run
  // Failed, but every discrepancy is of the documented slide-off-a-pendant-vertex kind.
  bool known_divergence = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  std::optional<std::string> families_dir;
  int equivalence_max_n = 6;
  int roots_per_size = 100;
  int class_equality_max_n = 7;
  int recognizer_max_n = 8;
  int property_cases = 500;
  int fan_base_max_n = 7;
  // Restrict to these criterion ids (empty: all).
  std::vector<int> only;
  // Called after each check completes.
  std::function<void(const CheckResult&)> on_result;
};

// Wall-clock limits per criterion, in seconds.
double time_limit(int id);

// Runs criteria 1..11 in order. A check fails when its result is wrong or it exceeds
// its time limit.
std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opts);

// "PASS 3 engine equivalence: ..." style line.
std::string format_line(const CheckResult& r);

}  // namespace gso::cli
