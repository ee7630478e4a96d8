#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace quatopt {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_violation = 0.0;
  double tolerance = 0.0;
  double elapsed_ms = 0.0;
};

struct RunReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

// Runs the full identity battery (rotation identities, bridge identities,
// inner-product and norm identities, gradient and Hessian transport,
// derivative oracles, and the three-way formulation equivalence), each over
// `samples` random instances drawn from `seed`.
RunReport run_verification(std::uint64_t seed, std::size_t samples);

// Deterministic renderings: timings are opt-in because they would break
// byte-for-byte reproducibility of the default output.
std::string format_report(const RunReport& report, bool with_timings = false);
nlohmann::json report_to_json(const RunReport& report, bool with_timings = false);

}  // namespace quatopt
