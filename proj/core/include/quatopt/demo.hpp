#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "quatopt/qmatrix.hpp"

namespace quatopt {

enum class Scenario { Filter, Projection, Beamform };

Scenario scenario_from_string(const std::string& name);  // BadScenario on unknown names
const char* to_string(Scenario s);

struct DemoConfig {
  Scenario scenario = Scenario::Filter;
  std::size_t n = 4;          // problem dimension
  std::size_t snapshots = 400;
  double snr_db = 20.0;       // +infinity means noiseless
  std::uint64_t seed = 0;
};

// Synthetic second-order-statistics dataset: snapshot columns with i.i.d.
// standard-normal quaternion components, desired outputs d(t) = w^H x(t)
// plus white quaternion noise at the requested SNR. Regenerable bit-exactly
// from the seed. For the beamform scenario w_true holds the unit-modulus
// steering vector and d the source samples.
struct DemoDataset {
  QMatrix X;
  QVector d;
  QVector w_true;
  double noise_power = 0.0;
  std::uint64_t seed = 0;
};

DemoDataset make_demo_dataset(const DemoConfig& cfg);

// csv carries the scenario trace (documented in the CLI help); summary is the
// machine-readable recap. Both are deterministic for a fixed config.
struct DemoResult {
  std::string csv;
  nlohmann::json summary;
};

DemoResult run_demo(const DemoConfig& cfg);

}  // namespace quatopt
