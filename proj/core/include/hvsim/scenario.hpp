#pragma once

// Canned verification scenarios.  Each scenario runs a deterministic
// battery of checks (seeded sampling plus closed-form anchors) and
// returns a report with one record per check; the front end only
// parses configuration and serializes the result.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hvsim/quantum.hpp"

namespace hvsim {

enum class ReportFormat { Json, Csv };

struct ScenarioConfig {
  std::string scenario;
  std::uint64_t seed = 1;
  int sample_count = 0;  // 0: use the scenario's default
  std::map<std::string, double> tolerance_overrides;
  ReportFormat format = ReportFormat::Json;
  std::string out_path;  // empty: stdout
  int threads = 1;
  // Optional explicit mixture for the mixed-state scenario; when empty
  // the atoms are drawn from the seed.
  std::vector<SeparableAtom> atoms;
};

// One check: pass is decided by the comparison kind baked into the
// scenario (two-sided tolerance for equality checks, one-sided for
// bound checks), with expected/observed/tolerance echoed verbatim.
struct CheckRecord {
  std::string name;
  double expected{};
  double observed{};
  double tolerance{};
  bool pass{};
};

struct ScenarioReport {
  std::string scenario;
  std::uint64_t seed{};
  int sample_count{};
  int threads{};
  std::map<std::string, double> tolerance_overrides;
  std::vector<CheckRecord> checks;
  bool overall_pass{};
  // Wall-clock time; console diagnostics only, never serialized (the
  // serialized report must be byte-identical across re-runs).
  double duration_seconds{};
};

// Names of all registered scenarios, in registry order.
std::vector<std::string> scenario_names();

// Default sample_count for a scenario; throws std::invalid_argument
// for an unknown name.
int default_sample_count(const std::string& scenario);

// Runs one scenario.  Throws std::invalid_argument for an unknown
// scenario name or invalid config (those are usage errors, exit 2);
// failing checks are reported in-band via pass flags (exit 1).
ScenarioReport run_scenario(const ScenarioConfig& config);

}  // namespace hvsim
