// hvsim: runs one verification scenario and emits its report.
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 usage/configuration/IO error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hvsim/report_io.hpp"
#include "hvsim/scenario.hpp"

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

hvsim::ReportFormat parse_format(const std::string& name) {
  if (name == "json") return hvsim::ReportFormat::Json;
  if (name == "csv") return hvsim::ReportFormat::Csv;
  throw std::invalid_argument("unknown format: " + name);
}

// "name=value" pairs from --tol.
void apply_tolerance_spec(const std::string& spec,
                          std::map<std::string, double>& overrides) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("bad tolerance override (want name=value): " +
                                spec);
  }
  const std::string name = spec.substr(0, eq);
  const std::string value = spec.substr(eq + 1);
  std::size_t consumed = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(value, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad tolerance value in: " + spec);
  }
  if (consumed != value.size()) {
    throw std::invalid_argument("bad tolerance value in: " + spec);
  }
  overrides[name] = parsed;
}

hvsim::UnitVector3 vector_from_json(const nlohmann::json& j,
                                    const char* what) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument(std::string("config: ") + what +
                                " must be a 3-element array");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

// Fills cfg from the JSON config file; command-line flags override
// these values afterwards.
void load_config_file(const std::string& path, hvsim::ScenarioConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config parse error: " + std::string(e.what()));
  }
  if (!j.is_object()) throw std::invalid_argument("config: not a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "scenario") {
      cfg.scenario = value.get<std::string>();
    } else if (key == "seed") {
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "samples") {
      cfg.sample_count = value.get<int>();
    } else if (key == "threads") {
      cfg.threads = value.get<int>();
    } else if (key == "format") {
      cfg.format = parse_format(value.get<std::string>());
    } else if (key == "out") {
      cfg.out_path = value.get<std::string>();
    } else if (key == "tol") {
      if (!value.is_object()) {
        throw std::invalid_argument("config: tol must be an object");
      }
      for (const auto& [name, tol] : value.items()) {
        cfg.tolerance_overrides[name] = tol.get<double>();
      }
    } else if (key == "atoms") {
      if (!value.is_array()) {
        throw std::invalid_argument("config: atoms must be an array");
      }
      for (const auto& atom : value) {
        hvsim::SeparableAtom a;
        a.weight = atom.at("weight").get<double>();
        a.n_a = vector_from_json(atom.at("n_a"), "atom n_a");
        a.n_b = vector_from_json(atom.at("n_b"), "atom n_b");
        cfg.atoms.push_back(a);
      }
    } else {
      throw std::invalid_argument("config: unknown key: " + key);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hvsim: CHSH bound checks for hidden-variable models "
               "against exact quantum mechanics.\nScenarios: " +
               join(hvsim::scenario_names())};

  std::string scenario;
  std::string config_path;
  std::string format_name = "json";
  std::string out_path;
  std::uint64_t seed = 1;
  int samples = 0;
  int threads = 1;
  std::vector<std::string> tolerance_specs;

  app.add_option("scenario", scenario, "Scenario name to run");
  app.add_option("--config", config_path,
                 "JSON config file; command-line flags override it");
  app.add_option("--seed", seed, "Random seed (default 1)");
  app.add_option("--samples", samples,
                 "Sample count (default: per-scenario)");
  app.add_option("--tol", tolerance_specs,
                 "Tolerance override, name=value; repeatable");
  app.add_option("--format", format_name, "Report format: json or csv");
  app.add_option("--out", out_path, "Report file (default: stdout)");
  app.add_option("--threads", threads, "Worker threads (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  hvsim::ScenarioConfig cfg;
  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    // Command line wins over the config file wherever a flag was given.
    if (!scenario.empty()) cfg.scenario = scenario;
    if (app.count("--seed") > 0) cfg.seed = seed;
    if (app.count("--samples") > 0) cfg.sample_count = samples;
    if (app.count("--threads") > 0) cfg.threads = threads;
    if (app.count("--format") > 0) cfg.format = parse_format(format_name);
    if (app.count("--out") > 0) cfg.out_path = out_path;
    for (const auto& spec : tolerance_specs) {
      apply_tolerance_spec(spec, cfg.tolerance_overrides);
    }
    if (cfg.scenario.empty()) {
      throw std::invalid_argument(
          "no scenario given (positional argument or config file)");
    }

    const hvsim::ScenarioReport report = hvsim::run_scenario(cfg);
    hvsim::emit_report(report, cfg.format, cfg.out_path);

    int passed = 0;
    for (const auto& check : report.checks) passed += check.pass ? 1 : 0;
    std::cerr << report.scenario << ": " << passed << "/"
              << report.checks.size() << " checks passed in "
              << report.duration_seconds << " s\n";
    return report.overall_pass ? 0 : kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "hvsim: " << e.what() << "\n";
    return kExitUsage;
  }
}
