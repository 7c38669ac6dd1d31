#pragma once

// Report serialization with byte-stable output: fixed key order,
// shortest round-trip number formatting capped at 15 significant
// digits, no locale dependence.

#include <string>

#include "hvsim/scenario.hpp"

namespace hvsim {

// Shortest decimal string that round-trips the double, reformatted to
// 15 significant digits when the shortest form needs more.  Plain "0",
// "1.5", "2.82842712474619" style; never locale-dependent.
std::string format_double(double value);

// One JSON object: scenario, seed, samples, threads,
// tolerance_overrides, checks (array of objects), overall_pass.
// Trailing newline included.  Duration is deliberately absent.
std::string to_json(const ScenarioReport& report);

// Header "scenario,check,expected,observed,tolerance,pass" plus one
// row per check.  Trailing newline included.
std::string to_csv(const ScenarioReport& report);

// Serializes in the requested format and writes to path, or to stdout
// when path is empty.  Throws std::runtime_error on I/O failure.
void emit_report(const ScenarioReport& report, ReportFormat format,
                 const std::string& path);

}  // namespace hvsim
