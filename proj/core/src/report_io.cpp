#include "hvsim/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <system_error>

namespace hvsim {
namespace {

std::string double_to_chars(double value, int precision) {
  char buf[64];
  const std::to_chars_result r =
      precision < 0
          ? std::to_chars(buf, buf + sizeof(buf), value)
          : std::to_chars(buf, buf + sizeof(buf), value,
                          std::chars_format::general, precision);
  if (r.ec != std::errc{}) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, r.ptr);
}

int significant_digits(const std::string& s) {
  int count = 0;
  bool seen_nonzero = false;
  for (const char c : s) {
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (c == '0' && !seen_nonzero) continue;
    seen_nonzero = true;
    ++count;
  }
  return count;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double value) {
  if (value == 0.0) return "0";
  const std::string shortest = double_to_chars(value, -1);
  if (significant_digits(shortest) <= 15) return shortest;
  return double_to_chars(value, 15);
}

std::string to_json(const ScenarioReport& report) {
  std::string out;
  out += "{\n";
  out += "  \"scenario\": \"" + json_escape(report.scenario) + "\",\n";
  out += "  \"seed\": " + std::to_string(report.seed) + ",\n";
  out += "  \"samples\": " + std::to_string(report.sample_count) + ",\n";
  out += "  \"threads\": " + std::to_string(report.threads) + ",\n";
  out += "  \"tolerance_overrides\": {";
  bool first = true;
  for (const auto& [name, value] : report.tolerance_overrides) {
    out += first ? "\n" : ",\n";
    out += "    \"" + json_escape(name) + "\": " + format_double(value);
    first = false;
  }
  out += first ? "},\n" : "\n  },\n";
  out += "  \"checks\": [";
  first = true;
  for (const auto& check : report.checks) {
    out += first ? "\n" : ",\n";
    out += "    {\n";
    out += "      \"name\": \"" + json_escape(check.name) + "\",\n";
    out += "      \"expected\": " + format_double(check.expected) + ",\n";
    out += "      \"observed\": " + format_double(check.observed) + ",\n";
    out += "      \"tolerance\": " + format_double(check.tolerance) + ",\n";
    out += std::string("      \"pass\": ") + bool_name(check.pass) + "\n";
    out += "    }";
    first = false;
  }
  out += first ? "],\n" : "\n  ],\n";
  out += std::string("  \"overall_pass\": ") + bool_name(report.overall_pass) +
         "\n";
  out += "}\n";
  return out;
}

std::string to_csv(const ScenarioReport& report) {
  std::string out = "scenario,check,expected,observed,tolerance,pass\n";
  for (const auto& check : report.checks) {
    out += report.scenario + "," + check.name + "," +
           format_double(check.expected) + "," +
           format_double(check.observed) + "," +
           format_double(check.tolerance) + "," + bool_name(check.pass) +
           "\n";
  }
  return out;
}

void emit_report(const ScenarioReport& report, ReportFormat format,
                 const std::string& path) {
  const std::string payload =
      format == ReportFormat::Json ? to_json(report) : to_csv(report);
  if (path.empty()) {
    std::cout << payload;
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("emit_report: stdout write failed");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("emit_report: cannot open " + path);
  }
  file << payload;
  file.flush();
  if (!file) {
    throw std::runtime_error("emit_report: write failed for " + path);
  }
}

}  // namespace hvsim
