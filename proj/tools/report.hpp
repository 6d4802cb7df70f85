#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace endstool {

using json = nlohmann::ordered_json;

/// Status strings: verified_exact and verified_to_radius come from
/// commensuration verdicts, verified marks a complete sweep of the stated
/// domain, estimate marks heuristic output, refuted carries a witness.
struct Check {
  std::string name;
  std::string status;
  json detail = json::object();
  json witness = nullptr;
};

struct Report {
  static constexpr int kSchemaVersion = 1;

  std::string command;
  std::vector<std::string> args;
  std::string group;
  json parameters = json::object();
  std::vector<Check> checks;
  /// Per-row output; the CSV format prints this when present.
  json table = json::array();
  /// Wall time, shown on standard error only so that JSON stays stable.
  double elapsed_ms = 0;

  bool refuted() const;
  int exit_code() const { return refuted() ? 1 : 0; }
  const Check* find(const std::string& name) const;

  json to_json() const;
  static Report from_json(const json& j);
  std::string to_csv() const;
  std::string human() const;
};

}  // namespace endstool
