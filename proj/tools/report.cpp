#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace endstool {

bool Report::refuted() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == "refuted"; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

json Report::to_json() const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["args"] = args;
  j["group"] = group;
  j["parameters"] = parameters;
  json cs = json::array();
  std::size_t refutations = 0;
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}, {"witness", c.witness}});
    if (c.status == "refuted") ++refutations;
  }
  j["checks"] = std::move(cs);
  j["table"] = table;
  j["summary"] = {{"checks", checks.size()}, {"refuted", refutations}, {"exit_code", exit_code()}};
  return j;
}

Report Report::from_json(const json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) throw std::runtime_error("unsupported report schema");
  Report r;
  r.command = j.at("command").get<std::string>();
  r.args = j.at("args").get<std::vector<std::string>>();
  r.group = j.at("group").get<std::string>();
  r.parameters = j.at("parameters");
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("status").get<std::string>(), c.at("detail"),
                        c.at("witness")});
  }
  r.table = j.at("table");
  return r;
}

namespace {

std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return cell(json(v.dump()));
}

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream out;
  if (!table.empty() && table.front().is_object()) {
    bool first = true;
    for (const auto& [key, _] : table.front().items()) {
      out << (first ? "" : ",") << cell(json(key));
      first = false;
    }
    out << '\n';
    for (const auto& row : table) {
      first = true;
      for (const auto& [key, _] : table.front().items()) {
        out << (first ? "" : ",") << cell(row.contains(key) ? row.at(key) : json(nullptr));
        first = false;
      }
      out << '\n';
    }
    return out.str();
  }
  out << "check,status,witness\n";
  for (const auto& c : checks) out << cell(json(c.name)) << ',' << cell(json(c.status)) << ',' << cell(c.witness) << '\n';
  return out.str();
}

std::string Report::human() const {
  std::ostringstream out;
  out << command << "  [" << group << "]\n";
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    out << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << c.status;
    if (!c.witness.is_null()) out << "  witness " << c.witness.dump();
    out << '\n';
  }
  if (!table.empty()) out << "  " << table.size() << " table rows (see --format csv)\n";
  out << "  elapsed " << static_cast<long long>(elapsed_ms) << " ms\n";
  return out.str();
}

}  // namespace endstool
