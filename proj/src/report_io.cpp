#include "homlie/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>

namespace homlie {

namespace {

nlohmann::json to_json(const Report& r, bool timings) {
  nlohmann::json j;
  j["claim_id"] = r.claim_id;
  j["status"] = to_string(r.status);
  j["parameters"] = r.parameters;
  j["violations"] = r.violations;
  if (!r.dims.empty()) j["dims"] = r.dims;
  if (!r.counterexamples.empty()) {
    auto& arr = j["counterexamples"] = nlohmann::json::array();
    for (const auto& c : r.counterexamples) arr.push_back({{c.kind, c.args}, {"residual", c.residual}});
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.values.empty()) j["values"] = r.values;
  if (timings) j["time_ms"] = r.time_ms;
  return j;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string join_map(const std::map<std::string, std::string>& m) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : m) parts.push_back(k + "=" + v);
  return join(parts, " ");
}

}  // namespace

std::string render_json(const Invocation& inv, const std::vector<Report>& reports) {
  nlohmann::json j;
  j["tool_version"] = kToolVersion;
  j["command"] = inv.command;
  j["parameters"] = inv.parameters;
  j["reports"] = nlohmann::json::array();
  for (const auto& r : reports) j["reports"].push_back(to_json(r, inv.timings));
  return j.dump(2) + "\n";
}

std::string render_text(const Invocation& inv, const std::vector<Report>& reports) {
  std::string out = "homlie " + std::string(kToolVersion) + ": " + inv.command;
  if (!inv.parameters.empty()) out += " (" + join_map(inv.parameters) + ")";
  out += "\n\n";
  std::map<Status, int> counts;
  for (const auto& r : reports) {
    ++counts[r.status];
    std::string status = to_string(r.status);
    status.resize(std::max<std::size_t>(status.size(), 10), ' ');
    out += status + " " + r.claim_id;
    if (!r.parameters.empty()) out += "  [" + join_map(r.parameters) + "]";
    out += "\n";
    if (!r.dims.empty()) {
      std::vector<std::string> parts;
      for (const auto& [k, v] : r.dims) parts.push_back(k + "=" + std::to_string(v));
      out += "    dims: " + join(parts, ", ") + "\n";
    }
    if (r.violations > 0) out += "    violations: " + std::to_string(r.violations) + "\n";
    for (const auto& c : r.counterexamples) out += "    " + c.kind + " " + join(c.args, ", ") + ": " + c.residual + "\n";
    for (const auto& [k, vs] : r.values) {
      out += "    " + k + ":\n";
      for (const auto& v : vs) out += "      " + v + "\n";
    }
    for (const auto& n : r.notes) out += "    note: " + n + "\n";
    if (inv.timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", r.time_ms);
      out += "    time: " + std::string(buf) + " ms\n";
    }
  }
  out += "\n";
  std::vector<std::string> parts;
  for (Status s : {Status::Pass, Status::Fail, Status::Discrepant, Status::Info})
    if (counts[s] > 0) parts.push_back(std::to_string(counts[s]) + " " + to_string(s));
  out += "summary: " + (parts.empty() ? std::string("no reports") : join(parts, ", ")) + "\n";
  return out;
}

int exit_status(const std::vector<Report>& reports) {
  const bool bad = std::any_of(reports.begin(), reports.end(), [](const Report& r) {
    return r.status == Status::Fail || r.status == Status::Discrepant;
  });
  return bad ? 1 : 0;
}

}  // namespace homlie
