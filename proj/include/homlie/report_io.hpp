#pragma once

#include <map>
#include <string>
#include <vector>

#include "homlie/report.hpp"

namespace homlie {

inline constexpr const char* kToolVersion = "0.1.0";

struct Invocation {
  std::string command;
  std::map<std::string, std::string> parameters;
  bool timings = false;
};

/// Sorted keys, two-space indentation, trailing newline. time_ms only with timings.
std::string render_json(const Invocation& inv, const std::vector<Report>& reports);
std::string render_text(const Invocation& inv, const std::vector<Report>& reports);

/// 0 if every report is PASS or INFO, else 1.
int exit_status(const std::vector<Report>& reports);

}  // namespace homlie
