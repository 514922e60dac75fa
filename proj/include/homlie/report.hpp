#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace homlie {

enum class Status { Pass, Fail, Info, Discrepant };

std::string to_string(Status s);

struct Counterexample {
  std::string kind;  // "triple", "pair", "row", "map", ...
  std::vector<std::string> args;
  std::string residual;
};

/// Outcome of one verification or computation.
struct Report {
  static constexpr std::size_t kMaxStoredCounterexamples = 16;

  std::string claim_id;
  Status status = Status::Info;
  std::map<std::string, std::string> parameters;
  std::map<std::string, std::int64_t> dims;
  std::vector<Counterexample> counterexamples;
  std::size_t violations = 0;
  std::vector<std::string> notes;
  /// Computed objects (basis vectors, representatives) rendered as text.
  std::map<std::string, std::vector<std::string>> values;
  double time_ms = 0.0;

  /// Counts every violation, keeps the first few.
  void add_violation(Counterexample c);
  bool passed() const noexcept { return status == Status::Pass; }
};

}  // namespace homlie
