#include "homlie/report.hpp"

namespace homlie {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Info:
      return "INFO";
    case Status::Discrepant:
      return "DISCREPANT";
  }
  return "?";
}

void Report::add_violation(Counterexample c) {
  ++violations;
  if (counterexamples.size() < kMaxStoredCounterexamples) counterexamples.push_back(std::move(c));
}

}  // namespace homlie
