#include "stlie/check_report.hpp"

namespace stlie {

void CheckReport::fail(std::string msg) {
  ++checks;
  ++failures;
  if (sample.size() < kMaxSample) sample.push_back(std::move(msg));
}

void CheckReport::merge(const CheckReport& other) {
  checks += other.checks;
  failures += other.failures;
  for (const std::string& s : other.sample) {
    if (sample.size() >= kMaxSample) break;
    sample.push_back(s);
  }
  for (const auto& [k, v] : other.info) info[k] = v;
}

std::string CheckReport::summary() const {
  std::string s = std::to_string(checks - failures) + "/" + std::to_string(checks) + " checks";
  if (failures > 0) {
    s += ", " + std::to_string(failures) + " violations";
    if (!sample.empty()) s += " (first: " + sample.front() + ")";
  }
  return s;
}

}  // namespace stlie
