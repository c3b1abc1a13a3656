#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace stlie {

// Outcome of an exhaustive verification sweep.  Violations are data, not
// exceptions; only a bounded sample of messages is kept.
struct CheckReport {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> sample;          // first few failure descriptions
  std::map<std::string, bool> info;         // named informational flags

  static constexpr std::size_t kMaxSample = 8;

  bool passed() const { return failures == 0; }
  void pass() { ++checks; }
  void fail(std::string msg);
  void merge(const CheckReport& other);
  std::string summary() const;
};

}  // namespace stlie
