#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mfn {

/// Outcome of one exhaustive or sampled verification.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::vector<std::string> counterexamples;
  std::string detail;

  static constexpr std::size_t kMaxCounterexamples = 16;

  void fail(const std::string& witness) {
    passed = false;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(witness);
  }
  void require(bool ok, const std::string& witness) {
    ++checked;
    if (!ok) fail(witness);
  }
  void absorb(const CheckResult& other) {
    checked += other.checked;
    if (!other.passed) {
      passed = false;
      for (const auto& c : other.counterexamples) {
        if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(other.name + ": " + c);
      }
    }
  }
};

}  // namespace mfn
