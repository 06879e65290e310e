#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lebesgue {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Randomized property checks over the sampling, reconstruction and geometry
/// routines, each against a brute-force reference. Backs `lebesgue verify`.
std::vector<CheckResult> run_property_suite(std::uint64_t seed);

}  // namespace lebesgue
