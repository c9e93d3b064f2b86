#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jinsig {

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;
};

/// Randomized invariance audit: signatures under group motions, signature
/// signs under rotations and reflections, oracle recovery of known motions.
/// Deterministic for a given seed.
std::vector<SuiteResult> run_selfcheck(std::uint64_t seed, int trials);

}  // namespace jinsig
