#pragma once

#include <cstdint>
#include <vector>

namespace jinsig {

/// Indices visited by stepping m at a time around an n-cycle, starting and
/// ending at index 0.
struct Traversal {
  std::int64_t n;
  std::int64_t m;
  std::vector<std::int64_t> order;
  bool complete;

  /// Number of steps taken before returning to index 0.
  std::int64_t steps() const { return static_cast<std::int64_t>(order.size()) - 1; }
};

Traversal traverse(std::int64_t n, std::int64_t m);

/// All m in [1, n) with gcd(m, n) = 1.
std::vector<std::int64_t> valid_steps(std::int64_t n);

/// Euler's totient by trial-division factorization.
std::int64_t euler_phi(std::int64_t n);

/// Candidates c for which stepping by c around n points reaches every point.
std::vector<std::int64_t> host_candidates(std::int64_t n, const std::vector<std::int64_t>& candidates);

}  // namespace jinsig
