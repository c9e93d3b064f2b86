#include "jinsig/host.hpp"

#include <numeric>
#include <string>

#include "jinsig/error.hpp"

namespace jinsig {

Traversal traverse(std::int64_t n, std::int64_t m) {
  if (n < 3 || m < 1 || m >= n) {
    throw Error(ErrorCode::InvalidStep,
                "need n >= 3 and 1 <= m < n, got n = " + std::to_string(n) + ", m = " + std::to_string(m));
  }
  Traversal t{n, m, {0}, false};
  std::int64_t at = m % n;
  while (at != 0) {
    t.order.push_back(at);
    at = (at + m) % n;
  }
  t.order.push_back(0);
  t.complete = t.steps() == n;
  return t;
}

std::vector<std::int64_t> valid_steps(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidStep, "n must be at least 2, got " + std::to_string(n));
  std::vector<std::int64_t> out;
  for (std::int64_t m = 1; m < n; ++m) {
    if (std::gcd(m, n) == 1) out.push_back(m);
  }
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidStep, "totient needs n >= 1, got " + std::to_string(n));
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> host_candidates(std::int64_t n, const std::vector<std::int64_t>& candidates) {
  std::vector<std::int64_t> out;
  for (auto c : candidates) {
    if (c >= 1 && c < n && traverse(n, c).complete) out.push_back(c);
  }
  return out;
}

}  // namespace jinsig
