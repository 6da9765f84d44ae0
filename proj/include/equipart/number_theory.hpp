#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "equipart/errors.hpp"

namespace equipart {

__extension__ typedef __int128 wide_int;

[[nodiscard]] inline std::vector<std::int64_t> divisors(std::int64_t n) {
  detail::require(n >= 1, "divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

[[nodiscard]] inline int mobius(std::int64_t n) {
  detail::require(n >= 1, "mobius: n must be positive");
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

[[nodiscard]] inline std::int64_t totient(std::int64_t n) {
  detail::require(n >= 1, "totient: n must be positive");
  std::int64_t out = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    out -= out / p;
  }
  if (n > 1) out -= out / n;
  return out;
}

/// Exact binomial coefficient; throws when the value leaves int64.
[[nodiscard]] inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  detail::require(n >= 0, "binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  wide_int acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::int64_t>::max())
      throw resource_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows int64");
  }
  return static_cast<std::int64_t>(acc);
}

[[nodiscard]] inline bool is_square_free(std::int64_t n) { return mobius(n) != 0; }

[[nodiscard]] inline bool is_power_of_two(std::int64_t n) { return n >= 1 && (n & (n - 1)) == 0; }

[[nodiscard]] inline std::int64_t narrow_checked(wide_int v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw resource_error(std::string(what) + " overflows int64");
  return static_cast<std::int64_t>(v);
}

}  // namespace equipart
