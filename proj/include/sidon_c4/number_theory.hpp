#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sidon_c4 {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Largest r with r*r <= n.
constexpr std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  std::uint64_t lo = 1;
  std::uint64_t hi = std::uint64_t{1} << 32;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid <= n / mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Trial-division factorization, primes ascending. factorize(1) is empty.
inline std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    PrimePower f{d, 0};
    while (n % d == 0) {
      n /= d;
      ++f.exponent;
    }
    out.push_back(f);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& f : factorize(n)) out.push_back(f.prime);
  return out;
}

/// Decomposes q = p^e with p prime; nullopt if q is not a prime power.
inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto fs = factorize(q);
  if (fs.size() != 1) return std::nullopt;
  return fs.front();
}

inline bool is_odd_prime_power(std::uint64_t q) {
  const auto pp = as_prime_power(q);
  return pp && pp->prime != 2;
}

/// Odd prime powers in [lo, hi], ascending.
inline std::vector<std::uint64_t> odd_prime_powers(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = lo; q <= hi; ++q) {
    if (is_odd_prime_power(q)) out.push_back(q);
  }
  return out;
}

}  // namespace sidon_c4
