#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qbounds/error.hpp"

namespace qbounds {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::budget_exceeded, "integer overflow");
  return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::budget_exceeded, "integer overflow");
  return out;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // out * (n - k + i) is divisible by i at every step.
    out = checked_mul(out, n - k + i) / i;
  }
  return out;
}

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out = checked_mul(out, i);
  return out;
}

/// floor(log2(n)) for n >= 1, and 0 for n = 0.
inline std::uint64_t floor_log2(std::uint64_t n) {
  std::uint64_t out = 0;
  while (n > 1) {
    n >>= 1;
    ++out;
  }
  return out;
}

/// Uniform index in [0, bound) from a 64-bit engine; implementation-independent.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

template <class T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_index(rng, i)]);
  }
}

}  // namespace qbounds
