#pragma once

// Overflow-checked 64-bit arithmetic. Every size or weight that can grow
// exponentially in k goes through these helpers; overflow is an error.

#include <cstdint>
#include <optional>
#include <string_view>

#include "wspec/error.hpp"

namespace wspec::checked {

[[noreturn]] void overflow(std::string_view what);

inline std::int64_t add(std::int64_t a, std::int64_t b, std::string_view what = "addition") {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow(what);
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b, std::string_view what = "multiplication") {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow(what);
  return r;
}

inline std::int64_t pow(std::int64_t base, std::int64_t exp, std::string_view what = "power") {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r = mul(r, base, what);
  return r;
}

// (base^k - 1) / (base - 1) = 1 + base + ... + base^(k-1), for base >= 2.
inline std::int64_t geometric_sum(std::int64_t base, std::int64_t terms,
                                  std::string_view what = "geometric sum") {
  std::int64_t sum = 0;
  std::int64_t term = 1;
  for (std::int64_t i = 0; i < terms; ++i) {
    sum = add(sum, term, what);
    if (i + 1 < terms) term = mul(term, base, what);
  }
  return sum;
}

// C(n, r) without overflow, or nullopt when it exceeds int64.
std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t r);

}  // namespace wspec::checked
