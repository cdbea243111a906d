#include "wspec/checked.hpp"
#include "wspec/error.hpp"

#include <algorithm>
#include <string>

namespace wspec {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::not_prime: return "NotPrime";
    case errc::size_overflow: return "SizeOverflow";
    case errc::unknown_weight: return "UnknownWeightName";
    case errc::not_initial_segment: return "NotInitialSegment";
    case errc::not_fws: return "NotFWS";
    case errc::rank_deficient: return "RankDeficient";
    case errc::zero_column: return "ZeroColumn";
    case errc::out_of_range: return "OutOfRange";
    case errc::not_odd: return "NotOdd";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string budget_message(std::optional<std::uint64_t> required, std::uint64_t budget) {
  std::string msg = "enumeration needs ";
  msg += required ? std::to_string(*required) : std::string("more than 2^63");
  msg += " items but the budget is " + std::to_string(budget);
  return msg;
}

}  // namespace

budget_error::budget_error(std::optional<std::uint64_t> required, std::uint64_t budget)
    : error(errc::budget_exceeded, budget_message(required, budget)), required_(required), budget_(budget) {}

namespace checked {

void overflow(std::string_view what) {
  throw error(errc::size_overflow, std::string(what) + " overflows 64-bit range");
}

std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc * (n - r + i) / i stays integral at every step.
    acc = acc * (n - r + i) / i;
    if (acc > static_cast<unsigned __int128>(INT64_MAX)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace checked
}  // namespace wspec
