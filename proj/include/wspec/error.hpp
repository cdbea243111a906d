#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace wspec {

enum class errc {
  invalid_argument = 1,
  not_prime,
  size_overflow,
  unknown_weight,
  not_initial_segment,
  not_fws,
  rank_deficient,
  zero_column,
  out_of_range,
  not_odd,
  budget_exceeded,
  parse_error,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Raised when an exhaustive enumeration would exceed its configured budget.
// `required` is empty when the count itself does not fit in 64 bits.
class budget_error : public error {
 public:
  budget_error(std::optional<std::uint64_t> required, std::uint64_t budget);
  std::optional<std::uint64_t> required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::optional<std::uint64_t> required_;
  std::uint64_t budget_;
};

}  // namespace wspec
