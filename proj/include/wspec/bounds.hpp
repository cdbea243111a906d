#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "wspec/weights.hpp"

namespace wspec {

enum class bound_quantity {
  max_spectrum,            // L(k,q)
  max_spectrum_at_length,  // L(n,k,q)
  min_mws_length,          // M(mu,k,q)
  max_fws_length,          // N(mu,k,q)
};

const char* quantity_label(bound_quantity q) noexcept;

struct bound_value {
  std::int64_t value = 0;
  std::string source;
};

struct bound_report {
  bound_quantity quantity = bound_quantity::max_spectrum;
  std::optional<bound_value> lower;
  std::optional<bound_value> upper;
  std::optional<bound_value> exact;
  std::string note;
};

/// Upper bound on the spectrum size, min(n*m, (q^k-1)/(q-1)*Δ), plus the exact
/// value where it is settled.
bound_report spectrum_ceiling(const weight_function& wf, std::size_t k,
                              std::optional<std::int64_t> n = std::nullopt);

/// N(mu,k,q) = ((m+1)^k - 1)/m for initial-segment weights.
bound_report fws_max_length(const weight_function& wf, std::size_t k);

/// Bounds on M(mu,k,q), the least length admitting an MWS code.
bound_report mws_min_length(const weight_function& wf, std::size_t k);

/// ceil((M-1)/r) <= observed <= m*n.
bool sandwich_check(std::int64_t code_size, std::int64_t max_multiplicity, std::int64_t m,
                    std::int64_t n, std::int64_t observed);

}  // namespace wspec
