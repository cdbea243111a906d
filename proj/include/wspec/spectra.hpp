#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wspec/field.hpp"
#include "wspec/weights.hpp"

namespace wspec {

struct weight_spectrum {
  std::vector<std::int64_t> weights;                  // sorted, distinct, positive
  std::map<std::int64_t, std::uint64_t> distribution;  // weight -> number of nonzero codewords
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint32_t q = 0;
  std::string weight_name;

  std::size_t size() const noexcept { return weights.size(); }
  std::uint64_t max_multiplicity() const noexcept;
  std::uint64_t codeword_total() const noexcept;  // sum of the distribution
};

weight_spectrum spectrum(const generator_matrix& g, const weight_function& wf,
                         std::uint64_t budget = default_enumeration_budget);

/// (q^k - 1)/(q - 1) * Δ, the spectrum size of an MWS code.
std::int64_t mws_spectrum_size(const weight_function& wf, std::size_t k);

/// FWS: the code's weight set equals the weight set of the whole space.
bool is_fws(const weight_spectrum& s, const weight_function& wf);
bool is_fws(const generator_matrix& g, const weight_function& wf,
            std::uint64_t budget = default_enumeration_budget);

bool is_mws(const weight_spectrum& s, const weight_function& wf);
bool is_mws(const generator_matrix& g, const weight_function& wf,
            std::uint64_t budget = default_enumeration_budget);

struct support_summary {
  std::size_t min_support = 0;
  bool pairwise_intersecting = false;  // every two nonzero codewords share a support coordinate
};

support_summary support_properties(const generator_matrix& g,
                                   std::uint64_t budget = default_enumeration_budget);

/// Checks s' <= m*t + 1 for every choice of one basis row as v1 (the rest as
/// v2..vk), where s' counts coordinates only v1 covers and t counts the
/// coordinates covered by the others. Requires an initial-segment weight
/// (errc::not_initial_segment) and an FWS code (errc::not_fws).
bool verify_basis_bound(const generator_matrix& g, const weight_function& wf,
                        std::uint64_t budget = default_enumeration_budget);

}  // namespace wspec
