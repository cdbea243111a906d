#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wspec/constructions.hpp"
#include "wspec/weights.hpp"

namespace wspec {

inline constexpr std::uint64_t default_search_budget = 100'000'000;
inline constexpr std::size_t witness_cap = 16;

struct search_spec {
  std::int64_t n = 0;
  std::size_t k = 0;
  weight_function wf;
  std::uint64_t budget = default_search_budget;  // max multisets to enumerate
  unsigned workers = 1;
  bool reverse_order = false;
};

struct search_result {
  std::int64_t l_value = 0;
  std::vector<column_multiset> witnesses;  // first witness_cap in enumeration order
  bool is_mws_attained = false;
  bool is_fws_attained = false;
  std::uint64_t multisets_examined = 0;
  std::uint64_t rank_deficient = 0;
  bool exhaustive = false;
};

/// One representative (the lexicographically least) per orbit of nonzero
/// vectors in Z_q^k under weight-preserving scalars, in lexicographic order.
std::vector<field_vector> canonical_columns(std::size_t k, const weight_function& wf);

/// Number of size-n multisets over `columns` distinct columns, if it fits.
std::optional<std::uint64_t> multiset_count(std::size_t columns, std::int64_t n);

/// Exhaustive L(n,k,q) over all [n,k]_q codes. Throws budget_error when the
/// multiset count exceeds spec.budget.
search_result optimal_spectrum(const search_spec& spec);

struct mws_length_probe {
  std::optional<std::int64_t> found_n;
  std::vector<std::pair<std::int64_t, search_result>> per_n;
  std::optional<std::int64_t> budget_exceeded_at;
  std::optional<std::uint64_t> required;  // multiset count at budget_exceeded_at
};

/// Searches n = max(k, lower bound on M) upward to n_max and stops at the
/// first length carrying an MWS code.
mws_length_probe min_mws_length(std::size_t k, const weight_function& wf, std::int64_t n_max,
                                std::uint64_t budget = default_search_budget, unsigned workers = 1,
                                bool reverse_order = false);

}  // namespace wspec
