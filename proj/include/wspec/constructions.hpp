#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wspec/field.hpp"
#include "wspec/weights.hpp"

namespace wspec {

struct column_block {
  field_vector column;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const column_block&, const column_block&) = default;
};

/// A generator matrix written as distinct columns with repetition counts.
struct column_multiset {
  prime_field field;
  std::size_t k = 0;
  std::vector<column_block> blocks;

  std::int64_t length() const;  // total multiplicity, checked

  friend bool operator==(const column_multiset&, const column_multiset&) = default;
};

/// Largest expandable length; longer codes are reported as errc::size_overflow.
inline constexpr std::int64_t max_expanded_length = std::int64_t{1} << 22;

/// Columns repeated per multiplicity, in block order.
generator_matrix expand(const column_multiset& cm);

/// FWS code of length n on unit columns with complete-sequence multiplicities
/// (a_1 = 1, a_i <= m * (a_1 + ... + a_{i-1}) + 1).
column_multiset general_fws(std::size_t k, const weight_function& wf, std::int64_t n);

/// Lee-MWS code: blocks e_1..e_k, then e_i + e_j for i < j in lexicographic
/// order, with multiplicities alpha^0, alpha^1, ..., alpha = (q+1)/2. For
/// k <= 2 this is [e_1 | e_2^alpha | (e_1+e_2)^(alpha^2)]. q must be odd.
column_multiset lee_mws(std::size_t k, const prime_field& field);

/// Manhattan MWS (and FWS) code [e_1 | e_2^q | ... | e_k^(q^(k-1))].
column_multiset manhattan_mws(std::size_t k, const prime_field& field);

/// Manhattan FWS code of length n, k <= n <= (q^k - 1)/(q - 1).
column_multiset manhattan_fws(std::size_t k, const prime_field& field, std::int64_t n);

/// One "c1 c2 ... ck ^ mult" line per block, newline terminated.
std::string format_blocks(const column_multiset& cm);

/// Inverse of format_blocks; blank lines are ignored.
column_multiset parse_blocks(const prime_field& field, std::size_t k, std::string_view text);

}  // namespace wspec
