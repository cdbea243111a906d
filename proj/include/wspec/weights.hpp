#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wspec/field.hpp"

namespace wspec {

enum class weight_kind { hamming, lee, manhattan, custom };

struct weight_constants {
  std::int64_t m = 0;      // largest symbol weight
  std::int64_t delta = 0;  // most weights any one-dimensional subspace can carry
  bool initial_segment = false;  // symbol weights of nonzero symbols are exactly {1..m}
};

/// Component-wise weight: w(x) = sum of per-symbol weights, w(0) = 0 and
/// w(a) > 0 for a != 0.
class weight_function {
 public:
  static weight_function hamming(const prime_field& field);
  static weight_function lee(const prime_field& field);
  static weight_function manhattan(const prime_field& field);

  /// "hamming", "lee" or "manhattan"; errc::unknown_weight otherwise.
  static weight_function builtin(std::string_view name, const prime_field& field);

  /// `table` has q entries with table[0] == 0 and every other entry > 0.
  static weight_function custom(const prime_field& field, std::vector<std::int64_t> table,
                                std::string name = "custom");

  /// Parses "q v1 v2 ... v_{q-1}" (weights of symbols 1..q-1).
  static weight_function parse_custom(std::string_view line);

  std::int64_t operator()(symbol s) const noexcept { return table_[s]; }

  const prime_field& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.order(); }
  weight_kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  std::span<const std::int64_t> table() const noexcept { return table_; }
  const weight_constants& constants() const noexcept { return constants_; }

 private:
  weight_function(prime_field field, weight_kind kind, std::vector<std::int64_t> table, std::string name);

  prime_field field_;
  weight_kind kind_;
  std::vector<std::int64_t> table_;
  std::string name_;
  weight_constants constants_;
};

std::int64_t word_weight(const weight_function& wf, std::span<const symbol> word);

/// m, Δ and the initial-segment flag. Δ is the number of distinct tuples
/// (w(a*1), ..., w(a*(q-1))) over nonzero scalars a.
weight_constants constants(const weight_function& wf);

/// Nonzero scalars c with w(c*b) = w(b) for every b; always contains 1.
/// These are exactly the scalars that leave every word weight unchanged.
std::vector<symbol> weight_preserving_scalars(const weight_function& wf);

/// Symbol multiplicities (index = symbol, entry 0 unused) of a word u whose
/// multiples a*u carry Δ distinct weights: symbol b appears R^(b-1) times
/// with radix R = m + 1. Throws errc::size_overflow when R^(q-1) does not fit.
std::vector<std::int64_t> delta_witness(const weight_function& wf);

/// Weight of the word described by per-symbol multiplicities.
std::int64_t multiset_word_weight(const weight_function& wf, std::span<const std::int64_t> multiplicity,
                                  symbol scalar);

/// Sorted set { w(x) : x in Z_q^n, x != 0 }.
std::vector<std::int64_t> achievable_weights(const weight_function& wf, std::int64_t n);

}  // namespace wspec
