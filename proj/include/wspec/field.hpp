#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wspec/error.hpp"

namespace wspec {

// A field element, always the canonical representative in [0, q-1].
using symbol = std::uint32_t;
using field_vector = std::vector<symbol>;

inline constexpr std::uint64_t default_enumeration_budget = std::uint64_t{1} << 24;

bool is_prime(std::int64_t q) noexcept;

/// Arithmetic in Z_q for prime q. Elements are reduced eagerly.
class prime_field {
 public:
  /// Throws errc::not_prime for composite q, errc::invalid_argument for
  /// q < 2 or q too large to tabulate weights over.
  explicit prime_field(std::int64_t q);

  std::uint32_t order() const noexcept { return q_; }

  symbol reduce(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(q_);
    return static_cast<symbol>(r < 0 ? r + q_ : r);
  }
  symbol add(symbol a, symbol b) const noexcept {
    auto s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  symbol sub(symbol a, symbol b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  symbol neg(symbol a) const noexcept { return a == 0 ? 0 : q_ - a; }
  symbol mul(symbol a, symbol b) const noexcept {
    return static_cast<symbol>((std::uint64_t{a} * b) % q_);
  }
  symbol inv(symbol a) const;

  bool contains(std::int64_t x) const noexcept { return x >= 0 && x < static_cast<std::int64_t>(q_); }

  friend bool operator==(const prime_field&, const prime_field&) = default;

 private:
  std::uint32_t q_;
};

prime_field validate_prime(std::int64_t q);

/// Rank over Z_q of a row-major `rows` x `cols` matrix.
std::size_t matrix_rank(const prime_field& field, std::size_t rows, std::size_t cols,
                        std::span<const symbol> entries);
std::size_t matrix_rank(const prime_field& field, const std::vector<field_vector>& rows);

/// Generator matrix of an [n,k]_q code: full row rank, no zero column.
class generator_matrix {
 public:
  /// Validates entries, rank and columns; throws errc::rank_deficient,
  /// errc::zero_column or errc::invalid_argument.
  static generator_matrix from_rows(const prime_field& field, const std::vector<field_vector>& rows);
  static generator_matrix from_entries(const prime_field& field, std::size_t k, std::size_t n,
                                       std::vector<symbol> row_major);

  const prime_field& field() const noexcept { return field_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }

  std::span<const symbol> row(std::size_t r) const noexcept { return {data_.data() + r * n_, n_}; }
  symbol at(std::size_t r, std::size_t c) const noexcept { return data_[r * n_ + c]; }
  field_vector column(std::size_t c) const;
  std::span<const symbol> entries() const noexcept { return data_; }

  friend bool operator==(const generator_matrix&, const generator_matrix&) = default;

 private:
  generator_matrix(prime_field field, std::size_t k, std::size_t n, std::vector<symbol> data)
      : field_(field), k_(k), n_(n), data_(std::move(data)) {}

  prime_field field_;
  std::size_t k_;
  std::size_t n_;
  std::vector<symbol> data_;
};

/// q^k, or errc::size_overflow when it exceeds `budget`.
std::uint64_t codeword_count(const generator_matrix& g, std::uint64_t budget = default_enumeration_budget);

field_vector encode(const generator_matrix& g, std::span<const symbol> message);

/// Calls visit(message, codeword) for all q^k messages in lexicographic
/// order (last coordinate fastest), starting with the zero message.
template <class Visitor>
void for_each_codeword(const generator_matrix& g, Visitor&& visit,
                       std::uint64_t budget = default_enumeration_budget) {
  const auto total = codeword_count(g, budget);
  const auto& f = g.field();
  field_vector message(g.k(), 0);
  field_vector word(g.n(), 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    visit(std::span<const symbol>(message), std::span<const symbol>(word));
    for (std::size_t j = g.k(); j-- > 0;) {
      auto r = g.row(j);
      for (std::size_t c = 0; c < word.size(); ++c) word[c] = f.add(word[c], r[c]);
      message[j] = f.add(message[j], 1);
      if (message[j] != 0) break;
    }
  }
}

std::vector<field_vector> enumerate_codewords(const generator_matrix& g,
                                              std::uint64_t budget = default_enumeration_budget);

}  // namespace wspec
