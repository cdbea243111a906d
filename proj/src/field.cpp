#include "wspec/field.hpp"

#include <string>
#include <utility>

#include "wspec/checked.hpp"

namespace wspec {

namespace {

// Symbol weights are tabulated per element, so q stays modest.
constexpr std::int64_t max_modulus = std::int64_t{1} << 12;

}  // namespace

bool is_prime(std::int64_t q) noexcept {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

prime_field::prime_field(std::int64_t q) {
  if (q < 2) throw error(errc::invalid_argument, "field order must be at least 2, got " + std::to_string(q));
  if (q > max_modulus) throw error(errc::invalid_argument, "field order " + std::to_string(q) + " is too large");
  if (!is_prime(q)) throw error(errc::not_prime, std::to_string(q) + " is not prime; only prime fields Z_q are supported");
  q_ = static_cast<std::uint32_t>(q);
}

symbol prime_field::inv(symbol a) const {
  if (a == 0) throw error(errc::invalid_argument, "zero has no inverse");
  // a^(q-2) by square-and-multiply.
  symbol result = 1;
  symbol base = a;
  for (std::uint32_t e = q_ - 2; e != 0; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

prime_field validate_prime(std::int64_t q) { return prime_field(q); }

std::size_t matrix_rank(const prime_field& field, std::size_t rows, std::size_t cols,
                        std::span<const symbol> entries) {
  std::vector<symbol> a(entries.begin(), entries.end());
  for (auto& x : a) x = field.reduce(x);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    const symbol scale = field.inv(a[rank * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[rank * cols + j] = field.mul(a[rank * cols + j], scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r * cols + c] == 0) continue;
      const symbol factor = a[r * cols + c];
      for (std::size_t j = c; j < cols; ++j)
        a[r * cols + j] = field.sub(a[r * cols + j], field.mul(factor, a[rank * cols + j]));
    }
    ++rank;
  }
  return rank;
}

std::size_t matrix_rank(const prime_field& field, const std::vector<field_vector>& rows) {
  if (rows.empty()) return 0;
  const auto cols = rows.front().size();
  std::vector<symbol> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw error(errc::invalid_argument, "rows have different lengths");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return matrix_rank(field, rows.size(), cols, flat);
}

generator_matrix generator_matrix::from_entries(const prime_field& field, std::size_t k, std::size_t n,
                                                std::vector<symbol> row_major) {
  if (k == 0) throw error(errc::invalid_argument, "dimension k must be positive");
  if (k > n) throw error(errc::rank_deficient, "k = " + std::to_string(k) + " exceeds length n = " + std::to_string(n));
  if (row_major.size() != k * n) throw error(errc::invalid_argument, "entry count does not match k*n");
  for (auto x : row_major)
    if (!field.contains(x))
      throw error(errc::invalid_argument, "entry " + std::to_string(x) + " is outside [0, q-1]");
  for (std::size_t c = 0; c < n; ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < k && zero; ++r) zero = row_major[r * n + c] == 0;
    if (zero) throw error(errc::zero_column, "column " + std::to_string(c + 1) + " is identically zero");
  }
  const auto rank = matrix_rank(field, k, n, row_major);
  if (rank != k)
    throw error(errc::rank_deficient, "rank " + std::to_string(rank) + " is less than k = " + std::to_string(k));
  return generator_matrix(field, k, n, std::move(row_major));
}

generator_matrix generator_matrix::from_rows(const prime_field& field, const std::vector<field_vector>& rows) {
  if (rows.empty()) throw error(errc::invalid_argument, "generator matrix needs at least one row");
  const auto n = rows.front().size();
  std::vector<symbol> flat;
  flat.reserve(rows.size() * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw error(errc::invalid_argument, "rows have different lengths");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_entries(field, rows.size(), n, std::move(flat));
}

field_vector generator_matrix::column(std::size_t c) const {
  field_vector col(k_);
  for (std::size_t r = 0; r < k_; ++r) col[r] = at(r, c);
  return col;
}

std::uint64_t codeword_count(const generator_matrix& g, std::uint64_t budget) {
  const auto total = checked::pow(g.field().order(), static_cast<std::int64_t>(g.k()), "codeword count q^k");
  if (static_cast<std::uint64_t>(total) > budget)
    throw error(errc::size_overflow, "q^k = " + std::to_string(total) + " exceeds the enumeration budget " +
                                         std::to_string(budget));
  return static_cast<std::uint64_t>(total);
}

field_vector encode(const generator_matrix& g, std::span<const symbol> message) {
  if (message.size() != g.k()) throw error(errc::invalid_argument, "message length must equal k");
  const auto& f = g.field();
  field_vector word(g.n(), 0);
  for (std::size_t r = 0; r < g.k(); ++r) {
    if (message[r] == 0) continue;
    auto row = g.row(r);
    for (std::size_t c = 0; c < g.n(); ++c) word[c] = f.add(word[c], f.mul(message[r], row[c]));
  }
  return word;
}

std::vector<field_vector> enumerate_codewords(const generator_matrix& g, std::uint64_t budget) {
  std::vector<field_vector> out;
  out.reserve(codeword_count(g, budget));
  for_each_codeword(
      g, [&](std::span<const symbol>, std::span<const symbol> word) { out.emplace_back(word.begin(), word.end()); },
      budget);
  return out;
}

}  // namespace wspec
