#include "wspec/constructions.hpp"

#include <sstream>
#include <string>

#include "wspec/checked.hpp"

namespace wspec {

namespace {

field_vector unit(std::size_t k, std::size_t i) {
  field_vector v(k, 0);
  v[i] = 1;
  return v;
}

void require_dimension(std::size_t k) {
  if (k == 0) throw error(errc::invalid_argument, "dimension k must be positive");
}

}  // namespace

std::int64_t column_multiset::length() const {
  std::int64_t n = 0;
  for (const auto& b : blocks) {
    if (b.multiplicity > static_cast<std::uint64_t>(INT64_MAX)) checked::overflow("multiplicity");
    n = checked::add(n, static_cast<std::int64_t>(b.multiplicity), "code length");
  }
  return n;
}

generator_matrix expand(const column_multiset& cm) {
  require_dimension(cm.k);
  std::vector<field_vector> distinct_rows(cm.k);
  for (std::size_t i = 0; i < cm.blocks.size(); ++i) {
    const auto& b = cm.blocks[i];
    if (b.column.size() != cm.k)
      throw error(errc::invalid_argument, "block " + std::to_string(i + 1) + " column has wrong height");
    if (b.multiplicity == 0)
      throw error(errc::invalid_argument, "block " + std::to_string(i + 1) + " has zero multiplicity");
    bool zero = true;
    for (auto x : b.column) {
      if (!cm.field.contains(x)) throw error(errc::invalid_argument, "column entry outside [0, q-1]");
      zero = zero && x == 0;
    }
    if (zero) throw error(errc::zero_column, "block " + std::to_string(i + 1) + " is the zero column");
    for (std::size_t r = 0; r < cm.k; ++r) distinct_rows[r].push_back(b.column[r]);
  }
  const auto n = cm.length();
  if (n > max_expanded_length)
    throw error(errc::size_overflow, "expanded length " + std::to_string(n) + " is too large to materialise");
  if (cm.blocks.empty() || matrix_rank(cm.field, distinct_rows) != cm.k)
    throw error(errc::rank_deficient, "columns do not span Z_q^k");

  const auto len = static_cast<std::size_t>(n);
  std::vector<symbol> entries(cm.k * len);
  std::size_t c = 0;
  for (const auto& b : cm.blocks)
    for (std::uint64_t rep = 0; rep < b.multiplicity; ++rep, ++c)
      for (std::size_t r = 0; r < cm.k; ++r) entries[r * len + c] = b.column[r];
  return generator_matrix::from_entries(cm.field, cm.k, len, std::move(entries));
}

column_multiset general_fws(std::size_t k, const weight_function& wf, std::int64_t n) {
  require_dimension(k);
  const auto& c = wf.constants();
  if (!c.initial_segment)
    throw error(errc::not_initial_segment, "FWS construction needs symbol weights forming {1..m}");
  const auto kk = static_cast<std::int64_t>(k);
  const auto n_max = checked::geometric_sum(c.m + 1, kk, "((m+1)^k-1)/m");
  if (n < kk || n > n_max)
    throw error(errc::out_of_range, "length n = " + std::to_string(n) + " outside [" + std::to_string(kk) + ", " +
                                        std::to_string(n_max) + "]: FWS codes need k <= n <= ((m+1)^k-1)/m");

  column_multiset cm{wf.field(), k, {}};
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    // Leave one column for each remaining unit vector.
    const auto remaining_units = kk - static_cast<std::int64_t>(i) - 1;
    const auto cap = checked::add(checked::mul(c.m, assigned), 1);
    const auto a = std::min(cap, n - assigned - remaining_units);
    cm.blocks.push_back({unit(k, i), static_cast<std::uint64_t>(a)});
    assigned += a;
  }
  return cm;
}

column_multiset lee_mws(std::size_t k, const prime_field& field) {
  require_dimension(k);
  if (field.order() == 2) throw error(errc::not_odd, "Lee-MWS construction needs odd q; for q = 2 Lee weight is Hamming weight");
  const std::int64_t alpha = (field.order() + 1) / 2;
  const auto kk = static_cast<std::int64_t>(k);
  const auto blocks = checked::add(kk, checked::mul(kk, kk - 1) / 2);
  checked::geometric_sum(alpha, blocks, "Lee-MWS length");

  // Lee weights of the block columns are base-alpha digits of w(uG), so the
  // weight fixes every |u_i| and every |u_i + u_j|. For nonzero u_i, u_j the
  // second pins the relative sign, hence u up to a global sign.
  std::vector<field_vector> columns;
  for (std::size_t i = 0; i < k; ++i) columns.push_back(unit(k, i));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      auto c = unit(k, i);
      c[j] = 1;
      columns.push_back(std::move(c));
    }
  column_multiset cm{field, k, {}};
  std::int64_t mult = 1;
  for (std::size_t b = 0; b < columns.size(); ++b) {
    cm.blocks.push_back({std::move(columns[b]), static_cast<std::uint64_t>(mult)});
    if (b + 1 < columns.size()) mult = checked::mul(mult, alpha, "Lee-MWS multiplicity");
  }
  return cm;
}

column_multiset manhattan_mws(std::size_t k, const prime_field& field) {
  require_dimension(k);
  column_multiset cm{field, k, {}};
  std::int64_t mult = 1;
  for (std::size_t i = 0; i < k; ++i) {
    cm.blocks.push_back({unit(k, i), static_cast<std::uint64_t>(mult)});
    if (i + 1 < k) mult = checked::mul(mult, field.order(), "Manhattan-MWS multiplicity");
  }
  return cm;
}

column_multiset manhattan_fws(std::size_t k, const prime_field& field, std::int64_t n) {
  return general_fws(k, weight_function::manhattan(field), n);
}

std::string format_blocks(const column_multiset& cm) {
  std::ostringstream out;
  for (const auto& b : cm.blocks) {
    for (std::size_t r = 0; r < b.column.size(); ++r) out << (r ? " " : "") << b.column[r];
    out << " ^ " << b.multiplicity << '\n';
  }
  return out.str();
}

column_multiset parse_blocks(const prime_field& field, std::size_t k, std::string_view text) {
  require_dimension(k);
  column_multiset cm{field, k, {}};
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    const auto caret = line.find('^');
    if (caret == std::string::npos) throw error(errc::parse_error, where + "missing '^ multiplicity'");
    std::istringstream col(line.substr(0, caret));
    std::istringstream mult(line.substr(caret + 1));
    column_block b;
    std::int64_t x;
    while (col >> x) {
      if (!field.contains(x)) throw error(errc::parse_error, where + "entry " + std::to_string(x) + " outside [0, q-1]");
      b.column.push_back(static_cast<symbol>(x));
    }
    if (!col.eof() || b.column.size() != k)
      throw error(errc::parse_error, where + "expected " + std::to_string(k) + " column entries");
    std::int64_t m = 0;
    std::string rest;
    if (!(mult >> m) || m <= 0 || (mult >> rest))
      throw error(errc::parse_error, where + "multiplicity must be one positive integer");
    b.multiplicity = static_cast<std::uint64_t>(m);
    cm.blocks.push_back(std::move(b));
  }
  return cm;
}

}  // namespace wspec
