#include "wspec/weights.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "wspec/checked.hpp"

namespace wspec {

namespace {

// Scalars c with w(c*y) == w(y) for every y. They form a subgroup S of the
// multiplicative group; two scalars act identically on weights iff they lie
// in the same coset of S, so Δ = (q-1)/|S|.
std::vector<symbol> stabilizer(const prime_field& f, std::span<const std::int64_t> table) {
  std::vector<symbol> out;
  for (symbol c = 1; c < f.order(); ++c) {
    bool keeps = true;
    for (symbol y = 1; y < f.order() && keeps; ++y) keeps = table[f.mul(c, y)] == table[y];
    if (keeps) out.push_back(c);
  }
  return out;
}

weight_constants compute_constants(const prime_field& f, std::span<const std::int64_t> table) {
  weight_constants c;
  std::set<std::int64_t> values;
  for (symbol s = 1; s < f.order(); ++s) {
    c.m = std::max(c.m, table[s]);
    values.insert(table[s]);
  }
  c.initial_segment = static_cast<std::int64_t>(values.size()) == c.m && *values.begin() == 1;
  c.delta = static_cast<std::int64_t>(f.order() - 1) / static_cast<std::int64_t>(stabilizer(f, table).size());
  return c;
}

}  // namespace

weight_function::weight_function(prime_field field, weight_kind kind, std::vector<std::int64_t> table,
                                 std::string name)
    : field_(field), kind_(kind), table_(std::move(table)), name_(std::move(name)) {
  constants_ = compute_constants(field_, table_);
}

weight_function weight_function::hamming(const prime_field& field) {
  std::vector<std::int64_t> t(field.order(), 1);
  t[0] = 0;
  return weight_function(field, weight_kind::hamming, std::move(t), "hamming");
}

weight_function weight_function::lee(const prime_field& field) {
  const std::int64_t q = field.order();
  std::vector<std::int64_t> t(q);
  for (std::int64_t x = 0; x < q; ++x) t[x] = std::min(x, q - x);
  return weight_function(field, weight_kind::lee, std::move(t), "lee");
}

weight_function weight_function::manhattan(const prime_field& field) {
  std::vector<std::int64_t> t(field.order());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = static_cast<std::int64_t>(x);
  return weight_function(field, weight_kind::manhattan, std::move(t), "manhattan");
}

weight_function weight_function::builtin(std::string_view name, const prime_field& field) {
  if (name == "hamming") return hamming(field);
  if (name == "lee") return lee(field);
  if (name == "manhattan") return manhattan(field);
  throw error(errc::unknown_weight, "unknown weight '" + std::string(name) + "' (expected hamming, lee or manhattan)");
}

weight_function weight_function::custom(const prime_field& field, std::vector<std::int64_t> table, std::string name) {
  if (table.size() != field.order())
    throw error(errc::invalid_argument, "weight table needs exactly q = " + std::to_string(field.order()) + " entries");
  if (table[0] != 0) throw error(errc::invalid_argument, "weight of the zero symbol must be 0");
  for (std::size_t s = 1; s < table.size(); ++s)
    if (table[s] <= 0)
      throw error(errc::invalid_argument, "weight of nonzero symbol " + std::to_string(s) + " must be positive");
  return weight_function(field, weight_kind::custom, std::move(table), std::move(name));
}

weight_function weight_function::parse_custom(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::int64_t q = 0;
  if (!(in >> q)) throw error(errc::parse_error, "custom weight: expected modulus q as first token");
  const prime_field field(q);
  std::vector<std::int64_t> table{0};
  std::int64_t v;
  while (in >> v) table.push_back(v);
  if (!in.eof()) throw error(errc::parse_error, "custom weight: token " + std::to_string(table.size() + 1) + " is not an integer");
  if (table.size() != field.order())
    throw error(errc::parse_error, "custom weight: expected " + std::to_string(q - 1) + " symbol weights, got " +
                                       std::to_string(table.size() - 1));
  return custom(field, std::move(table));
}

std::int64_t word_weight(const weight_function& wf, std::span<const symbol> word) {
  std::int64_t total = 0;
  for (auto s : word) total = checked::add(total, wf(s), "word weight");
  return total;
}

weight_constants constants(const weight_function& wf) { return wf.constants(); }

std::vector<symbol> weight_preserving_scalars(const weight_function& wf) {
  return stabilizer(wf.field(), wf.table());
}

std::vector<std::int64_t> delta_witness(const weight_function& wf) {
  const auto& f = wf.field();
  // symbol weights are digits in [0, m], so radix m+1 keeps tuples apart
  const auto radix = checked::add(wf.constants().m, 1, "witness radix");
  std::vector<std::int64_t> mult(f.order(), 0);
  std::int64_t power = 1;
  for (symbol b = 1; b < f.order(); ++b) {
    mult[b] = power;
    if (b + 1 < f.order()) power = checked::mul(power, radix, "witness multiplicity");
  }
  return mult;
}

std::int64_t multiset_word_weight(const weight_function& wf, std::span<const std::int64_t> multiplicity, symbol scalar) {
  const auto& f = wf.field();
  std::int64_t total = 0;
  for (symbol b = 1; b < multiplicity.size(); ++b)
    total = checked::add(total, checked::mul(multiplicity[b], wf(f.mul(scalar, b)), "word weight"), "word weight");
  return total;
}

std::vector<std::int64_t> achievable_weights(const weight_function& wf, std::int64_t n) {
  if (n < 1) throw error(errc::invalid_argument, "length n must be positive");
  const auto top = checked::mul(n, wf.constants().m, "n*m");
  if (top > (std::int64_t{1} << 32)) throw error(errc::size_overflow, "n*m = " + std::to_string(top) + " is too large to tabulate");

  std::set<std::int64_t> distinct(wf.table().begin() + 1, wf.table().end());
  const std::size_t words = static_cast<std::size_t>(top) / 64 + 1;
  std::vector<std::uint64_t> reach(words, 0), next(words);
  reach[0] = 1;  // the empty prefix has weight 0
  for (std::int64_t i = 0; i < n; ++i) {
    next = reach;  // symbol 0 adds nothing
    for (auto v : distinct) {
      const std::size_t shift_words = static_cast<std::size_t>(v) / 64;
      const unsigned shift_bits = static_cast<unsigned>(v % 64);
      for (std::size_t w = words; w-- > shift_words;) {
        std::uint64_t moved = reach[w - shift_words] << shift_bits;
        if (shift_bits != 0 && w > shift_words) moved |= reach[w - shift_words - 1] >> (64 - shift_bits);
        next[w] |= moved;
      }
    }
    reach.swap(next);
  }
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1; x <= top; ++x)
    if (reach[static_cast<std::size_t>(x) / 64] >> (x % 64) & 1u) out.push_back(x);
  return out;
}

}  // namespace wspec
