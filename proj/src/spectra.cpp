#include "wspec/spectra.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "wspec/checked.hpp"

namespace wspec {

std::uint64_t weight_spectrum::max_multiplicity() const noexcept {
  std::uint64_t r = 0;
  for (const auto& [w, count] : distribution) r = std::max(r, count);
  return r;
}

std::uint64_t weight_spectrum::codeword_total() const noexcept {
  std::uint64_t total = 0;
  for (const auto& [w, count] : distribution) total += count;
  return total;
}

weight_spectrum spectrum(const generator_matrix& g, const weight_function& wf, std::uint64_t budget) {
  if (!(g.field() == wf.field())) throw error(errc::invalid_argument, "matrix and weight are over different fields");
  weight_spectrum s;
  s.n = g.n();
  s.k = g.k();
  s.q = g.field().order();
  s.weight_name = wf.name();
  bool first = true;
  for_each_codeword(
      g,
      [&](std::span<const symbol>, std::span<const symbol> word) {
        if (first) {  // zero message
          first = false;
          return;
        }
        ++s.distribution[word_weight(wf, word)];
      },
      budget);
  s.weights.reserve(s.distribution.size());
  for (const auto& [w, count] : s.distribution) s.weights.push_back(w);
  return s;
}

std::int64_t mws_spectrum_size(const weight_function& wf, std::size_t k) {
  const auto points = checked::geometric_sum(wf.q(), static_cast<std::int64_t>(k), "(q^k-1)/(q-1)");
  return checked::mul(points, wf.constants().delta, "MWS spectrum size");
}

bool is_fws(const weight_spectrum& s, const weight_function& wf) {
  return s.weights == achievable_weights(wf, static_cast<std::int64_t>(s.n));
}

bool is_fws(const generator_matrix& g, const weight_function& wf, std::uint64_t budget) {
  return is_fws(spectrum(g, wf, budget), wf);
}

bool is_mws(const weight_spectrum& s, const weight_function& wf) {
  return static_cast<std::int64_t>(s.size()) == mws_spectrum_size(wf, s.k);
}

bool is_mws(const generator_matrix& g, const weight_function& wf, std::uint64_t budget) {
  return is_mws(spectrum(g, wf, budget), wf);
}

namespace {

using support_bits = std::vector<std::uint64_t>;

support_bits support_of(std::span<const symbol> word) {
  support_bits bits((word.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] != 0) bits[i / 64] |= std::uint64_t{1} << (i % 64);
  return bits;
}

std::size_t popcount(const support_bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool intersects(const support_bits& a, const support_bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

}  // namespace

support_summary support_properties(const generator_matrix& g, std::uint64_t budget) {
  std::vector<support_bits> supports;
  supports.reserve(codeword_count(g, budget));
  bool first = true;
  for_each_codeword(
      g,
      [&](std::span<const symbol>, std::span<const symbol> word) {
        if (first) {
          first = false;
          return;
        }
        supports.push_back(support_of(word));
      },
      budget);

  support_summary out;
  out.min_support = g.n();
  out.pairwise_intersecting = true;
  for (const auto& s : supports) out.min_support = std::min(out.min_support, popcount(s));
  for (std::size_t i = 0; i < supports.size() && out.pairwise_intersecting; ++i)
    for (std::size_t j = i + 1; j < supports.size(); ++j)
      if (!intersects(supports[i], supports[j])) {
        out.pairwise_intersecting = false;
        break;
      }
  return out;
}

bool verify_basis_bound(const generator_matrix& g, const weight_function& wf, std::uint64_t budget) {
  if (!wf.constants().initial_segment)
    throw error(errc::not_initial_segment, "basis bound needs symbol weights forming {1..m}");
  if (!is_fws(g, wf, budget)) throw error(errc::not_fws, "basis bound applies to FWS codes only");

  const auto m = wf.constants().m;
  std::vector<support_bits> rows;
  for (std::size_t r = 0; r < g.k(); ++r) rows.push_back(support_of(g.row(r)));

  for (std::size_t first = 0; first < g.k(); ++first) {
    support_bits others(rows[first].size(), 0);
    for (std::size_t r = 0; r < g.k(); ++r)
      if (r != first)
        for (std::size_t w = 0; w < others.size(); ++w) others[w] |= rows[r][w];
    support_bits only_first = rows[first];
    for (std::size_t w = 0; w < others.size(); ++w) only_first[w] &= ~others[w];
    const auto s_only = static_cast<std::int64_t>(popcount(only_first));
    const auto t = static_cast<std::int64_t>(popcount(others));
    if (s_only > m * t + 1) return false;
  }
  return true;
}

}  // namespace wspec
