#pragma once
// Shared helpers for the unit tests: independent brute-force oracles written
// straight from the definitions, and a spectrum wrapper that applies the
// length sandwich to every spectrum the suite computes.

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "wspec/bounds.hpp"
#include "wspec/field.hpp"
#include "wspec/spectra.hpp"
#include "wspec/weights.hpp"

namespace oracle {

using row = std::vector<std::uint32_t>;
using matrix = std::vector<row>;

inline std::int64_t hamming(std::uint32_t x, std::uint32_t) { return x != 0; }
inline std::int64_t lee(std::uint32_t x, std::uint32_t q) { return std::min<std::int64_t>(x, q - x); }
inline std::int64_t manhattan(std::uint32_t x, std::uint32_t) { return x; }

template <class W>
std::int64_t weight(const row& v, std::uint32_t q, W w) {
  std::int64_t s = 0;
  for (auto x : v) s += w(x % q, q);
  return s;
}

// Every vector of Z_q^len, last coordinate fastest.
inline std::vector<row> all_vectors(std::uint32_t q, std::size_t len) {
  std::vector<row> out;
  row v(len, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++v[i] < q) break;
      v[i] = 0;
      if (i == 0) return out;
    }
    if (len == 0) return out;
  }
}

inline row encode(const matrix& g, const row& u, std::uint32_t q) {
  row c(g.empty() ? 0 : g[0].size(), 0);
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = (c[j] + u[r] * g[r][j]) % q;
  return c;
}

// Weight -> count over nonzero messages (codewords counted with multiplicity
// of messages, which is exact when g has full rank).
template <class W>
std::map<std::int64_t, std::uint64_t> distribution(const matrix& g, std::uint32_t q, W w) {
  std::map<std::int64_t, std::uint64_t> d;
  for (const auto& u : all_vectors(q, g.size())) {
    if (std::all_of(u.begin(), u.end(), [](auto x) { return x == 0; })) continue;
    ++d[weight(encode(g, u, q), q, w)];
  }
  return d;
}

// Size of the row space, counted by listing every combination.
inline std::size_t span_size(const matrix& g, std::uint32_t q) {
  std::set<row> words;
  for (const auto& u : all_vectors(q, g.size())) words.insert(encode(g, u, q));
  return words.size();
}

inline std::size_t rank_by_span(const matrix& g, std::uint32_t q) {
  std::size_t s = span_size(g, q), r = 0;
  while (s > 1) {
    s /= q;
    ++r;
  }
  return r;
}

inline matrix random_matrix(std::mt19937& rng, std::uint32_t q, std::size_t k, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> d(0, q - 1);
  matrix g(k, row(n));
  for (auto& r : g)
    for (auto& x : r) x = d(rng);
  return g;
}

}  // namespace oracle

namespace testing_support {

inline wspec::generator_matrix make(std::uint32_t q, const oracle::matrix& rows) {
  return wspec::generator_matrix::from_rows(wspec::prime_field(q), rows);
}

// spectrum() plus the length sandwich ceil((q^k-1)/r) <= |w(C)| <= m*n.
inline wspec::weight_spectrum spectrum(const wspec::generator_matrix& g, const wspec::weight_function& wf) {
  auto s = wspec::spectrum(g, wf);
  std::int64_t code_size = 1;
  for (std::size_t i = 0; i < g.k(); ++i) code_size *= g.field().order();
  const auto holds = wspec::sandwich_check(code_size, static_cast<std::int64_t>(s.max_multiplicity()),
                                           wf.constants().m, static_cast<std::int64_t>(g.n()),
                                           static_cast<std::int64_t>(s.size()));
  CHECK_MESSAGE(holds, "sandwich violated for n=" << g.n() << " k=" << g.k() << " q=" << g.field().order());
  return s;
}

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> p{2, 3, 5, 7, 11, 13, 17, 19, 23};
  return p;
}

}  // namespace testing_support
