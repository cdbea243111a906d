#include <doctest.h>

#include <cmath>
#include <numeric>

#include "support.hpp"
#include "wspec/constructions.hpp"
#include "wspec/spectra.hpp"

using namespace wspec;
using testing_support::make;

namespace {

errc code_of(auto&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  return errc{};
}

const oracle::matrix g25 = {{1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}};

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

// Support facts straight from the codeword list.
std::pair<std::size_t, bool> support_oracle(const oracle::matrix& g, std::uint32_t q) {
  std::vector<oracle::row> words;
  for (const auto& u : oracle::all_vectors(q, g.size())) {
    auto c = oracle::encode(g, u, q);
    if (std::any_of(c.begin(), c.end(), [](auto x) { return x != 0; })) words.push_back(c);
  }
  std::size_t min_support = SIZE_MAX;
  bool intersecting = true;
  for (std::size_t a = 0; a < words.size(); ++a) {
    std::size_t s = 0;
    for (auto x : words[a]) s += x != 0;
    min_support = std::min(min_support, s);
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      bool meet = false;
      for (std::size_t j = 0; j < words[a].size(); ++j) meet = meet || (words[a][j] && words[b][j]);
      intersecting = intersecting && meet;
    }
  }
  return {min_support, intersecting};
}

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("spectrum examples") {
    prime_field f3(3), f5(5);
    auto s = testing_support::spectrum(make(3, {{1, 0}, {0, 1}}), weight_function::lee(f3));
    CHECK(s.weights == std::vector<std::int64_t>{1, 2});
    CHECK(s.distribution == std::map<std::int64_t, std::uint64_t>{{1, 4}, {2, 4}});
    CHECK(s.distribution == oracle::distribution({{1, 0}, {0, 1}}, 3, oracle::lee));
    CHECK(testing_support::spectrum(make(5, g25), weight_function::lee(f5)).size() == 12);
    auto m = testing_support::spectrum(make(3, {{1, 0, 0, 0}, {0, 1, 1, 1}}), weight_function::manhattan(f3));
    CHECK(m.weights == range(1, 8));
  }

  TEST_CASE("spectrum matches the brute-force distribution") {
    std::mt19937 rng(3);
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
      prime_field f(q);
      for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = k; n <= k + 3; ++n)
          for (int trial = 0; trial < 6; ++trial) {
            auto rows = oracle::random_matrix(rng, q, k, n);
            for (std::size_t j = 0; j < n; ++j) rows[j % k][j] = rows[j % k][j] ? rows[j % k][j] : 1;
            if (oracle::rank_by_span(rows, q) != k) continue;
            auto g = make(q, rows);
            auto check_weight = [&](const weight_function& wf, auto w) {
              auto s = testing_support::spectrum(g, wf);
              auto d = oracle::distribution(rows, q, w);
              CHECK(s.distribution == d);
              CHECK(s.codeword_total() + 1 == static_cast<std::uint64_t>(std::pow(q, k)));
            };
            check_weight(weight_function::hamming(f), oracle::hamming);
            check_weight(weight_function::lee(f), oracle::lee);
            check_weight(weight_function::manhattan(f), oracle::manhattan);
          }
    }
  }

  TEST_CASE("is_fws examples") {
    prime_field f5(5);
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
      prime_field f(q);
      for (std::size_t k = 1; k <= 3; ++k) {
        oracle::matrix id(k, oracle::row(k, 0));
        for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
        auto g = make(q, id);
        CHECK(is_fws(g, weight_function::hamming(f)));
        CHECK(is_fws(g, weight_function::lee(f)));
        CHECK(is_fws(g, weight_function::manhattan(f)));
      }
    }
    oracle::matrix wide = {{1, 0, 0, 0}, {0, 1, 1, 1}};
    for (int i = 0; i < 9; ++i) {
      wide[0].push_back(1);
      wide[1].push_back(1);
    }
    auto lee5 = weight_function::lee(f5);
    auto wg = make(5, wide);
    CHECK(is_mws(wg, lee5));
    CHECK_FALSE(is_fws(wg, lee5));
    CHECK(is_fws(make(5, {{1, 0, 0, 0}, {0, 1, 1, 1}}), lee5));
  }

  TEST_CASE("is_mws examples") {
    prime_field f3(3), f5(5);
    CHECK(is_mws(make(5, g25), weight_function::lee(f5)));
    CHECK(is_mws(make(3, {{1, 0, 0, 0}, {0, 1, 1, 1}}), weight_function::manhattan(f3)));
    CHECK_FALSE(is_mws(make(5, {{1, 0}, {0, 1}}), weight_function::lee(f5)));
    CHECK(mws_spectrum_size(weight_function::lee(f5), 2) == 12);
    CHECK(mws_spectrum_size(weight_function::manhattan(f3), 3) == 26);
  }

  TEST_CASE("support_properties examples") {
    auto s = support_properties(make(5, {{1, 0}, {0, 1}}));
    CHECK(s.min_support == 1);
    CHECK_FALSE(s.pairwise_intersecting);
    auto t = support_properties(make(5, g25));
    CHECK(t.pairwise_intersecting);
    CHECK(support_oracle(g25, 5).second);
    CHECK(t.min_support == support_oracle(g25, 5).first);
  }

  TEST_CASE("support_properties against brute force") {
    std::mt19937 rng(5);
    for (std::uint32_t q : {2u, 3u, 5u})
      for (std::size_t k = 1; k <= 3; ++k)
        for (int trial = 0; trial < 10; ++trial) {
          auto rows = oracle::random_matrix(rng, q, k, k + 2);
          for (std::size_t j = 0; j < k + 2; ++j) rows[0][j] = rows[0][j] ? rows[0][j] : 1;
          if (oracle::rank_by_span(rows, q) != k) continue;
          auto s = support_properties(make(q, rows));
          auto [ms, pi] = support_oracle(rows, q);
          CHECK(s.min_support == ms);
          CHECK(s.pairwise_intersecting == pi);
        }
  }

  TEST_CASE("verify_basis_bound") {
    prime_field f3(3), f5(5);
    CHECK(verify_basis_bound(make(5, {{1, 0, 0, 0}, {0, 1, 1, 1}}), weight_function::lee(f5)));
    CHECK(verify_basis_bound(make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), weight_function::lee(f3)));
    auto full = expand(general_fws(3, weight_function::hamming(f3), 7));
    CHECK(verify_basis_bound(full, weight_function::hamming(f3)));
    CHECK(code_of([&] { verify_basis_bound(make(5, g25), weight_function::lee(f5)); }) == errc::not_fws);
    CHECK(code_of([&] {
            verify_basis_bound(make(3, {{1, 0}, {0, 1}}), weight_function::custom(f3, {0, 1, 3}));
          }) == errc::not_initial_segment);
  }

  TEST_CASE("basis bound holds on every FWS code from the constructions") {
    for (std::uint32_t q : {2u, 3u, 5u})
      for (std::size_t k = 1; k <= 3; ++k) {
        prime_field f(q);
        for (const auto& wf : {weight_function::hamming(f), weight_function::lee(f), weight_function::manhattan(f)}) {
          const auto m = wf.constants().m;
          std::int64_t nmax = 1, p = 1;
          for (std::size_t i = 1; i < k; ++i) nmax += (p *= (m + 1));
          for (std::int64_t n = static_cast<std::int64_t>(k); n <= nmax; ++n)
            CHECK(verify_basis_bound(expand(general_fws(k, wf, n)), wf));
        }
      }
  }

  TEST_CASE("spectrum is invariant under column permutation and Lee column negation") {
    prime_field f5(5);
    auto lee = weight_function::lee(f5);
    std::vector<oracle::row> cols;
    for (const auto& v : oracle::all_vectors(5, 2))
      if (v[0] || v[1]) cols.push_back(v);
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        oracle::matrix rows(2, oracle::row(n));
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t r = 0; r < 2; ++r) rows[r][j] = cols[idx[j]][r];
        if (oracle::rank_by_span(rows, 5) == 2) {
          const auto base = spectrum(make(5, rows), lee).distribution;
          auto rotated = rows;
          for (auto& r : rotated) std::rotate(r.begin(), r.begin() + 1, r.end());
          CHECK(spectrum(make(5, rotated), lee).distribution == base);
          auto swapped = rows;
          for (auto& r : swapped) std::swap(r[0], r[n - 1]);
          CHECK(spectrum(make(5, swapped), lee).distribution == base);
          for (std::size_t j = 0; j < n; ++j) {
            auto negated = rows;
            for (auto& r : negated) r[j] = f5.neg(r[j]);
            CHECK(spectrum(make(5, negated), lee).distribution == base);
          }
          ++checked;
        }
        // next non-decreasing index tuple (multisets of columns)
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == cols.size() - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < n; ++j) idx[j] = idx[i - 1];
      }
    }
    CHECK(checked > 10000);
  }
}
