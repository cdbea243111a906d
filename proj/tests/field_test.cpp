#include <doctest.h>

#include <set>

#include "support.hpp"
#include "wspec/checked.hpp"
#include "wspec/field.hpp"

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

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("validate_prime") {
    CHECK(validate_prime(5).order() == 5);
    CHECK(validate_prime(2).order() == 2);
    CHECK(code_of([] { validate_prime(9); }) == errc::not_prime);
    CHECK(code_of([] { validate_prime(1); }) == errc::invalid_argument);
    CHECK(code_of([] { validate_prime(0); }) == errc::invalid_argument);
    CHECK(code_of([] { validate_prime(-7); }) == errc::invalid_argument);
  }

  TEST_CASE("is_prime agrees with trial division") {
    for (std::int64_t q = -3; q < 500; ++q) {
      bool p = q >= 2;
      for (std::int64_t d = 2; d * d <= q && p; ++d) p = q % d != 0;
      CHECK_MESSAGE(is_prime(q) == p, q);
    }
  }

  TEST_CASE("field arithmetic") {
    for (auto q : testing_support::small_primes()) {
      prime_field f(q);
      for (symbol a = 0; a < q; ++a) {
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a) CHECK(f.mul(a, f.inv(a)) == 1);
        for (symbol b = 0; b < q; ++b) {
          CHECK(f.add(a, b) == (a + b) % q);
          CHECK(f.sub(a, b) == (a + q - b) % q);
          CHECK(f.mul(a, b) == (a * b) % q);
        }
      }
      CHECK(f.reduce(-1) == q - 1);
    }
    CHECK(code_of([] { prime_field(5).inv(0); }) == errc::invalid_argument);
  }

  TEST_CASE("matrix_rank examples") {
    prime_field f3(3), f5(5);
    CHECK(matrix_rank(f3, {{1, 0}, {0, 1}}) == 2);
    CHECK(matrix_rank(f5, {{1, 2}, {2, 4}}) == 1);
    CHECK(matrix_rank(f5, g25) == 2);
    CHECK(matrix_rank(f5, {{0, 0, 0}}) == 0);
  }

  TEST_CASE("matrix_rank matches span size and is invariant under row operations") {
    std::mt19937 rng(7);
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
      prime_field f(q);
      for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = 1; n <= 4; ++n)
          for (int trial = 0; trial < 12; ++trial) {
            auto g = oracle::random_matrix(rng, q, k, n);
            const auto r = matrix_rank(f, g);
            CHECK(r == oracle::rank_by_span(g, q));
            auto swapped = g;
            std::reverse(swapped.begin(), swapped.end());
            CHECK(matrix_rank(f, swapped) == r);
            for (symbol c = 1; c < q; ++c) {
              auto scaled = g;
              for (auto& x : scaled[trial % k]) x = f.mul(x, c);
              CHECK(matrix_rank(f, scaled) == r);
            }
          }
    }
  }

  TEST_CASE("generator_matrix validation") {
    prime_field f5(5);
    CHECK(code_of([&] { generator_matrix::from_rows(f5, {{1, 2}, {2, 4}}); }) == errc::rank_deficient);
    CHECK(code_of([&] { generator_matrix::from_rows(f5, {{1, 0, 0}, {0, 1, 0}}); }) == errc::zero_column);
    CHECK(code_of([&] { generator_matrix::from_rows(f5, {{1, 5}}); }) == errc::invalid_argument);
    CHECK(code_of([&] { generator_matrix::from_rows(f5, {{1, 0}, {0}}); }) == errc::invalid_argument);
    CHECK(code_of([&] { generator_matrix::from_entries(f5, 2, 2, {1, 0, 0}); }) == errc::invalid_argument);
    auto g = generator_matrix::from_entries(f5, 1, 2, {1, 2});
    CHECK(g.k() == 1);
    CHECK(g.column(1) == field_vector{2});
  }

  TEST_CASE("enumerate_codewords examples") {
    auto i2 = make(3, {{1, 0}, {0, 1}});
    auto words = enumerate_codewords(i2);
    CHECK(words.size() == 9);
    CHECK(words.front() == field_vector{0, 0});
    CHECK(enumerate_codewords(make(3, {{1, 0, 0, 0}, {0, 1, 1, 1}})).size() == 9);
    CHECK(enumerate_codewords(make(5, g25)).size() == 25);
  }

  TEST_CASE("enumeration budget") {
    auto g = make(5, g25);
    CHECK(code_of([&] { enumerate_codewords(g, 24); }) == errc::size_overflow);
    CHECK(codeword_count(g, 25) == 25);
  }

  TEST_CASE("codewords are distinct, linear and match direct encoding") {
    std::mt19937 rng(11);
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
      for (std::size_t k = 1; k <= 3; ++k) {
        int built = 0;
        for (int trial = 0; trial < 40 && built < 4; ++trial) {
          auto rows = oracle::random_matrix(rng, q, k, k + 2);
          if (oracle::rank_by_span(rows, q) != k) continue;
          bool zero_column = false;
          for (std::size_t c = 0; c < k + 2; ++c) {
            bool z = true;
            for (auto& r : rows) z = z && r[c] == 0;
            zero_column = zero_column || z;
          }
          if (zero_column) continue;
          auto g = make(q, rows);
          ++built;
          std::vector<field_vector> msgs, words;
          for_each_codeword(g, [&](auto msg, auto word) {
            msgs.emplace_back(msg.begin(), msg.end());
            words.emplace_back(word.begin(), word.end());
          });
          std::set<field_vector> distinct(words.begin(), words.end());
          CHECK(distinct.size() == words.size());
          for (std::size_t i = 0; i < msgs.size(); ++i) CHECK(words[i] == oracle::encode(rows, msgs[i], q));
          // uG + vG = (u+v)G over all pairs (q^k <= 343 here)
          prime_field f(q);
          for (std::size_t a = 0; a < msgs.size(); ++a)
            for (std::size_t b = 0; b < msgs.size(); ++b) {
              field_vector sum(k), lhs(g.n());
              for (std::size_t j = 0; j < k; ++j) sum[j] = f.add(msgs[a][j], msgs[b][j]);
              for (std::size_t j = 0; j < g.n(); ++j) lhs[j] = f.add(words[a][j], words[b][j]);
              CHECK(encode(g, sum) == lhs);
            }
        }
        CHECK(built > 0);
      }
    }
  }
}

TEST_SUITE("checked") {
  TEST_CASE("overflow is an error, never a wrap") {
    CHECK(checked::pow(3, 39) == 4052555153018976267LL);
    CHECK(code_of([] { checked::pow(3, 40); }) == errc::size_overflow);
    CHECK(checked::geometric_sum(3, 3) == 13);
    CHECK(checked::geometric_sum(2, 63) == INT64_MAX);
    CHECK(code_of([] { checked::geometric_sum(2, 64); }) == errc::size_overflow);
    CHECK(checked::binomial(27, 4) == 17550u);
    CHECK_FALSE(checked::binomial(200, 100).has_value());
  }
}
