#include <doctest.h>

#include "support.hpp"
#include "wspec/bounds.hpp"
#include "wspec/constructions.hpp"

using namespace wspec;

namespace {

errc code_of(auto&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  return errc{};
}

std::int64_t value(const std::optional<bound_value>& v) {
  REQUIRE(v.has_value());
  return v->value;
}

void check_consistent(const bound_report& r) {
  if (r.lower && r.upper) CHECK(r.lower->value <= r.upper->value);
  if (r.lower && r.exact) CHECK(r.lower->value <= r.exact->value);
  if (r.exact && r.upper) CHECK(r.exact->value <= r.upper->value);
  for (const auto* v : {&r.lower, &r.upper, &r.exact})
    if (*v) CHECK_FALSE((*v)->source.empty());
}

std::int64_t ipow(std::int64_t b, std::size_t e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("spectrum_ceiling examples") {
    prime_field f3(3), f5(5);
    CHECK(value(spectrum_ceiling(weight_function::lee(f5), 2).exact) == 12);
    CHECK(value(spectrum_ceiling(weight_function::manhattan(f3), 2).exact) == 8);
    auto r = spectrum_ceiling(weight_function::lee(f5), 2, 3);
    CHECK(r.quantity == bound_quantity::max_spectrum_at_length);
    CHECK(value(r.upper) == 6);
    CHECK(value(spectrum_ceiling(weight_function::lee(f5), 2, 20).upper) == 12);
  }

  TEST_CASE("fws_max_length examples") {
    prime_field f3(3), f5(5), f7(7);
    CHECK(value(fws_max_length(weight_function::hamming(f5), 3).exact) == 7);
    CHECK(value(fws_max_length(weight_function::lee(f5), 2).exact) == 4);
    CHECK(value(fws_max_length(weight_function::manhattan(f5), 2).exact) == 6);
    CHECK(value(fws_max_length(weight_function::manhattan(f3), 3).exact) == 13);
    CHECK(value(fws_max_length(weight_function::hamming(f7), 4).exact) == 15);
    CHECK(code_of([&] { fws_max_length(weight_function::custom(f3, {0, 1, 3}), 2); }) ==
          errc::not_initial_segment);
    CHECK(code_of([&] { fws_max_length(weight_function::manhattan(f7), 40); }) == errc::size_overflow);
  }

  TEST_CASE("mws_min_length examples") {
    prime_field f2(2), f3(3), f5(5);
    auto lee = mws_min_length(weight_function::lee(f5), 2);
    CHECK(value(lee.lower) == 7);
    CHECK(value(lee.upper) == 13);
    CHECK_FALSE(lee.exact.has_value());
    CHECK(lee.note.find("8 <= M(L,2,5) <= 11") != std::string::npos);
    CHECK(value(mws_min_length(weight_function::manhattan(f3), 3).exact) == 13);
    CHECK(value(mws_min_length(weight_function::lee(f2), 3).lower) == 7);
  }

  TEST_CASE("sandwich_check examples") {
    CHECK(sandwich_check(25, 2, 2, 13, 12));
    CHECK(sandwich_check(9, 4, 1, 2, 2));
    CHECK_FALSE(sandwich_check(25, 2, 2, 5, 12));
    CHECK_FALSE(sandwich_check(25, 1, 2, 13, 12));
  }

  TEST_CASE("reports are internally consistent") {
    for (auto q : testing_support::small_primes()) {
      prime_field f(q);
      for (const auto& wf : {weight_function::hamming(f), weight_function::lee(f), weight_function::manhattan(f)})
        for (std::size_t k = 1; k <= 4; ++k) {
          check_consistent(spectrum_ceiling(wf, k));
          check_consistent(fws_max_length(wf, k));
          check_consistent(mws_min_length(wf, k));
          for (auto n = static_cast<std::int64_t>(k); n <= 30; ++n) check_consistent(spectrum_ceiling(wf, k, n));
        }
    }
  }

  TEST_CASE("Hamming FWS length does not depend on q") {
    for (auto q : testing_support::small_primes()) {
      prime_field f(q);
      for (std::size_t k = 1; k <= 10; ++k)
        CHECK(value(fws_max_length(weight_function::hamming(f), k).exact) == ipow(2, k) - 1);
    }
  }

  TEST_CASE("FWS and MWS lengths separate exactly when the weight constants differ") {
    for (auto q : testing_support::small_primes()) {
      prime_field f(q);
      std::vector<weight_function> weights = {weight_function::hamming(f), weight_function::lee(f),
                                              weight_function::manhattan(f)};
      if (q >= 5) {
        std::vector<std::int64_t> t(q, 1);
        t[0] = 0;
        t[1] = 2;
        weights.push_back(weight_function::custom(f, t));  // m=2, Δ=q-1
      }
      for (const auto& wf : weights)
        for (std::size_t k = 2; k <= 4; ++k) {
          const auto c = wf.constants();
          const auto n_fws = value(fws_max_length(wf, k).exact);
          auto mws = mws_min_length(wf, k);
          const auto m_lower = mws.exact ? mws.exact->value : value(mws.lower);
          if (c.delta != c.m || c.m != static_cast<std::int64_t>(q - 1)) {
            CHECK_MESSAGE(n_fws < m_lower, wf.name() << " q=" << q << " k=" << k);
          }
          if (wf.kind() == weight_kind::manhattan) CHECK(value(mws.exact) == n_fws);
          if (wf.kind() == weight_kind::lee && q > 2) CHECK(value(mws.lower) > n_fws);
        }
    }
  }

  TEST_CASE("sandwich holds for every construction") {
    for (std::uint32_t q : {3u, 5u, 7u}) {
      prime_field f(q);
      for (std::size_t k = 1; k <= 3; ++k) {
        testing_support::spectrum(expand(lee_mws(k, f)), weight_function::lee(f));
        testing_support::spectrum(expand(manhattan_mws(k, f)), weight_function::manhattan(f));
        for (const auto& wf : {weight_function::hamming(f), weight_function::lee(f)})
          testing_support::spectrum(expand(general_fws(k, wf, static_cast<std::int64_t>(k))), wf);
      }
    }
  }

  TEST_CASE("labels") {
    CHECK(std::string(quantity_label(bound_quantity::max_spectrum)) == "L(k,q)");
    CHECK(std::string(quantity_label(bound_quantity::max_fws_length)) == "N(mu,k,q)");
  }
}
