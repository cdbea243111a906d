#include "wspec/bounds.hpp"

#include <algorithm>
#include <string>

#include "wspec/checked.hpp"
#include "wspec/spectra.hpp"

namespace wspec {

const char* quantity_label(bound_quantity q) noexcept {
  switch (q) {
    case bound_quantity::max_spectrum: return "L(k,q)";
    case bound_quantity::max_spectrum_at_length: return "L(n,k,q)";
    case bound_quantity::min_mws_length: return "M(mu,k,q)";
    case bound_quantity::max_fws_length: return "N(mu,k,q)";
  }
  return "?";
}

namespace {

std::int64_t projective_points(const weight_function& wf, std::size_t k) {
  return checked::geometric_sum(wf.q(), static_cast<std::int64_t>(k), "(q^k-1)/(q-1)");
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

void require_dimension(std::size_t k) {
  if (k == 0) throw error(errc::invalid_argument, "dimension k must be positive");
}

bool odd_lee(const weight_function& wf) { return wf.kind() == weight_kind::lee && wf.q() > 2; }

}  // namespace

bound_report spectrum_ceiling(const weight_function& wf, std::size_t k, std::optional<std::int64_t> n) {
  require_dimension(k);
  const auto& c = wf.constants();
  bound_report r;
  r.quantity = n ? bound_quantity::max_spectrum_at_length : bound_quantity::max_spectrum;

  r.upper = bound_value{mws_spectrum_size(wf, k),
                        "(q^k-1)/(q-1) * Delta: each one-dimensional subspace carries at most Delta weights"};
  if (n) {
    if (*n < static_cast<std::int64_t>(k))
      throw error(errc::invalid_argument, "length n must be at least k");
    const auto nm = checked::mul(*n, c.m, "n*m");
    if (nm < r.upper->value) r.upper = bound_value{nm, "n*m: the largest weight of a length-n word"};
  }

  if (!n) {
    switch (wf.kind()) {
      case weight_kind::lee:
        if (wf.q() > 2) {
          r.exact = bound_value{r.upper->value, "(q^k-1)/2, attained by the Lee-MWS construction"};
          break;
        }
        [[fallthrough]];
      case weight_kind::hamming:
        r.exact = bound_value{r.upper->value, "(q^k-1)/(q-1), attained by Hamming MWS codes"};
        break;
      case weight_kind::manhattan:
        r.exact = bound_value{r.upper->value, "q^k-1, attained by the Manhattan-MWS construction"};
        break;
      case weight_kind::custom:
        break;
    }
    return r;
  }

  if (k == 1 && wf.kind() != weight_kind::custom) {
    r.exact = bound_value{c.delta, "dimension one: the all-ones word spans a line carrying Delta weights"};
  } else if (c.initial_segment) {
    const auto n_max = checked::geometric_sum(c.m + 1, static_cast<std::int64_t>(k), "((m+1)^k-1)/m");
    if (*n <= n_max)
      r.exact = bound_value{checked::mul(*n, c.m), "n*m, attained by the unit-column FWS construction"};
  }
  return r;
}

bound_report fws_max_length(const weight_function& wf, std::size_t k) {
  require_dimension(k);
  const auto& c = wf.constants();
  if (!c.initial_segment)
    throw error(errc::not_initial_segment, "FWS length bound needs symbol weights forming {1..m}");
  bound_report r;
  r.quantity = bound_quantity::max_fws_length;
  r.exact = bound_value{checked::geometric_sum(c.m + 1, static_cast<std::int64_t>(k), "((m+1)^k-1)/m"),
                        "((m+1)^k-1)/m: basis support growth bound, met by the unit-column FWS construction"};
  return r;
}

bound_report mws_min_length(const weight_function& wf, std::size_t k) {
  require_dimension(k);
  const auto kk = static_cast<std::int64_t>(k);
  const auto points = projective_points(wf, k);
  bound_report r;
  r.quantity = bound_quantity::min_mws_length;

  switch (wf.kind()) {
    case weight_kind::lee:
      if (odd_lee(wf)) {
        const std::int64_t q = wf.q();
        const std::int64_t alpha = (q + 1) / 2;
        r.lower = bound_value{checked::add(points, ceil_div(2 * (kk - 1), q - 1)),
                              "(q^k-1)/(q-1) + ceil(2(k-1)/(q-1)): MWS codewords have support at least k"};
        r.upper = bound_value{checked::geometric_sum(alpha, kk * (kk + 1) / 2, "Lee-MWS length"),
                              "length of the Lee-MWS construction, sum of ((q+1)/2)^i for i < k(k+1)/2"};
        if (k == 2) {
          switch (q) {
            case 5: r.note = "exhaustive search gives 8 <= M(L,2,5) <= 11"; break;
            case 7: r.note = "Lee-MWS codes of length 16 are known"; break;
            case 11: r.note = "Lee-MWS codes of length 34 are known"; break;
            case 13: r.note = "Lee-MWS codes of length 46 are known"; break;
            case 17: r.note = "Lee-MWS codes of length 76 are known"; break;
            case 19: r.note = "Lee-MWS codes of length 86 are known"; break;
            case 23: r.note = "Lee-MWS codes of length 126 are known"; break;
            default: break;
          }
        }
      } else {
        r.lower = bound_value{checked::pow(2, kk, "2^k") - 1, "2^k-1: at most one codeword per weight for q = 2"};
      }
      break;
    case weight_kind::manhattan:
      r.exact = bound_value{points, "(q^k-1)/(q-1): n >= |w(C)|/(q-1), met by the Manhattan-MWS construction"};
      break;
    case weight_kind::hamming:
      r.lower = bound_value{points, "(q^k-1)/(q-1): the spectrum size cannot exceed n"};
      r.note = "upper bound known from the Hamming MWS literature; not computed here";
      break;
    case weight_kind::custom:
      r.lower = bound_value{ceil_div(mws_spectrum_size(wf, k), wf.constants().m),
                            "ceil((q^k-1)/(q-1) * Delta / m): n*m must cover the MWS spectrum"};
      break;
  }
  if (r.lower && r.upper && r.lower->value == r.upper->value)
    r.exact = bound_value{r.lower->value, "lower and upper bounds coincide"};
  return r;
}

bool sandwich_check(std::int64_t code_size, std::int64_t max_multiplicity, std::int64_t m, std::int64_t n,
                    std::int64_t observed) {
  if (code_size < 1 || max_multiplicity < 1 || m < 1 || n < 1 || observed < 0)
    throw error(errc::invalid_argument, "sandwich check needs positive arguments");
  return ceil_div(code_size - 1, max_multiplicity) <= observed && observed <= checked::mul(m, n);
}

}  // namespace wspec
