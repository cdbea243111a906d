#include "wspec/search.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "wspec/bounds.hpp"
#include "wspec/checked.hpp"
#include "wspec/spectra.hpp"

namespace wspec {

std::vector<field_vector> canonical_columns(std::size_t k, const weight_function& wf) {
  if (k == 0) throw error(errc::invalid_argument, "dimension k must be positive");
  const auto& f = wf.field();
  const auto total = checked::pow(f.order(), static_cast<std::int64_t>(k), "q^k");
  if (static_cast<std::uint64_t>(total) > default_enumeration_budget)
    throw error(errc::size_overflow, "q^k = " + std::to_string(total) + " exceeds the enumeration budget");
  const auto scalars = weight_preserving_scalars(wf);

  std::vector<field_vector> reps;
  field_vector v(k, 0);
  field_vector image(k);
  for (std::int64_t i = 1; i < total; ++i) {
    for (std::size_t j = k; j-- > 0;) {
      v[j] = f.add(v[j], 1);
      if (v[j] != 0) break;
    }
    bool least = true;
    for (auto s : scalars) {
      for (std::size_t j = 0; j < k; ++j) image[j] = f.mul(s, v[j]);
      if (image < v) {
        least = false;
        break;
      }
    }
    if (least) reps.push_back(v);
  }
  return reps;
}

std::optional<std::uint64_t> multiset_count(std::size_t columns, std::int64_t n) {
  if (n < 0 || columns == 0) return 0;
  return checked::binomial(columns + static_cast<std::uint64_t>(n) - 1, static_cast<std::uint64_t>(n));
}

namespace {

using index_seq = std::vector<std::uint32_t>;

struct shard_result {
  std::int64_t best = 0;
  std::vector<index_seq> witnesses;
  std::uint64_t examined = 0;
  std::uint64_t rank_deficient = 0;
};

// Spectrum evaluation over multisets of candidate columns. A message u and a
// column c contribute w(u.c) to the codeword weight; messages are reduced to
// one per weight-preserving scalar orbit since those share every weight.
class multiset_scanner {
 public:
  multiset_scanner(const std::vector<field_vector>& columns, const std::vector<field_vector>& messages,
                   const weight_function& wf, std::int64_t n)
      : n_(static_cast<std::size_t>(n)), columns_(columns.size()), messages_(messages.size()) {
    const auto& f = wf.field();
    contribution_.resize(columns_ * messages_);
    for (std::size_t c = 0; c < columns_; ++c)
      for (std::size_t u = 0; u < messages_; ++u) {
        symbol dot = 0;
        for (std::size_t j = 0; j < columns[c].size(); ++j) dot = f.add(dot, f.mul(messages[u][j], columns[c][j]));
        contribution_[c * messages_ + u] = static_cast<std::uint32_t>(wf(dot));
      }
    stamp_.assign(static_cast<std::size_t>(checked::mul(n, wf.constants().m)) + 1, 0);
  }

  shard_result scan(const index_seq& prefix) {
    shard_result out;
    acc_.assign((n_ + 1) * messages_, 0);
    seq_ = prefix;
    seq_.resize(n_);
    for (std::size_t d = 0; d < prefix.size(); ++d) push(d, prefix[d]);
    descend(prefix.size(), prefix.empty() ? 0 : prefix.back(), out);
    return out;
  }

 private:
  void push(std::size_t depth, std::uint32_t column) {
    const auto* from = &acc_[depth * messages_];
    auto* to = &acc_[(depth + 1) * messages_];
    const auto* add = &contribution_[column * messages_];
    for (std::size_t u = 0; u < messages_; ++u) to[u] = from[u] + add[u];
  }

  void descend(std::size_t depth, std::uint32_t min_column, shard_result& out) {
    if (depth == n_) {
      evaluate(out);
      return;
    }
    for (auto c = min_column; c < columns_; ++c) {
      seq_[depth] = c;
      push(depth, c);
      descend(depth + 1, c, out);
    }
  }

  void evaluate(shard_result& out) {
    ++out.examined;
    const auto* weights = &acc_[n_ * messages_];
    // A nonzero message with weight 0 means the columns miss a direction:
    // rank < k.
    for (std::size_t u = 0; u < messages_; ++u)
      if (weights[u] == 0) {
        ++out.rank_deficient;
        return;
      }
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
    std::int64_t distinct = 0;
    for (std::size_t u = 0; u < messages_; ++u) {
      auto& s = stamp_[weights[u]];
      if (s != generation_) {
        s = generation_;
        ++distinct;
      }
    }
    if (distinct > out.best) {
      out.best = distinct;
      out.witnesses.clear();
    }
    if (distinct == out.best && out.witnesses.size() < witness_cap) out.witnesses.push_back(seq_);
  }

  std::size_t n_;
  std::size_t columns_;
  std::size_t messages_;
  std::vector<std::uint32_t> contribution_;
  std::vector<std::uint32_t> acc_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  index_seq seq_;
};

// Non-decreasing index sequences of length `depth`, in lexicographic order.
std::vector<index_seq> prefixes(std::size_t columns, std::size_t depth) {
  std::vector<index_seq> out;
  index_seq cur;
  auto rec = [&](auto& self, std::uint32_t from) -> void {
    if (cur.size() == depth) {
      out.push_back(cur);
      return;
    }
    for (auto c = from; c < columns; ++c) {
      cur.push_back(c);
      self(self, c);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

column_multiset to_multiset(const weight_function& wf, std::size_t k, const std::vector<field_vector>& columns,
                            const index_seq& seq) {
  column_multiset cm{wf.field(), k, {}};
  for (std::size_t i = 0; i < seq.size();) {
    std::size_t j = i;
    while (j < seq.size() && seq[j] == seq[i]) ++j;
    cm.blocks.push_back({columns[seq[i]], static_cast<std::uint64_t>(j - i)});
    i = j;
  }
  return cm;
}

}  // namespace

search_result optimal_spectrum(const search_spec& spec) {
  const auto& wf = spec.wf;
  if (spec.k == 0) throw error(errc::invalid_argument, "dimension k must be positive");
  if (spec.n < static_cast<std::int64_t>(spec.k))
    throw error(errc::invalid_argument, "length n must be at least k");
  if (spec.budget == 0) throw error(errc::invalid_argument, "search budget must be positive");

  auto columns = canonical_columns(spec.k, wf);
  const auto required = multiset_count(columns.size(), spec.n);
  if (!required || *required > spec.budget) throw budget_error(required, spec.budget);
  if (checked::mul(spec.n, wf.constants().m) > std::int64_t{INT32_MAX})
    throw error(errc::size_overflow, "n*m does not fit the weight accumulator");
  if (spec.reverse_order) std::reverse(columns.begin(), columns.end());
  const auto messages = canonical_columns(spec.k, wf);

  const auto shards = prefixes(columns.size(), std::min<std::size_t>(2, static_cast<std::size_t>(spec.n)));
  std::vector<shard_result> results(shards.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    multiset_scanner scanner(columns, messages, wf, spec.n);
    for (std::size_t s; (s = next.fetch_add(1)) < shards.size();) results[s] = scanner.scan(shards[s]);
  };
  const auto workers = std::max(1u, std::min<unsigned>(spec.workers, static_cast<unsigned>(shards.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  search_result out;
  for (const auto& r : results) {
    out.l_value = std::max(out.l_value, r.best);
    out.multisets_examined += r.examined;
    out.rank_deficient += r.rank_deficient;
  }
  for (const auto& r : results) {
    if (r.best != out.l_value) continue;
    for (const auto& w : r.witnesses) {
      if (out.witnesses.size() == witness_cap) break;
      out.witnesses.push_back(to_multiset(wf, spec.k, columns, w));
    }
  }
  out.is_mws_attained = out.l_value == mws_spectrum_size(wf, spec.k);
  out.is_fws_attained = out.l_value == static_cast<std::int64_t>(achievable_weights(wf, spec.n).size());
  out.exhaustive = out.multisets_examined == *required;
  return out;
}

mws_length_probe min_mws_length(std::size_t k, const weight_function& wf, std::int64_t n_max, std::uint64_t budget,
                                unsigned workers, bool reverse_order) {
  if (n_max < static_cast<std::int64_t>(k)) throw error(errc::invalid_argument, "n_max must be at least k");
  const auto bound = mws_min_length(wf, k);
  std::int64_t start = static_cast<std::int64_t>(k);
  if (bound.exact) start = std::max(start, bound.exact->value);
  if (bound.lower) start = std::max(start, bound.lower->value);

  mws_length_probe probe;
  for (auto n = start; n <= n_max; ++n) {
    try {
      auto r = optimal_spectrum({n, k, wf, budget, workers, reverse_order});
      const bool found = r.is_mws_attained;
      probe.per_n.emplace_back(n, std::move(r));
      if (found) {
        probe.found_n = n;
        break;
      }
    } catch (const budget_error& e) {
      probe.budget_exceeded_at = n;
      probe.required = e.required();
      break;
    }
  }
  return probe;
}

}  // namespace wspec
