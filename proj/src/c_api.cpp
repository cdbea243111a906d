#include "wspec/wspec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "wspec/bounds.hpp"
#include "wspec/constructions.hpp"
#include "wspec/matrix_io.hpp"
#include "wspec/search.hpp"
#include "wspec/spectra.hpp"
#include "wspec/tables.hpp"

struct wspec_weight {
  wspec::weight_function wf;
};
struct wspec_matrix {
  wspec::generator_matrix g;
};
struct wspec_multiset {
  wspec::column_multiset cm;
};
struct wspec_spectrum {
  wspec::weight_spectrum s;
  bool fws;
  bool mws;
  std::int64_t mws_size;
};
struct wspec_bound_report {
  wspec::bound_report r;
};
struct wspec_search_result {
  wspec::search_result r;
};
struct wspec_mws_probe {
  wspec::mws_length_probe p;
  std::vector<wspec_search_result> views;
};
struct wspec_table {
  wspec::table_report t;
};

namespace {

thread_local std::string last_error;

wspec_status to_status(wspec::errc code) {
  using wspec::errc;
  switch (code) {
    case errc::invalid_argument: return WSPEC_ERR_INVALID_ARGUMENT;
    case errc::not_prime: return WSPEC_ERR_NOT_PRIME;
    case errc::size_overflow: return WSPEC_ERR_SIZE_OVERFLOW;
    case errc::unknown_weight: return WSPEC_ERR_UNKNOWN_WEIGHT;
    case errc::not_initial_segment: return WSPEC_ERR_NOT_INITIAL_SEGMENT;
    case errc::not_fws: return WSPEC_ERR_NOT_FWS;
    case errc::rank_deficient: return WSPEC_ERR_RANK_DEFICIENT;
    case errc::zero_column: return WSPEC_ERR_ZERO_COLUMN;
    case errc::out_of_range: return WSPEC_ERR_OUT_OF_RANGE;
    case errc::not_odd: return WSPEC_ERR_NOT_ODD;
    case errc::budget_exceeded: return WSPEC_ERR_BUDGET_EXCEEDED;
    case errc::parse_error: return WSPEC_ERR_PARSE;
  }
  return WSPEC_ERR_INTERNAL;
}

template <class F>
wspec_status guard(F&& body) noexcept {
  try {
    body();
    return WSPEC_OK;
  } catch (const wspec::error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return WSPEC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WSPEC_ERR_INTERNAL;
  }
}

template <class T>
const T& need(const T* p, const char* what) {
  if (!p) throw wspec::error(wspec::errc::invalid_argument, std::string(what) + " is null");
  return *p;
}

template <class T>
T& out_ref(T* p) {
  if (!p) throw wspec::error(wspec::errc::invalid_argument, "output pointer is null");
  return *p;
}

template <class T>
T** need_out(T** p) {
  if (!p) throw wspec::error(wspec::errc::invalid_argument, "output pointer is null");
  return p;
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wspec::search_spec make_spec(std::int64_t n, std::size_t k, const wspec::weight_function& wf,
                             const wspec_search_options* opts) {
  wspec_search_options o;
  wspec_search_options_init(&o);
  if (opts) o = *opts;
  return {n, k, wf, o.budget, o.workers, o.reverse_order != 0};
}

}  // namespace

extern "C" {

const char* wspec_last_error(void) { return last_error.c_str(); }

const char* wspec_status_name(wspec_status status) {
  if (status == WSPEC_OK) return "OK";
  if (status == WSPEC_ERR_INTERNAL) return "Internal";
  if (status >= WSPEC_ERR_INVALID_ARGUMENT && status <= WSPEC_ERR_PARSE)
    return wspec::errc_name(static_cast<wspec::errc>(status));
  return "Unknown";
}

void wspec_string_free(char* s) { std::free(s); }

wspec_status wspec_validate_prime(int64_t q) {
  return guard([&] { wspec::validate_prime(q); });
}

wspec_status wspec_weight_builtin(const char* name, int64_t q, wspec_weight** out) {
  return guard([&] {
    need(name, "weight name");
    *need_out(out) = new wspec_weight{wspec::weight_function::builtin(name, wspec::prime_field(q))};
  });
}

wspec_status wspec_weight_custom(int64_t q, const int64_t* table, size_t len, wspec_weight** out) {
  return guard([&] {
    need(table, "weight table");
    *need_out(out) = new wspec_weight{
        wspec::weight_function::custom(wspec::prime_field(q), std::vector<std::int64_t>(table, table + len))};
  });
}

wspec_status wspec_weight_parse(const char* line, wspec_weight** out) {
  return guard([&] {
    need(line, "weight line");
    *need_out(out) = new wspec_weight{wspec::weight_function::parse_custom(line)};
  });
}

void wspec_weight_free(wspec_weight* w) { delete w; }
int64_t wspec_weight_q(const wspec_weight* w) { return w ? w->wf.q() : 0; }
const char* wspec_weight_name(const wspec_weight* w) { return w ? w->wf.name().c_str() : ""; }

void wspec_weight_constants(const wspec_weight* w, int64_t* m, int64_t* delta, int* initial_segment) {
  if (!w) return;
  const auto& c = w->wf.constants();
  if (m) *m = c.m;
  if (delta) *delta = c.delta;
  if (initial_segment) *initial_segment = c.initial_segment ? 1 : 0;
}

wspec_status wspec_word_weight(const wspec_weight* w, const uint32_t* word, size_t len, int64_t* out) {
  return guard([&] {
    const auto& wf = need(w, "weight").wf;
    if (len) need(word, "word");
    for (size_t i = 0; i < len; ++i)
      if (!wf.field().contains(word[i])) throw wspec::error(wspec::errc::invalid_argument, "word entry outside [0, q-1]");
    out_ref(out) = wspec::word_weight(wf, {word, len});
  });
}

wspec_status wspec_achievable_weights(const wspec_weight* w, int64_t n, int64_t* buf, size_t cap, size_t* count) {
  return guard([&] {
    const auto all = wspec::achievable_weights(need(w, "weight").wf, n);
    for (size_t i = 0; i < all.size() && i < cap && buf; ++i) buf[i] = all[i];
    if (count) *count = all.size();
  });
}

wspec_status wspec_matrix_create(int64_t q, size_t k, size_t n, const uint32_t* entries, wspec_matrix** out) {
  return guard([&] {
    need(entries, "entries");
    *need_out(out) = new wspec_matrix{wspec::generator_matrix::from_entries(
        wspec::prime_field(q), k, n, std::vector<wspec::symbol>(entries, entries + k * n))};
  });
}

wspec_status wspec_matrix_parse(const char* text, wspec_matrix** out) {
  return guard([&] {
    need(text, "text");
    *need_out(out) = new wspec_matrix{wspec::parse_matrix_file(text)};
  });
}

wspec_status wspec_matrix_format(const wspec_matrix* m, char** out) {
  return guard([&] { *need_out(out) = copy_string(wspec::format_matrix_file(need(m, "matrix").g)); });
}

void wspec_matrix_free(wspec_matrix* m) { delete m; }
int64_t wspec_matrix_q(const wspec_matrix* m) { return m ? m->g.field().order() : 0; }
size_t wspec_matrix_k(const wspec_matrix* m) { return m ? m->g.k() : 0; }
size_t wspec_matrix_n(const wspec_matrix* m) { return m ? m->g.n() : 0; }

wspec_status wspec_matrix_entries(const wspec_matrix* m, uint32_t* buf, size_t len) {
  return guard([&] {
    const auto e = need(m, "matrix").g.entries();
    if (len < e.size()) throw wspec::error(wspec::errc::invalid_argument, "buffer shorter than k*n");
    std::copy(e.begin(), e.end(), &out_ref(buf));
  });
}

wspec_status wspec_rank(int64_t q, size_t rows, size_t cols, const uint32_t* entries, size_t* out) {
  return guard([&] {
    if (rows != 0 && cols != 0) need(entries, "entries");
    out_ref(out) = wspec::matrix_rank(wspec::prime_field(q), rows, cols, {entries, rows * cols});
  });
}

wspec_status wspec_construct_general_fws(size_t k, const wspec_weight* w, int64_t n, wspec_multiset** out) {
  return guard([&] { *need_out(out) = new wspec_multiset{wspec::general_fws(k, need(w, "weight").wf, n)}; });
}

wspec_status wspec_construct_lee_mws(size_t k, int64_t q, wspec_multiset** out) {
  return guard([&] { *need_out(out) = new wspec_multiset{wspec::lee_mws(k, wspec::prime_field(q))}; });
}

wspec_status wspec_construct_manhattan_mws(size_t k, int64_t q, wspec_multiset** out) {
  return guard([&] { *need_out(out) = new wspec_multiset{wspec::manhattan_mws(k, wspec::prime_field(q))}; });
}

wspec_status wspec_construct_manhattan_fws(size_t k, int64_t q, int64_t n, wspec_multiset** out) {
  return guard([&] { *need_out(out) = new wspec_multiset{wspec::manhattan_fws(k, wspec::prime_field(q), n)}; });
}

wspec_status wspec_multiset_parse(int64_t q, size_t k, const char* text, wspec_multiset** out) {
  return guard([&] {
    need(text, "text");
    *need_out(out) = new wspec_multiset{wspec::parse_blocks(wspec::prime_field(q), k, text)};
  });
}

wspec_status wspec_multiset_format(const wspec_multiset* cm, char** out) {
  return guard([&] { *need_out(out) = copy_string(wspec::format_blocks(need(cm, "multiset").cm)); });
}

wspec_status wspec_multiset_expand(const wspec_multiset* cm, wspec_matrix** out) {
  return guard([&] { *need_out(out) = new wspec_matrix{wspec::expand(need(cm, "multiset").cm)}; });
}

int64_t wspec_multiset_length(const wspec_multiset* cm) {
  if (!cm) return 0;
  try {
    return cm->cm.length();
  } catch (const std::exception& e) {
    last_error = e.what();
    return -1;
  }
}

size_t wspec_multiset_block_count(const wspec_multiset* cm) { return cm ? cm->cm.blocks.size() : 0; }
void wspec_multiset_free(wspec_multiset* cm) { delete cm; }

wspec_status wspec_spectrum_compute(const wspec_matrix* m, const wspec_weight* w, wspec_spectrum** out) {
  return guard([&] {
    const auto& g = need(m, "matrix").g;
    const auto& wf = need(w, "weight").wf;
    auto s = wspec::spectrum(g, wf);
    const bool fws = wspec::is_fws(s, wf);
    const bool mws = wspec::is_mws(s, wf);
    const auto size = wspec::mws_spectrum_size(wf, g.k());
    *need_out(out) = new wspec_spectrum{std::move(s), fws, mws, size};
  });
}

void wspec_spectrum_free(wspec_spectrum* s) { delete s; }
size_t wspec_spectrum_size(const wspec_spectrum* s) { return s ? s->s.size() : 0; }

wspec_status wspec_spectrum_entry(const wspec_spectrum* s, size_t i, int64_t* weight, uint64_t* count) {
  return guard([&] {
    const auto& sp = need(s, "spectrum").s;
    if (i >= sp.weights.size()) throw wspec::error(wspec::errc::invalid_argument, "spectrum index out of range");
    if (weight) *weight = sp.weights[i];
    if (count) *count = sp.distribution.at(sp.weights[i]);
  });
}

uint64_t wspec_spectrum_max_multiplicity(const wspec_spectrum* s) { return s ? s->s.max_multiplicity() : 0; }
int wspec_spectrum_is_fws(const wspec_spectrum* s) { return s && s->fws ? 1 : 0; }
int wspec_spectrum_is_mws(const wspec_spectrum* s) { return s && s->mws ? 1 : 0; }
int64_t wspec_spectrum_mws_size(const wspec_spectrum* s) { return s ? s->mws_size : 0; }

wspec_status wspec_support_properties(const wspec_matrix* m, size_t* min_support, int* pairwise_intersecting) {
  return guard([&] {
    const auto p = wspec::support_properties(need(m, "matrix").g);
    if (min_support) *min_support = p.min_support;
    if (pairwise_intersecting) *pairwise_intersecting = p.pairwise_intersecting ? 1 : 0;
  });
}

wspec_status wspec_verify_basis_bound(const wspec_matrix* m, const wspec_weight* w, int* holds) {
  return guard([&] {
    out_ref(holds) = wspec::verify_basis_bound(need(m, "matrix").g, need(w, "weight").wf) ? 1 : 0;
  });
}

wspec_status wspec_bounds(wspec_quantity quantity, const wspec_weight* w, size_t k, int64_t n,
                          wspec_bound_report** out) {
  return guard([&] {
    const auto& wf = need(w, "weight").wf;
    wspec::bound_report r;
    switch (quantity) {
      case WSPEC_Q_MAX_SPECTRUM: r = wspec::spectrum_ceiling(wf, k); break;
      case WSPEC_Q_MAX_SPECTRUM_AT_LENGTH: r = wspec::spectrum_ceiling(wf, k, n); break;
      case WSPEC_Q_MIN_MWS_LENGTH: r = wspec::mws_min_length(wf, k); break;
      case WSPEC_Q_MAX_FWS_LENGTH: r = wspec::fws_max_length(wf, k); break;
      default: throw wspec::error(wspec::errc::invalid_argument, "unknown bound quantity");
    }
    *need_out(out) = new wspec_bound_report{std::move(r)};
  });
}

void wspec_bound_report_free(wspec_bound_report* r) { delete r; }

const char* wspec_bound_quantity_label(const wspec_bound_report* r) {
  return r ? wspec::quantity_label(r->r.quantity) : "";
}

int wspec_bound_get(const wspec_bound_report* r, wspec_bound_side side, int64_t* value, const char** source) {
  if (!r) return 0;
  const std::optional<wspec::bound_value>* v = nullptr;
  switch (side) {
    case WSPEC_BOUND_LOWER: v = &r->r.lower; break;
    case WSPEC_BOUND_UPPER: v = &r->r.upper; break;
    case WSPEC_BOUND_EXACT: v = &r->r.exact; break;
    default: return 0;
  }
  if (!v->has_value()) return 0;
  if (value) *value = (*v)->value;
  if (source) *source = (*v)->source.c_str();
  return 1;
}

const char* wspec_bound_note(const wspec_bound_report* r) { return r ? r->r.note.c_str() : ""; }

int wspec_sandwich_check(int64_t code_size, int64_t max_multiplicity, int64_t m, int64_t n, int64_t observed) {
  try {
    return wspec::sandwich_check(code_size, max_multiplicity, m, n, observed) ? 1 : 0;
  } catch (const std::exception& e) {
    last_error = e.what();
    return 0;
  }
}

void wspec_search_options_init(wspec_search_options* opts) {
  if (!opts) return;
  opts->budget = wspec::default_search_budget;
  opts->workers = 1;
  opts->reverse_order = 0;
}

wspec_status wspec_canonical_column_count(size_t k, const wspec_weight* w, size_t* out) {
  return guard([&] { out_ref(out) = wspec::canonical_columns(k, need(w, "weight").wf).size(); });
}

wspec_status wspec_search(int64_t n, size_t k, const wspec_weight* w, const wspec_search_options* opts,
                          wspec_search_result** out, uint64_t* required) {
  return guard([&] {
    const auto& wf = need(w, "weight").wf;
    need_out(out);
    try {
      *out = new wspec_search_result{wspec::optimal_spectrum(make_spec(n, k, wf, opts))};
    } catch (const wspec::budget_error& e) {
      if (required) *required = e.required().value_or(UINT64_MAX);
      throw;
    }
  });
}

void wspec_search_result_free(wspec_search_result* r) { delete r; }
int64_t wspec_search_l_value(const wspec_search_result* r) { return r ? r->r.l_value : 0; }
int wspec_search_mws_attained(const wspec_search_result* r) { return r && r->r.is_mws_attained ? 1 : 0; }
int wspec_search_fws_attained(const wspec_search_result* r) { return r && r->r.is_fws_attained ? 1 : 0; }
uint64_t wspec_search_examined(const wspec_search_result* r) { return r ? r->r.multisets_examined : 0; }
uint64_t wspec_search_rank_deficient(const wspec_search_result* r) { return r ? r->r.rank_deficient : 0; }
int wspec_search_exhaustive(const wspec_search_result* r) { return r && r->r.exhaustive ? 1 : 0; }
size_t wspec_search_witness_count(const wspec_search_result* r) { return r ? r->r.witnesses.size() : 0; }

wspec_status wspec_search_witness(const wspec_search_result* r, size_t i, wspec_multiset** out) {
  return guard([&] {
    const auto& res = need(r, "search result").r;
    if (i >= res.witnesses.size()) throw wspec::error(wspec::errc::invalid_argument, "witness index out of range");
    *need_out(out) = new wspec_multiset{res.witnesses[i]};
  });
}

wspec_status wspec_min_mws_length(size_t k, const wspec_weight* w, int64_t n_max, const wspec_search_options* opts,
                                  wspec_mws_probe** out) {
  return guard([&] {
    const auto& wf = need(w, "weight").wf;
    wspec_search_options o;
    wspec_search_options_init(&o);
    if (opts) o = *opts;
    auto probe = wspec::min_mws_length(k, wf, n_max, o.budget, o.workers, o.reverse_order != 0);
    auto* handle = new wspec_mws_probe{std::move(probe), {}};
    for (const auto& [n, r] : handle->p.per_n) handle->views.push_back(wspec_search_result{r});
    *need_out(out) = handle;
  });
}

void wspec_mws_probe_free(wspec_mws_probe* p) { delete p; }

int wspec_mws_probe_found(const wspec_mws_probe* p, int64_t* n) {
  if (!p || !p->p.found_n) return 0;
  if (n) *n = *p->p.found_n;
  return 1;
}

size_t wspec_mws_probe_count(const wspec_mws_probe* p) { return p ? p->p.per_n.size() : 0; }

const wspec_search_result* wspec_mws_probe_result(const wspec_mws_probe* p, size_t i, int64_t* n) {
  if (!p || i >= p->views.size()) return nullptr;
  if (n) *n = p->p.per_n[i].first;
  return &p->views[i];
}

int wspec_mws_probe_budget_stop(const wspec_mws_probe* p, int64_t* n, uint64_t* required) {
  if (!p || !p->p.budget_exceeded_at) return 0;
  if (n) *n = *p->p.budget_exceeded_at;
  if (required) *required = p->p.required.value_or(UINT64_MAX);
  return 1;
}

wspec_status wspec_table_reproduce(const char* name, const wspec_search_options* opts, wspec_table** out) {
  return guard([&] {
    need(name, "table name");
    wspec_search_options o;
    wspec_search_options_init(&o);
    if (opts) o = *opts;
    *need_out(out) = new wspec_table{wspec::reproduce_table(name, o.workers, o.budget)};
  });
}

void wspec_table_free(wspec_table* t) { delete t; }
size_t wspec_table_row_count(const wspec_table* t) { return t ? t->t.rows.size() : 0; }

wspec_status wspec_table_get_row(const wspec_table* t, size_t i, wspec_table_row* row) {
  return guard([&] {
    const auto& rows = need(t, "table").t.rows;
    if (i >= rows.size()) throw wspec::error(wspec::errc::invalid_argument, "row index out of range");
    const auto& r = rows[i];
    auto& o = out_ref(row);
    o.label = r.label.c_str();
    o.n = r.n;
    o.k = r.k;
    o.q = r.q;
    o.published = r.published;
    o.computed = r.computed;
    o.published_mws = r.published_mws ? (*r.published_mws ? 1 : 0) : -1;
    o.published_fws = r.published_fws ? (*r.published_fws ? 1 : 0) : -1;
    o.computed_mws = r.computed_mws ? 1 : 0;
    o.computed_fws = r.computed_fws ? 1 : 0;
    o.status = static_cast<wspec_row_status>(r.status);
    o.note = r.note.c_str();
  });
}

int wspec_table_ok(const wspec_table* t) { return t && t->t.ok() ? 1 : 0; }

const char* wspec_row_status_name(wspec_row_status s) {
  return wspec::row_status_name(static_cast<wspec::row_status>(s));
}

}  // extern "C"
