// wspec command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wspec/wspec.h"

using json = nlohmann::json;

namespace {

template <class T, void (*Free)(T*)>
struct handle_deleter {
  void operator()(T* p) const { Free(p); }
};

using weight_ptr = std::unique_ptr<wspec_weight, handle_deleter<wspec_weight, wspec_weight_free>>;
using matrix_ptr = std::unique_ptr<wspec_matrix, handle_deleter<wspec_matrix, wspec_matrix_free>>;
using multiset_ptr = std::unique_ptr<wspec_multiset, handle_deleter<wspec_multiset, wspec_multiset_free>>;
using spectrum_ptr = std::unique_ptr<wspec_spectrum, handle_deleter<wspec_spectrum, wspec_spectrum_free>>;
using bounds_ptr = std::unique_ptr<wspec_bound_report, handle_deleter<wspec_bound_report, wspec_bound_report_free>>;
using search_ptr = std::unique_ptr<wspec_search_result, handle_deleter<wspec_search_result, wspec_search_result_free>>;
using probe_ptr = std::unique_ptr<wspec_mws_probe, handle_deleter<wspec_mws_probe, wspec_mws_probe_free>>;
using table_ptr = std::unique_ptr<wspec_table, handle_deleter<wspec_table, wspec_table_free>>;

struct cli_failure : std::runtime_error {
  wspec_status status;
  cli_failure(wspec_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(wspec_status s) {
  if (s != WSPEC_OK) throw cli_failure(s, wspec_last_error());
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  wspec_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cli_failure(WSPEC_ERR_INVALID_ARGUMENT, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct options {
  std::string weight = "lee";
  std::int64_t k = 0;
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::string family;
  unsigned jobs = 1;
  std::uint64_t budget = 0;
  std::string format = "text";
  std::string out = "matrix";
  std::string output_file;
  std::string file;
  std::string quantity;
  std::string table;
  std::int64_t n_max = 0;
  bool reverse = false;
  bool blocks = false;
};

weight_ptr make_weight(const std::string& spec, std::int64_t q) {
  wspec_weight* w = nullptr;
  const std::string prefix = "custom:";
  if (spec.rfind(prefix, 0) == 0) {
    auto text = read_file(spec.substr(prefix.size()));
    if (auto nl = text.find('\n'); nl != std::string::npos) text.resize(nl);
    check(wspec_weight_parse(text.c_str(), &w));
    weight_ptr out(w);
    if (q != 0 && wspec_weight_q(w) != q)
      throw cli_failure(WSPEC_ERR_INVALID_ARGUMENT, "custom weight is over Z_" + std::to_string(wspec_weight_q(w)) +
                                                        " but --q is " + std::to_string(q));
    return out;
  }
  check(wspec_weight_builtin(spec.c_str(), q, &w));
  return weight_ptr(w);
}

wspec_search_options search_options(const options& o) {
  wspec_search_options s;
  wspec_search_options_init(&s);
  if (o.budget) s.budget = o.budget;
  s.workers = o.jobs;
  s.reverse_order = o.reverse ? 1 : 0;
  return s;
}

json spectrum_json(const wspec_spectrum* s, bool with_distribution) {
  json weights = json::array();
  json dist = json::object();
  for (size_t i = 0; i < wspec_spectrum_size(s); ++i) {
    std::int64_t w = 0;
    std::uint64_t c = 0;
    check(wspec_spectrum_entry(s, i, &w, &c));
    weights.push_back(w);
    dist[std::to_string(w)] = c;
  }
  json out = {
      {"size", wspec_spectrum_size(s)},
      {"min", weights.empty() ? json(nullptr) : weights.front()},
      {"max", weights.empty() ? json(nullptr) : weights.back()},
      {"fws", wspec_spectrum_is_fws(s) != 0},
      {"mws", wspec_spectrum_is_mws(s) != 0},
      {"mws_size", wspec_spectrum_mws_size(s)},
      {"weights", weights},
  };
  if (with_distribution) out["distribution"] = dist;
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string compact_weights(const json& weights) {
  std::string s;
  for (size_t i = 0; i < weights.size(); ++i) s += (i ? " " : "") + std::to_string(weights[i].get<std::int64_t>());
  return s;
}

void emit(const options& o, json doc, double seconds, const std::string& text) {
  if (o.format == "doc") {
    doc["timing"] = {{"seconds", seconds}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

int cmd_construct(const options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  wspec_multiset* raw = nullptr;
  std::string weight_name = o.weight;
  std::string citation;
  if (o.family == "general-fws") {
    auto w = make_weight(o.weight, o.q);
    check(wspec_construct_general_fws(o.k, w.get(), o.n, &raw));
    citation = "unit-column FWS construction; k <= n <= ((m+1)^k-1)/m";
  } else if (o.family == "lee-mws") {
    check(wspec_construct_lee_mws(o.k, o.q, &raw));
    weight_name = "lee";
    citation = "Lee-MWS construction: e_1..e_k then e_i+e_j (i<j), multiplicities ((q+1)/2)^i";
  } else if (o.family == "manhattan-mws") {
    check(wspec_construct_manhattan_mws(o.k, o.q, &raw));
    weight_name = "manhattan";
    citation = "Manhattan-MWS construction [e_1 | e_2^q | ... | e_k^(q^(k-1))]";
  } else if (o.family == "manhattan-fws") {
    check(wspec_construct_manhattan_fws(o.k, o.q, o.n, &raw));
    weight_name = "manhattan";
    citation = "Manhattan FWS construction; k <= n <= (q^k-1)/(q-1)";
  } else {
    throw cli_failure(WSPEC_ERR_INVALID_ARGUMENT, "unknown family '" + o.family + "'");
  }
  multiset_ptr cm(raw);
  auto w = make_weight(weight_name, o.q);

  wspec_matrix* mraw = nullptr;
  check(wspec_multiset_expand(cm.get(), &mraw));
  matrix_ptr m(mraw);
  wspec_spectrum* sraw = nullptr;
  check(wspec_spectrum_compute(m.get(), w.get(), &sraw));
  spectrum_ptr s(sraw);

  char* body_raw = nullptr;
  if (o.out == "multiset")
    check(wspec_multiset_format(cm.get(), &body_raw));
  else
    check(wspec_matrix_format(m.get(), &body_raw));
  const auto body = take_string(body_raw);
  char* blocks_raw = nullptr;
  check(wspec_multiset_format(cm.get(), &blocks_raw));
  const auto blocks = take_string(blocks_raw);

  if (!o.output_file.empty()) {
    std::ofstream f(o.output_file, std::ios::binary);
    f << body;
    if (!f) throw cli_failure(WSPEC_ERR_INVALID_ARGUMENT, "cannot write '" + o.output_file + "'");
  }

  const auto summary = spectrum_json(s.get(), false);
  json doc = {
      {"command", "construct"},
      {"params", {{"family", o.family}, {"k", o.k}, {"q", o.q}, {"n", wspec_multiset_length(cm.get())},
                  {"weight", wspec_weight_name(w.get())}, {"out", o.out}}},
      {"citation", citation},
      {"values", {{"spectrum", summary}, {o.out, lines_of(body)}}},
      {"witnesses", lines_of(blocks)},
  };
  std::ostringstream text;
  if (o.output_file.empty()) text << body;
  text << "# " << o.family << " k=" << o.k << " q=" << o.q << " n=" << wspec_multiset_length(cm.get())
       << " weight=" << wspec_weight_name(w.get()) << '\n'
       << "# spectrum size " << summary["size"] << " (MWS size " << summary["mws_size"] << "), min " << summary["min"]
       << ", max " << summary["max"] << ", FWS " << (summary["fws"].get<bool>() ? "true" : "false") << ", MWS "
       << (summary["mws"].get<bool>() ? "true" : "false") << '\n';
  emit(o, doc, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), text.str());
  return 0;
}

int cmd_spectrum(const options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto text_in = read_file(o.file);
  matrix_ptr m;
  if (o.blocks) {
    // Block files carry "q k" on the first line, then "c1 .. ck ^ mult" lines.
    std::istringstream in(text_in);
    std::int64_t q = 0, k = 0;
    if (!(in >> q >> k)) throw cli_failure(WSPEC_ERR_PARSE, "line 1: expected 'q k' header");
    const auto rest = text_in.substr(text_in.find('\n') == std::string::npos ? text_in.size() : text_in.find('\n') + 1);
    wspec_multiset* cm = nullptr;
    check(wspec_multiset_parse(q, static_cast<size_t>(k), rest.c_str(), &cm));
    multiset_ptr owned(cm);
    wspec_matrix* raw = nullptr;
    check(wspec_multiset_expand(cm, &raw));
    m.reset(raw);
  } else {
    wspec_matrix* raw = nullptr;
    check(wspec_matrix_parse(text_in.c_str(), &raw));
    m.reset(raw);
  }
  const auto q = wspec_matrix_q(m.get());
  auto w = make_weight(o.weight, q);
  wspec_spectrum* sraw = nullptr;
  check(wspec_spectrum_compute(m.get(), w.get(), &sraw));
  spectrum_ptr s(sraw);

  std::int64_t wm = 0, delta = 0;
  int seg = 0;
  wspec_weight_constants(w.get(), &wm, &delta, &seg);
  const auto k = wspec_matrix_k(m.get());
  const auto n = static_cast<std::int64_t>(wspec_matrix_n(m.get()));
  std::int64_t code_size = 1;
  for (size_t i = 0; i < k; ++i) code_size *= q;
  const auto r = static_cast<std::int64_t>(wspec_spectrum_max_multiplicity(s.get()));
  const auto size = static_cast<std::int64_t>(wspec_spectrum_size(s.get()));
  const bool sandwich = wspec_sandwich_check(code_size, r, wm, n, size) != 0;

  auto summary = spectrum_json(s.get(), true);
  json doc = {
      {"command", "spectrum"},
      {"params", {{"file", o.file}, {"q", q}, {"k", k}, {"n", n}, {"weight", wspec_weight_name(w.get())}}},
      {"citation", "weight set of nonzero codewords; FWS = weight set of Z_q^n, MWS size = (q^k-1)/(q-1)*Delta"},
      {"values",
       {{"spectrum", summary},
        {"constants", {{"m", wm}, {"delta", delta}, {"initial_segment", seg != 0}}},
        {"sandwich", {{"code_size", code_size}, {"max_multiplicity", r}, {"lower", (code_size - 1 + r - 1) / r},
                      {"upper", wm * n}, {"holds", sandwich}}}}},
      {"witnesses", json::array()},
  };
  std::ostringstream text;
  text << "code [" << n << "," << k << "]_" << q << ", weight " << wspec_weight_name(w.get()) << " (m=" << wm
       << ", delta=" << delta << ")\n"
       << "spectrum size " << size << " of MWS size " << summary["mws_size"] << '\n'
       << "weights: " << compact_weights(summary["weights"]) << '\n'
       << "distribution:";
  for (auto& [weight, count] : summary["distribution"].items()) text << ' ' << weight << ':' << count;
  text << "\nFWS " << (summary["fws"].get<bool>() ? "true" : "false") << ", MWS "
       << (summary["mws"].get<bool>() ? "true" : "false") << '\n'
       << "sandwich " << (code_size - 1 + r - 1) / r << " <= " << size << " <= " << wm * n << ": "
       << (sandwich ? "holds" : "violated") << '\n';
  emit(o, doc, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), text.str());
  return 0;
}

json search_json(const wspec_search_result* r, std::vector<std::string>& witness_lines) {
  json witnesses = json::array();
  for (size_t i = 0; i < wspec_search_witness_count(r); ++i) {
    wspec_multiset* cm = nullptr;
    check(wspec_search_witness(r, i, &cm));
    multiset_ptr owned(cm);
    char* text = nullptr;
    check(wspec_multiset_format(cm, &text));
    auto lines = lines_of(take_string(text));
    witnesses.push_back(lines);
    std::string joined;
    for (const auto& l : lines) joined += (joined.empty() ? "" : " | ") + l;
    witness_lines.push_back(joined);
  }
  return {
      {"l_value", wspec_search_l_value(r)},
      {"mws_attained", wspec_search_mws_attained(r) != 0},
      {"fws_attained", wspec_search_fws_attained(r) != 0},
      {"multisets_examined", wspec_search_examined(r)},
      {"rank_deficient", wspec_search_rank_deficient(r)},
      {"exhaustive", wspec_search_exhaustive(r) != 0},
      {"witnesses", witnesses},
  };
}

int cmd_search(const options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  auto w = make_weight(o.weight, o.q);
  const auto opts = search_options(o);
  wspec_search_result* raw = nullptr;
  std::uint64_t required = 0;
  const auto st = wspec_search(o.n, o.k, w.get(), &opts, &raw, &required);
  if (st == WSPEC_ERR_BUDGET_EXCEEDED)
    throw cli_failure(st, std::string(wspec_last_error()) + " (raise --budget to at least " +
                              std::to_string(required) + " or shrink the case)");
  check(st);
  search_ptr r(raw);
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::vector<std::string> witness_lines;
  auto values = search_json(r.get(), witness_lines);
  json doc = {
      {"command", "search"},
      {"params", {{"n", o.n}, {"k", o.k}, {"q", wspec_weight_q(w.get())}, {"weight", wspec_weight_name(w.get())},
                  {"jobs", o.jobs}, {"budget", opts.budget}, {"reverse", o.reverse}}},
      {"citation", "exhaustive search over column multisets up to weight-preserving scalars"},
      {"values", values},
      {"witnesses", values["witnesses"]},
  };
  doc["values"].erase("witnesses");
  std::ostringstream text;
  text << "L(" << o.n << "," << o.k << "," << wspec_weight_q(w.get()) << ") = " << values["l_value"] << " under "
       << wspec_weight_name(w.get()) << " weight\n"
       << "MWS attained: " << (values["mws_attained"].get<bool>() ? "yes" : "no")
       << ", FWS attained: " << (values["fws_attained"].get<bool>() ? "yes" : "no") << '\n'
       << "multisets examined: " << values["multisets_examined"] << " (rank deficient "
       << values["rank_deficient"] << ")\n"
       << "witnesses (" << witness_lines.size() << "):\n";
  for (const auto& l : witness_lines) text << "  " << l << '\n';
  text << "time: " << secs << " s\n";
  emit(o, doc, secs, text.str());
  return 0;
}

int cmd_bounds(const options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  auto w = make_weight(o.weight, o.q);
  wspec_quantity quantity;
  if (o.quantity == "L")
    quantity = o.n > 0 ? WSPEC_Q_MAX_SPECTRUM_AT_LENGTH : WSPEC_Q_MAX_SPECTRUM;
  else if (o.quantity == "M")
    quantity = WSPEC_Q_MIN_MWS_LENGTH;
  else if (o.quantity == "N")
    quantity = WSPEC_Q_MAX_FWS_LENGTH;
  else
    throw cli_failure(WSPEC_ERR_INVALID_ARGUMENT, "quantity must be L, M or N");
  wspec_bound_report* raw = nullptr;
  check(wspec_bounds(quantity, w.get(), o.k, o.n, &raw));
  bounds_ptr r(raw);

  json values = json::object();
  json citation = json::object();
  std::ostringstream text;
  text << wspec_bound_quantity_label(r.get()) << " for " << wspec_weight_name(w.get()) << " weight, k=" << o.k
       << " q=" << wspec_weight_q(w.get());
  if (quantity == WSPEC_Q_MAX_SPECTRUM_AT_LENGTH) text << " n=" << o.n;
  text << '\n';
  const std::pair<wspec_bound_side, const char*> sides[] = {
      {WSPEC_BOUND_LOWER, "lower"}, {WSPEC_BOUND_UPPER, "upper"}, {WSPEC_BOUND_EXACT, "exact"}};
  for (auto [side, name] : sides) {
    std::int64_t v = 0;
    const char* src = nullptr;
    if (wspec_bound_get(r.get(), side, &v, &src)) {
      values[name] = v;
      citation[name] = src;
      text << "  " << name << ' ' << v << "  [" << src << "]\n";
    }
  }
  const std::string note = wspec_bound_note(r.get());
  if (!note.empty()) {
    values["note"] = note;
    text << "  note: " << note << '\n';
  }
  json doc = {
      {"command", "bounds"},
      {"params", {{"quantity", wspec_bound_quantity_label(r.get())}, {"weight", wspec_weight_name(w.get())},
                  {"k", o.k}, {"q", wspec_weight_q(w.get())}, {"n", o.n > 0 ? json(o.n) : json(nullptr)}}},
      {"citation", citation},
      {"values", values},
      {"witnesses", json::array()},
  };
  emit(o, doc, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), text.str());
  return 0;
}

const char* flag(int v) { return v < 0 ? "-" : (v ? "yes" : "no"); }

int cmd_table(const options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto opts = search_options(o);
  wspec_table* raw = nullptr;
  check(wspec_table_reproduce(o.table.c_str(), &opts, &raw));
  table_ptr t(raw);
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json rows = json::array();
  std::ostringstream text;
  text << "table " << o.table << '\n';
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %9s %8s %7s %7s  %s\n", "entry", "published", "computed", "MWS", "FWS",
                "status");
  text << line;
  for (size_t i = 0; i < wspec_table_row_count(t.get()); ++i) {
    wspec_table_row r;
    check(wspec_table_get_row(t.get(), i, &r));
    rows.push_back({{"label", r.label},
                    {"n", r.n},
                    {"k", r.k},
                    {"q", r.q},
                    {"published", r.published},
                    {"computed", r.computed},
                    {"published_mws", r.published_mws < 0 ? json(nullptr) : json(r.published_mws != 0)},
                    {"published_fws", r.published_fws < 0 ? json(nullptr) : json(r.published_fws != 0)},
                    {"computed_mws", r.computed_mws != 0},
                    {"computed_fws", r.computed_fws != 0},
                    {"status", wspec_row_status_name(r.status)},
                    {"note", r.note}});
    std::string mws = std::string(flag(r.published_mws)) + "/" + flag(r.computed_mws);
    std::string fws = std::string(flag(r.published_fws)) + "/" + flag(r.computed_fws);
    std::snprintf(line, sizeof line, "%-14s %9lld %8lld %7s %7s  %s\n", r.label, static_cast<long long>(r.published),
                  static_cast<long long>(r.computed), mws.c_str(), fws.c_str(), wspec_row_status_name(r.status));
    text << line;
    if (r.note && *r.note) text << "    note: " << r.note << '\n';
  }
  const bool ok = wspec_table_ok(t.get()) != 0;
  text << (ok ? "all rows match or are documented anomalies" : "UNEXPECTED MISMATCH") << '\n';
  text << "time: " << secs << " s\n";
  json doc = {
      {"command", "table"},
      {"params", {{"name", o.table}, {"jobs", o.jobs}}},
      {"citation", o.table == "lee-small" ? "published optimal Lee-weight spectrum sizes (exhaustive search)"
                                          : "published optimal Manhattan-weight spectrum sizes"},
      {"values", {{"rows", rows}, {"ok", ok}}},
      {"witnesses", json::array()},
  };
  emit(o, doc, secs, text.str());
  return ok ? 0 : 2;
}

int cmd_mws_length(const options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  auto w = make_weight(o.weight, o.q);
  const auto opts = search_options(o);
  wspec_mws_probe* raw = nullptr;
  check(wspec_min_mws_length(o.k, w.get(), o.n_max, &opts, &raw));
  probe_ptr p(raw);
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json per_n = json::array();
  std::vector<std::string> witness_lines;
  std::ostringstream text;
  text << "minimum MWS length, " << wspec_weight_name(w.get()) << " weight, k=" << o.k << " q="
       << wspec_weight_q(w.get()) << ", n <= " << o.n_max << '\n';
  for (size_t i = 0; i < wspec_mws_probe_count(p.get()); ++i) {
    std::int64_t n = 0;
    const auto* r = wspec_mws_probe_result(p.get(), i, &n);
    std::vector<std::string> lines;
    auto v = search_json(r, lines);
    v["n"] = n;
    if (!wspec_search_mws_attained(r)) v.erase("witnesses");
    else witness_lines = lines;
    per_n.push_back(v);
    text << "  n=" << n << ": L=" << wspec_search_l_value(r) << (wspec_search_mws_attained(r) ? " (MWS)" : "") << '\n';
  }
  std::int64_t found = 0;
  const bool has = wspec_mws_probe_found(p.get(), &found) != 0;
  std::int64_t stop_n = 0;
  std::uint64_t required = 0;
  const bool stopped = wspec_mws_probe_budget_stop(p.get(), &stop_n, &required) != 0;
  if (has) text << "found n = " << found << '\n';
  else text << "no MWS code up to n = " << o.n_max << '\n';
  if (stopped) text << "budget exceeded at n = " << stop_n << " (needs " << required << " multisets)\n";
  for (const auto& l : witness_lines) text << "  " << l << '\n';
  text << "time: " << secs << " s\n";
  json doc = {
      {"command", "mws-length"},
      {"params", {{"k", o.k}, {"q", wspec_weight_q(w.get())}, {"weight", wspec_weight_name(w.get())},
                  {"n_max", o.n_max}, {"jobs", o.jobs}, {"reverse", o.reverse}}},
      {"citation", "least n with an MWS code, searched upward from the lower bound"},
      {"values", {{"found_n", has ? json(found) : json(nullptr)},
                  {"per_n", per_n},
                  {"budget_exceeded_at", stopped ? json(stop_n) : json(nullptr)}}},
      {"witnesses", witness_lines},
  };
  emit(o, doc, secs, text.str());
  return stopped ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wspec: weight spectra of linear codes over prime fields"};
  app.require_subcommand(1);
  options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "doc"}));
  };
  auto add_weight = [&](CLI::App* sub) {
    sub->add_option("--weight", o.weight, "hamming | lee | manhattan | custom:FILE");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Search worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", o.budget, "Maximum multisets to enumerate");
    sub->add_flag("--reverse", o.reverse, "Enumerate multisets in reverse order");
  };

  auto* construct = app.add_subcommand("construct", "Build an explicit FWS or MWS generator matrix");
  construct->add_option("--family", o.family, "general-fws | lee-mws | manhattan-mws | manhattan-fws")->required();
  construct->add_option("--k", o.k, "Dimension")->required();
  construct->add_option("--q", o.q, "Prime field order")->required();
  construct->add_option("--n", o.n, "Length (general-fws, manhattan-fws)");
  construct->add_option("--out", o.out, "Body format")->check(CLI::IsMember({"matrix", "multiset"}));
  construct->add_option("-o,--output", o.output_file, "Write the matrix/multiset body to FILE");
  add_weight(construct);
  add_common(construct);

  auto* spectrum = app.add_subcommand("spectrum", "Weight spectrum, FWS/MWS verdicts of a matrix file");
  spectrum->add_option("file", o.file, "Matrix file ('q k n' header, k rows)")->required();
  spectrum->add_flag("--blocks", o.blocks, "FILE holds 'q k' then 'c1 .. ck ^ mult' lines");
  add_weight(spectrum);
  add_common(spectrum);

  auto* search = app.add_subcommand("search", "Exhaustive L(n,k,q) search");
  search->add_option("--n", o.n, "Length")->required();
  search->add_option("--k", o.k, "Dimension")->required();
  search->add_option("--q", o.q, "Prime field order");
  add_weight(search);
  add_search(search);
  add_common(search);

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds: L, M or N");
  bounds->add_option("quantity", o.quantity, "L | M | N")->required();
  bounds->add_option("--k", o.k, "Dimension")->required();
  bounds->add_option("--q", o.q, "Prime field order");
  bounds->add_option("--n", o.n, "Length (for L(n,k,q))");
  add_weight(bounds);
  add_common(bounds);

  auto* table = app.add_subcommand("table", "Recompute published tables by search");
  table->add_option("name", o.table, "lee-small | manhattan-small")->required();
  add_search(table);
  add_common(table);

  auto* probe = app.add_subcommand("mws-length", "Least n admitting an MWS code, by search");
  probe->add_option("--k", o.k, "Dimension")->required();
  probe->add_option("--q", o.q, "Prime field order");
  probe->add_option("--n-max", o.n_max, "Largest length to try")->required();
  add_weight(probe);
  add_search(probe);
  add_common(probe);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) return cmd_construct(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*search) return cmd_search(o);
    if (*bounds) return cmd_bounds(o);
    if (*table) return cmd_table(o);
    if (*probe) return cmd_mws_length(o);
  } catch (const cli_failure& e) {
    std::cerr << "error: " << wspec_status_name(e.status) << ": " << e.what() << '\n';
    return 1;
  }
  return 1;
}
