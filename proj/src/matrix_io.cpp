#include "wspec/matrix_io.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace wspec {

std::string format_matrix_file(const generator_matrix& g) {
  std::string out = std::to_string(g.field().order()) + " " + std::to_string(g.k()) + " " + std::to_string(g.n()) + "\n";
  for (std::size_t r = 0; r < g.k(); ++r) {
    for (std::size_t c = 0; c < g.n(); ++c) {
      if (c) out += ' ';
      out += std::to_string(g.at(r, c));
    }
    out += '\n';
  }
  return out;
}

namespace {

struct token {
  std::string_view text;
  std::size_t column;  // 1-based character position
};

std::vector<token> split(std::string_view line) {
  std::vector<token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) {
  throw error(errc::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::int64_t parse_int(const token& t, std::size_t line) {
  std::int64_t v = 0;
  const auto* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || ptr != end) fail(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  return v;
}

}  // namespace

generator_matrix parse_matrix_file(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty()) fail(1, 1, "empty input, expected header 'q k n'");

  const auto header = split(lines[0]);
  if (header.size() != 3) fail(1, header.empty() ? 1 : header.back().column, "header must be 'q k n'");
  const auto q = parse_int(header[0], 1);
  const auto k = parse_int(header[1], 1);
  const auto n = parse_int(header[2], 1);
  if (k < 1) fail(1, header[1].column, "k must be positive");
  if (n < 1) fail(1, header[2].column, "n must be positive");
  const prime_field field(q);

  std::vector<symbol> entries;
  entries.reserve(static_cast<std::size_t>(k * n));
  std::size_t line_no = 1;
  for (std::int64_t r = 0; r < k; ++r) {
    ++line_no;
    if (line_no > lines.size()) fail(line_no, 1, "missing matrix row " + std::to_string(r + 1));
    const auto toks = split(lines[line_no - 1]);
    if (static_cast<std::int64_t>(toks.size()) != n)
      fail(line_no, toks.empty() ? 1 : toks.back().column,
           "expected " + std::to_string(n) + " entries, got " + std::to_string(toks.size()));
    for (const auto& t : toks) {
      const auto v = parse_int(t, line_no);
      if (!field.contains(v)) fail(line_no, t.column, "entry " + std::to_string(v) + " outside [0, q-1]");
      entries.push_back(static_cast<symbol>(v));
    }
  }
  for (auto i = line_no; i < lines.size(); ++i)
    if (!split(lines[i]).empty()) fail(i + 1, 1, "unexpected content after the last matrix row");
  return generator_matrix::from_entries(field, static_cast<std::size_t>(k), static_cast<std::size_t>(n),
                                        std::move(entries));
}

}  // namespace wspec
