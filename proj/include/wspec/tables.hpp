#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wspec/search.hpp"

namespace wspec {

enum class row_status { match, documented_mismatch, mismatch };

const char* row_status_name(row_status s) noexcept;

struct table_row {
  std::string label;  // e.g. "L_L(3,2,5)"
  std::int64_t n = 0;  // 0 when the row is a max over lengths, L(k,q)
  std::size_t k = 0;
  std::uint32_t q = 0;
  std::int64_t published = 0;
  std::int64_t computed = 0;
  std::optional<bool> published_mws;
  std::optional<bool> published_fws;
  bool computed_mws = false;
  bool computed_fws = false;
  row_status status = row_status::match;
  std::string note;
};

struct table_report {
  std::string name;
  std::vector<table_row> rows;

  bool ok() const noexcept;  // no unexpected mismatch
};

/// Recomputes the desk-scale rows of the published Lee ("lee-small") or
/// Manhattan ("manhattan-small") tables by exhaustive search.
table_report reproduce_table(std::string_view name, unsigned workers = 1,
                             std::uint64_t budget = default_search_budget);

}  // namespace wspec
