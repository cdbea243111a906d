#pragma once

#include <string>
#include <string_view>

#include "wspec/field.hpp"

namespace wspec {

/// Matrix file: "q k n" on the first line, then k lines of n integers in
/// [0, q-1], single-space separated and newline terminated.
std::string format_matrix_file(const generator_matrix& g);

/// Parses a matrix file. Malformed input raises errc::parse_error naming
/// the line and column; an invalid code raises errc::rank_deficient,
/// errc::zero_column or errc::not_prime.
generator_matrix parse_matrix_file(std::string_view text);

}  // namespace wspec
