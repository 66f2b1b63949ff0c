#pragma once

#include <string>
#include <string_view>

#include "rmg/magma.hpp"

namespace rmg {

/// Table file format (UTF-8, LF or CRLF):
///   line 1: order n
///   optional names line, detected by a non-numeric first token:
///     n whitespace-separated distinct names
///   n table rows of n entries each; entries are 0-based indices or
///   declared names (declared names win when a name looks like an index)
///   '#' starts a comment running to end of line, anywhere
Magma parse_table(std::string_view text);

/// Inverse of parse_table. The names line is emitted only when names are
/// present and expressible (first name non-numeric); entries are then
/// written as names, otherwise as indices.
std::string format_table(const Magma& m);

Magma read_table_file(const std::string& path);
void write_table_file(const std::string& path, const Magma& m);

}  // namespace rmg
