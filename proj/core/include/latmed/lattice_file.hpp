#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "latmed/lattice.hpp"

namespace latmed {

/// Text form of a lattice:
///
///     lat 1
///     n <count>
///     name <token>      (optional)
///     covers
///     <a> <b>           (one line per cover pair, a covered by b)
///
/// Lines starting with '#' are comments and blank lines are ignored on input.
/// Fields are separated by single spaces. Output lists cover lines in
/// lexicographic order and ends every line with '\n', so printing a parsed
/// file reproduces the printed bytes exactly.
std::string print_lattice(const Lattice& lattice);

/// Throws ParseError for malformed text; lattice validation errors propagate
/// unchanged.
Lattice parse_lattice(std::string_view text);

Lattice read_lattice_file(const std::filesystem::path& path);
void write_lattice_file(const std::filesystem::path& path, const Lattice& lattice);

}  // namespace latmed
