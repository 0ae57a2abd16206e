#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsdecomp/degree_sequence.hpp"
#include "bsdecomp/diagram.hpp"
#include "bsdecomp/greedy.hpp"
#include "bsdecomp/shuffle.hpp"

namespace bsdecomp {

// BETTI/1 text format:
//
//   BETTI 1
//   i<TAB>j<TAB>p/q
//   ...
//
// entries sorted by (i, j), no zeros, fractions in lowest terms.

std::string write_betti(const Diagram& d);
/// Throws ParseError with a line number.
Diagram read_betti(std::string_view text);
Diagram read_betti_file(const std::string& path);

/// "(0,2,3,4)".
std::string format_degrees(const DegreeSequence& d);
/// Accepts "(0,2,3,4)" or "0,2,3,4".
DegreeSequence parse_degrees(std::string_view text);
/// Comma-separated integers, parentheses optional.
std::vector<int> parse_int_list(std::string_view text);

/// One `coeff<TAB>(d_0,...,d_n)` line per term.
std::string format_terms(const std::vector<PureTerm>& terms);

using Grid = std::vector<std::vector<std::optional<std::string>>>;

/// Row r, column i holds cell (i, r + i), rows from min_row to regularity.
/// Empty for an empty diagram.
Grid diagram_grid(const Diagram& d);
Grid elimination_grid(const EliminationTable& table);
/// Column header, then `r:` labelled rows with `.` for empty cells.
std::string render_grid(const Grid& grid, int first_row);

std::string render_diagram(const Diagram& d);
std::string render_elimination_table(const EliminationTable& table);

}  // namespace bsdecomp
