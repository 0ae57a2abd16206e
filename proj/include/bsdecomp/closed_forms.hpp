#pragma once

#include "bsdecomp/greedy.hpp"
#include "bsdecomp/koszul.hpp"

namespace bsdecomp {

/// Explicit chain decomposition of a complete intersection of codimension
/// 1, 2 or 3. Zero terms are dropped and equal sequences merged.
/// Throws UnsupportedCodimension otherwise.
PureDecomposition closed_form_decomposition(const CIType& t);

enum class FirstElimination { Column1, Column2, Multiple };

const char* to_string(FirstElimination f);

/// Column cleared by the first greedy iteration on a codimension-4 complete
/// intersection of type a < b < c < d. Column 1 when a(b+2c+d) < c(c+d).
/// Throws RequiresStrictDegrees.
FirstElimination codim4_first_elimination(const CIType& t);

/// closed_form_decomposition(t) agrees with greedy_decompose(koszul_betti(t)).
bool verify_closed_form(const CIType& t);

}  // namespace bsdecomp
