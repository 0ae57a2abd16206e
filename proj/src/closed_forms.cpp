#include "bsdecomp/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {

namespace {

// Drops zero coefficients and folds repeated degree sequences into their
// first occurrence.
PureDecomposition merged(std::vector<PureTerm> raw) {
  PureDecomposition out;
  for (auto& term : raw) {
    if (term.coeff.is_zero()) continue;
    auto it = std::find_if(out.terms.begin(), out.terms.end(),
                           [&](const PureTerm& t) { return t.degrees == term.degrees; });
    if (it != out.terms.end()) {
      it->coeff += term.coeff;
    } else {
      out.terms.push_back(std::move(term));
    }
  }
  return out;
}

}  // namespace

PureDecomposition closed_form_decomposition(const CIType& t) {
  const auto& e = t.degrees();
  switch (t.codim()) {
    case 1:
      return merged({{Rational(e[0]), DegreeSequence{0, e[0]}}});
    case 2: {
      const int s = e[0] + e[1];
      Rational m(e[0] * e[1]);
      return merged({{m, DegreeSequence{0, e[0], s}}, {m, DegreeSequence{0, e[1], s}}});
    }
    case 3: {
      const int e1 = e[0], e2 = e[1], e3 = e[2];
      const int s = e1 + e2 + e3;
      const long m = static_cast<long>(e1) * e2;
      return merged({
          {Rational(m * (e2 + e3)), DegreeSequence{0, e1, e1 + e2, s}},
          {Rational(m * (e3 - e1)), DegreeSequence{0, e2, e1 + e2, s}},
          {Rational(2 * m * (e1 + e3 - e2)), DegreeSequence{0, e2, e1 + e3, s}},
          {Rational(m * (e3 - e1)), DegreeSequence{0, e3, e1 + e3, s}},
          {Rational(m * (e2 + e3)), DegreeSequence{0, e3, e2 + e3, s}},
      });
    }
    default:
      throw Error(ErrorKind::UnsupportedCodimension,
                  "closed forms exist for codimension 1 to 3, got " + std::to_string(t.codim()));
  }
}

const char* to_string(FirstElimination f) {
  switch (f) {
    case FirstElimination::Column1: return "Column1";
    case FirstElimination::Column2: return "Column2";
    case FirstElimination::Multiple: return "Multiple";
  }
  return "?";
}

FirstElimination codim4_first_elimination(const CIType& t) {
  if (t.codim() != 4) {
    throw Error(ErrorKind::UnsupportedCodimension,
                "first-elimination predicate needs codimension 4, got " +
                    std::to_string(t.codim()));
  }
  if (!t.strictly_increasing()) {
    throw Error(ErrorKind::RequiresStrictDegrees, "degrees must satisfy a < b < c < d");
  }
  const long a = t[0], b = t[1], c = t[2], d = t[3];
  // The column-1 and column-2 ratios differ by b * (c(c+d) - a(b+2c+d)).
  const long lhs = a * (b + 2 * c + d);
  const long rhs = c * (c + d);
  if (lhs < rhs) return FirstElimination::Column1;
  if (lhs > rhs) return FirstElimination::Column2;
  return FirstElimination::Multiple;
}

bool verify_closed_form(const CIType& t) {
  auto by_degrees = [](const PureTerm& x, const PureTerm& y) { return x.degrees < y.degrees; };
  auto formula = closed_form_decomposition(t).terms;
  auto greedy = greedy_decompose(koszul_betti(t)).decomposition.terms;
  std::sort(formula.begin(), formula.end(), by_degrees);
  std::sort(greedy.begin(), greedy.end(), by_degrees);
  return formula == greedy;
}

}  // namespace bsdecomp
