#include "bsdecomp/reference.hpp"

#include <exception>
#include <functional>
#include <sstream>

#include "bsdecomp/closed_forms.hpp"
#include "bsdecomp/io.hpp"
#include "bsdecomp/koszul.hpp"
#include "bsdecomp/shuffle.hpp"

namespace bsdecomp {

namespace {

using Rows = std::vector<std::string>;

// Published elimination tables, one string per grid row, `.` for blanks.
const Rows kTable3457 = {
    "12 . . . .", ". . . . .", ". 2 . . .",  ". 5 . . .",  ". 8 . . .",   ". . 1 . .",
    ". 12 3 . .", ". . 6 . .", ". . 9 . .",  ". . 11 4 .", ". . 12 . .",  ". . . 7 .",
    ". . . 10 .", ". . . 12 .", ". . . . .", ". . . . 12",
};
const Rows kTable1248 = {
    "12 1 . . .", ". 3 2 . .",  ". . . . .",  ". 7 4 . .",   ". . 6 5 .",  ". . . . .",
    ". . . . .",  ". 12 8 . .", ". . 10 9 .", ". . . . .",   ". . 12 11 .", ". . . 12 12",
};
const Rows kTable4579 = {
    "8 . . . .", ". . . . .", ". . . . .", ". 1 . . .", ". 3 . . .", ". . . . .",
    ". 6 . . .", ". . 1 . .", ". 8 . . .", ". . 2 . .", ". . 4 . .", ". . 6 . .",
    ". . 7 . .", ". . . 2 .", ". . 8 . .", ". . . 5 .", ". . . . .", ". . . 7 .",
    ". . . 8 .", ". . . . .", ". . . . .", ". . . . 8",
};

Rows grid_rows(const Grid& grid) {
  Rows rows;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += ' ';
      line += row[i].value_or(".");
    }
    rows.push_back(line);
  }
  return rows;
}

std::vector<PureTerm> terms(std::initializer_list<std::pair<long, DegreeSequence>> list) {
  std::vector<PureTerm> out;
  for (const auto& [c, d] : list) out.push_back(PureTerm{Rational(c), d});
  return out;
}

CheckResult check(const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    return CheckResult{name, failure.empty(), failure};
  } catch (const std::exception& e) {
    return CheckResult{name, false, std::string("threw: ") + e.what()};
  }
}

std::string table_mismatch(const CIType& t, const Rows& expected) {
  auto rows = grid_rows(elimination_grid(elimination_table(koszul_betti(t))));
  if (rows == expected) return {};
  std::ostringstream out;
  out << "elimination table differs; computed:";
  for (const auto& r : rows) out << " | " << r;
  return out.str();
}

}  // namespace

std::vector<CheckResult> run_reference_checks() {
  std::vector<CheckResult> results;

  results.push_back(check("pure diagram (0,2,3,4) entries 1/24 1/4 1/3 1/8", [] {
    Diagram expected(Diagram::Entries{{{0, 0}, Rational(1, 24)},
                                      {{1, 2}, Rational(1, 4)},
                                      {{2, 3}, Rational(1, 3)},
                                      {{3, 4}, Rational(1, 8)}});
    return pure(DegreeSequence{0, 2, 3, 4}) == expected ? "" : "entries differ";
  }));

  results.push_back(check("greedy decomposition of CI(1,2,4,8): 12 chain terms", [] {
    auto expected = terms({{168, {0, 1, 3, 7, 15}},  {60, {0, 2, 3, 7, 15}},
                           {210, {0, 2, 5, 7, 15}},  {30, {0, 4, 5, 7, 15}},
                           {60, {0, 4, 6, 7, 15}},   {240, {0, 4, 6, 11, 15}},
                           {240, {0, 4, 9, 11, 15}}, {60, {0, 8, 9, 11, 15}},
                           {30, {0, 8, 10, 11, 15}}, {210, {0, 8, 10, 13, 15}},
                           {60, {0, 8, 12, 13, 15}}, {168, {0, 8, 12, 14, 15}}});
    auto got = greedy_decompose(koszul_betti(CIType({1, 2, 4, 8}))).decomposition.terms;
    return got == expected ? "" : "computed:\n" + format_terms(got);
  }));

  results.push_back(check("CI(1,2,4,8) = 64 * sum over 24 orderings", [] {
    CIType t({1, 2, 4, 8});
    auto sum = ci_shuffle_decomposition(t);
    if (sum.size() != 24) return std::string("expected 24 terms, got ") + std::to_string(sum.size());
    for (const auto& term : sum.terms()) {
      if (term.coeff != Rational(64)) return "coefficient " + term.coeff.to_string();
    }
    if (expand_pure_sum(sum) != koszul_betti(t)) return std::string("expansion differs from Koszul table");
    Diagram product = pure(DegreeSequence{0, 1});
    for (int e : {2, 4, 8}) product = tensor(product, pure(DegreeSequence{0, e}));
    if (scale(Rational(64), product) != koszul_betti(t)) {
      return std::string("64 * pi<0,1>.pi<0,2>.pi<0,4>.pi<0,8> differs from Koszul table");
    }
    return std::string();
  }));

  results.push_back(check("closed form, codimension 1: e1 * pi<0,e1>", [] {
    auto got = closed_form_decomposition(CIType({3})).terms;
    return got == terms({{3, {0, 3}}}) && verify_closed_form(CIType({3})) ? "" : "mismatch";
  }));
  results.push_back(check("closed form, codimension 2: (1,2)", [] {
    auto got = closed_form_decomposition(CIType({1, 2})).terms;
    return got == terms({{2, {0, 1, 3}}, {2, {0, 2, 3}}}) && verify_closed_form(CIType({1, 2}))
               ? ""
               : "mismatch";
  }));
  results.push_back(check("closed form, codimension 3: (2,3,7)", [] {
    auto expected = terms({{60, {0, 2, 5, 12}}, {30, {0, 3, 5, 12}}, {72, {0, 3, 9, 12}},
                           {30, {0, 7, 9, 12}}, {60, {0, 7, 10, 12}}});
    auto got = closed_form_decomposition(CIType({2, 3, 7})).terms;
    return got == expected && verify_closed_form(CIType({2, 3, 7})) ? "" : "mismatch";
  }));

  results.push_back(check("symmetric decomposition of CI(1,2,4,8) and CI(2,3,7)", [] {
    for (const auto& t : {CIType({1, 2, 4, 8}), CIType({2, 3, 7})}) {
      auto trace = greedy_decompose(koszul_betti(t));
      if (!verify_symmetric(trace, t.regularity(), t.codim())) return std::string("asymmetric");
    }
    return std::string();
  }));

  results.push_back(check("elimination table of CI(3,4,5,7)", [] {
    return table_mismatch(CIType({3, 4, 5, 7}), kTable3457);
  }));
  results.push_back(check("elimination table of CI(1,2,4,8)", [] {
    return table_mismatch(CIType({1, 2, 4, 8}), kTable1248);
  }));
  results.push_back(check("elimination table of CI(4,5,7,9): 8 iterations", [] {
    auto failure = table_mismatch(CIType({4, 5, 7, 9}), kTable4579);
    if (!failure.empty()) return failure;
    auto table = elimination_table(koszul_betti(CIType({4, 5, 7, 9})));
    return table.iterations == 8 ? std::string() : "iterations " + std::to_string(table.iterations);
  }));
  results.push_back(check("first elimination column for the three codimension-4 tables", [] {
    bool ok = codim4_first_elimination(CIType({3, 4, 5, 7})) == FirstElimination::Column2 &&
              codim4_first_elimination(CIType({1, 2, 4, 8})) == FirstElimination::Column1 &&
              codim4_first_elimination(CIType({4, 5, 7, 9})) == FirstElimination::Multiple;
    return ok ? "" : "predicate disagrees with the tables";
  }));

  results.push_back(check("shuffle product pi<0,3,5> . pi<0,1,6>", [] {
    auto sum = shuffle_product({DegreeSequence{0, 3, 5}, DegreeSequence{0, 1, 6}});
    auto expected = terms({{1, {0, 3, 5, 6, 11}}, {1, {0, 3, 4, 6, 11}}, {1, {0, 3, 4, 9, 11}},
                           {1, {0, 1, 4, 6, 11}}, {1, {0, 1, 4, 9, 11}}, {1, {0, 1, 6, 9, 11}}});
    if (sum.terms() != expected) return std::string("terms differ:\n") + format_terms(sum.terms());
    auto product = tensor(pure(DegreeSequence{0, 3, 5}), pure(DegreeSequence{0, 1, 6}));
    return expand_pure_sum(sum) == product ? std::string() : std::string("expansion differs");
  }));

  results.push_back(check("shuffle identity on (3,2), (1,5)", [] {
    auto v = shuffle_identity_check({OrderedSet{3, 2}, OrderedSet{1, 5}});
    return v == Rational(1) ? std::string() : "value " + v.to_string();
  }));

  // The printed base decomposition lists pi<0,4,5,9> where the closed form
  // gives pi<0,4,6,9>; both are reported.
  results.push_back(check("quotient by v^7 from the printed decomposition of CI(2,3,4)", [] {
    PureDecomposition printed{terms({{42, {0, 2, 5, 9}}, {12, {0, 3, 5, 9}}, {36, {0, 3, 6, 9}},
                                     {12, {0, 4, 5, 9}}, {42, {0, 4, 7, 9}}})};
    auto sum = quotient_by_regular_element(printed, 7);
    std::string failure;
    if (expand(printed) != koszul_betti(CIType({2, 3, 4}))) {
      failure += "printed base decomposition does not sum to the CI(2,3,4) table; ";
    }
    if (expand_pure_sum(sum) != koszul_betti(CIType({2, 3, 4, 7}))) {
      failure += "quotient does not reconstruct the CI(2,3,4,7) table";
    }
    return failure;
  }));
  results.push_back(check("quotient by v^7 from the closed-form decomposition of CI(2,3,4)", [] {
    auto base = closed_form_decomposition(CIType({2, 3, 4}));
    auto sum = quotient_by_regular_element(base, 7);
    if (expand_pure_sum(sum) != koszul_betti(CIType({2, 3, 4, 7}))) {
      return std::string("quotient does not reconstruct the CI(2,3,4,7) table");
    }
    for (const auto& [c, d] : std::initializer_list<std::pair<long, DegreeSequence>>{
             {294, {0, 7, 9, 12, 16}}, {84, {0, 7, 10, 12, 16}}, {252, {0, 7, 10, 13, 16}},
             {294, {0, 7, 11, 14, 16}}}) {
      if (sum.coeff(d) != Rational(c)) return "missing " + std::to_string(c) + " * " + format_degrees(d);
    }
    return std::string();
  }));

  results.push_back(check("CI(2,3,4,7) = 168 * sum over 24 orderings", [] {
    CIType t({2, 3, 4, 7});
    auto sum = ci_shuffle_decomposition(t);
    if (sum.size() != 24) return std::string("expected 24 terms");
    for (const auto& term : sum.terms()) {
      if (term.coeff != Rational(168)) return "coefficient " + term.coeff.to_string();
    }
    return expand_pure_sum(sum) == koszul_betti(t) ? std::string() : std::string("expansion differs");
  }));

  return results;
}

}  // namespace bsdecomp
