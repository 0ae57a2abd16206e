// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact rational equality; the only numeric tolerance is the census
// wall-clock limit of 120 s.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bsdecomp/census.hpp"
#include "bsdecomp/cli.hpp"
#include "bsdecomp/closed_forms.hpp"
#include "bsdecomp/io.hpp"
#include "bsdecomp/shuffle.hpp"
#include "support.hpp"

using namespace bsdecomp;
using testing::Gen;

namespace {

using Rows = std::vector<std::string>;

const Rows kGrid3457 = {
    "12 . . . .", ". . . . .", ". 2 . . .",  ". 5 . . .",  ". 8 . . .",   ". . 1 . .",
    ". 12 3 . .", ". . 6 . .", ". . 9 . .",  ". . 11 4 .", ". . 12 . .",  ". . . 7 .",
    ". . . 10 .", ". . . 12 .", ". . . . .", ". . . . 12",
};
const Rows kGrid1248 = {
    "12 1 . . .", ". 3 2 . .",  ". . . . .",  ". 7 4 . .",   ". . 6 5 .",  ". . . . .",
    ". . . . .",  ". 12 8 . .", ". . 10 9 .", ". . . . .",   ". . 12 11 .", ". . . 12 12",
};
const Rows kGrid4579 = {
    "8 . . . .", ". . . . .", ". . . . .", ". 1 . . .", ". 3 . . .", ". . . . .",
    ". 6 . . .", ". . 1 . .", ". 8 . . .", ". . 2 . .", ". . 4 . .", ". . 6 . .",
    ". . 7 . .", ". . . 2 .", ". . 8 . .", ". . . 5 .", ". . . . .", ". . . 7 .",
    ". . . 8 .", ". . . . .", ". . . . .", ". . . . 8",
};

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

int failures = 0;

void criterion(int number, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = fail(std::string("threw: ") + e.what());
  }
  if (!o.passed) ++failures;
  std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << number << ": " << title;
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << '\n';
}

std::vector<PureTerm> terms(std::initializer_list<std::pair<long, DegreeSequence>> list) {
  std::vector<PureTerm> out;
  for (const auto& [c, d] : list) out.push_back(PureTerm{Rational(c), d});
  return out;
}

Rows grid_rows(const CIType& t) {
  Rows rows;
  for (const auto& row : elimination_grid(elimination_table(koszul_betti(t)))) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += ' ';
      line += row[i].value_or(".");
    }
    rows.push_back(line);
  }
  return rows;
}

template <class F>
void for_each_tuple(int n, int max_e, bool strict, F&& f) {
  std::vector<int> e;
  auto rec = [&](auto& self, int lo) -> void {
    if (static_cast<int>(e.size()) == n) {
      f(CIType(e));
      return;
    }
    for (int x = lo; x <= max_e; ++x) {
      e.push_back(x);
      self(self, strict ? x + 1 : x);
      e.pop_back();
    }
  };
  rec(rec, 1);
}

std::set<int> first_columns(const CIType& t) {
  std::set<int> cols;
  for (const auto& [c, it] : elimination_table(koszul_betti(t)).cells) {
    if (it == 1) cols.insert(c.i);
  }
  return cols;
}

const std::vector<std::pair<long, DegreeSequence>> kQuotientTerms = {
    {294, {0, 7, 9, 12, 16}}, {84, {0, 7, 10, 12, 16}}, {252, {0, 7, 10, 13, 16}},
    {84, {0, 7, 11, 12, 16}}, {294, {0, 7, 11, 14, 16}}};

// Empty string when the quotient of `base` by a degree-7 element rebuilds
// CI(2,3,4,7) and contains every expected term.
std::string quotient_mismatch(const PureDecomposition& base) {
  std::string out;
  if (expand(base) != koszul_betti(CIType({2, 3, 4}))) {
    out += "input does not sum to the (2,3,4) Koszul table; ";
  }
  PureSum sum = quotient_by_regular_element(base, 7);
  if (expand_pure_sum(sum) != koszul_betti(CIType({2, 3, 4, 7}))) {
    out += "expansion differs from the (2,3,4,7) Koszul table; ";
  }
  for (const auto& [c, d] : kQuotientTerms) {
    if (sum.coeff(d) != Rational(c)) {
      out += "coefficient of " + format_degrees(d) + " is " + sum.coeff(d).to_string() +
             ", expected " + std::to_string(c) + "; ";
    }
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "decompose --degrees 1,2,4,8 prints the 12 chain terms in order", [] {
    std::ostringstream out, err;
    int code = run_cli({"decompose", "--degrees", "1,2,4,8"}, out, err);
    const std::string expected = format_terms(terms(
        {{168, {0, 1, 3, 7, 15}}, {60, {0, 2, 3, 7, 15}}, {210, {0, 2, 5, 7, 15}},
         {30, {0, 4, 5, 7, 15}}, {60, {0, 4, 6, 7, 15}}, {240, {0, 4, 6, 11, 15}},
         {240, {0, 4, 9, 11, 15}}, {60, {0, 8, 9, 11, 15}}, {30, {0, 8, 10, 11, 15}},
         {210, {0, 8, 10, 13, 15}}, {60, {0, 8, 12, 13, 15}}, {168, {0, 8, 12, 14, 15}}}));
    if (code != 0) return fail("exit code " + std::to_string(code) + ": " + err.str());
    return out.str() == expected ? pass() : fail("output:\n" + out.str());
  });

  criterion(2, "CI(1,2,4,8) equals 64 times the sum over 24 orderings", [] {
    CIType t({1, 2, 4, 8});
    PureSum sum = ci_shuffle_decomposition(t);
    if (sum.size() != 24) return fail(std::to_string(sum.size()) + " terms");
    for (const auto& term : sum.terms()) {
      if (term.coeff != Rational(64)) return fail("coefficient " + term.coeff.to_string());
    }
    return expand_pure_sum(sum) == koszul_betti(t) ? pass() : fail("expansion differs");
  });

  criterion(3, "closed forms match greedy for all codim <= 3, e_i <= 8", [] {
    int checked = 0, bad = 0;
    std::string first_bad;
    for (int n = 1; n <= 3; ++n) {
      for_each_tuple(n, 8, false, [&](const CIType& t) {
        ++checked;
        if (!verify_closed_form(t)) {
          if (bad++ == 0) first_bad = format_terms(closed_form_decomposition(t).terms);
        }
      });
    }
    if (checked != 8 + 36 + 120) return fail(std::to_string(checked) + " tuples");
    return bad == 0 ? pass(std::to_string(checked) + " tuples")
                    : fail(std::to_string(bad) + " mismatches, first:\n" + first_bad);
  });

  criterion(4, "elimination tables of (3,4,5,7), (1,2,4,8), (4,5,7,9) match cell for cell", [] {
    std::string bad;
    if (grid_rows(CIType({3, 4, 5, 7})) != kGrid3457) bad += "(3,4,5,7) ";
    if (grid_rows(CIType({1, 2, 4, 8})) != kGrid1248) bad += "(1,2,4,8) ";
    if (grid_rows(CIType({4, 5, 7, 9})) != kGrid4579) bad += "(4,5,7,9) ";
    if (!bad.empty()) return fail("tables differ: " + bad);
    auto table = elimination_table(koszul_betti(CIType({4, 5, 7, 9})));
    std::map<int, int> per_iteration;
    for (const auto& [c, it] : table.cells) ++per_iteration[it];
    std::vector<int> multiple;
    for (const auto& [it, count] : per_iteration) {
      if (count >= 2) multiple.push_back(it);
    }
    if (table.iterations != 8) return fail("iterations " + std::to_string(table.iterations));
    return multiple == std::vector<int>{1, 2, 6, 7, 8} ? pass()
                                                       : fail("multiple eliminations differ");
  });

  criterion(5, "shuffle product of (0,3,5) and (0,1,6)", [] {
    PureSum sum = shuffle_product({DegreeSequence{0, 3, 5}, DegreeSequence{0, 1, 6}});
    auto expected = terms({{1, {0, 3, 5, 6, 11}}, {1, {0, 3, 4, 6, 11}}, {1, {0, 3, 4, 9, 11}},
                           {1, {0, 1, 4, 6, 11}}, {1, {0, 1, 4, 9, 11}}, {1, {0, 1, 6, 9, 11}}});
    if (sum.terms() != expected) return fail("terms:\n" + format_terms(sum.terms()));
    auto product = tensor(pure(DegreeSequence{0, 3, 5}), pure(DegreeSequence{0, 1, 6}));
    return expand_pure_sum(sum) == product ? pass() : fail("expansion differs");
  });

  // The printed input contains (0,4,5,9); the chain decomposition of the
  // (2,3,4) table has (0,4,6,9) there. Both are run, only the first is scored.
  criterion(6, "quotient of the printed (2,3,4) decomposition by a degree-7 element", [] {
    PureDecomposition printed{terms({{42, {0, 2, 5, 9}}, {12, {0, 3, 5, 9}}, {36, {0, 3, 6, 9}},
                                     {12, {0, 4, 5, 9}}, {42, {0, 4, 7, 9}}})};
    std::string bad = quotient_mismatch(printed);
    return bad.empty() ? pass() : fail(bad);
  });
  {
    auto base = greedy_decompose(koszul_betti(CIType({2, 3, 4}))).decomposition;
    std::string bad = quotient_mismatch(base);
    std::cout << "INFO  criterion 6 with the computed (2,3,4) decomposition: "
              << (bad.empty() ? "all conditions hold" : bad) << '\n';
  }

  criterion(7, "shuffle identity equals 1 on 1000 random inputs", [] {
    Gen gen(7001);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<OrderedSet> sets;
      const int r = gen.uniform(1, 3);
      for (int k = 0; k < r; ++k) sets.push_back(gen.ordered_set(4, 9));
      Rational v = shuffle_identity_check(sets);
      if (v != Rational(1)) return fail("trial " + std::to_string(trial) + ": " + v.to_string());
    }
    return pass();
  });

  criterion(8, "shuffle expansion equals convolution on 500 random pairs", [] {
    Gen gen(8001);
    for (int trial = 0; trial < 500; ++trial) {
      DegreeSequence a = gen.degree_sequence(5, -6, 12);
      DegreeSequence b = gen.degree_sequence(5, -6, 12);
      if (expand_pure_sum(shuffle_product({a, b})) != testing::convolve_dense(pure(a), pure(b))) {
        return fail(format_degrees(a) + " x " + format_degrees(b));
      }
    }
    return pass();
  });

  criterion(9, "symmetric greedy decompositions for all n <= 4, e_i <= 6", [] {
    int checked = 0;
    std::string bad;
    for (int n = 0; n <= 4; ++n) {
      for_each_tuple(n, 6, false, [&](const CIType& t) {
        ++checked;
        if (!verify_symmetric(greedy_decompose(koszul_betti(t)), t.regularity(), t.codim())) {
          bad += "(" + std::to_string(t.codim()) + "-tuple) ";
        }
      });
    }
    return bad.empty() ? pass(std::to_string(checked) + " tuples") : fail(bad);
  });

  criterion(10, "codim-4 first-elimination predicate, d <= 8, Multiple witness for d <= 20", [] {
    int checked = 0, bad = 0;
    for_each_tuple(4, 8, true, [&](const CIType& t) {
      ++checked;
      auto cols = first_columns(t);
      auto observed = cols == std::set<int>{1}   ? FirstElimination::Column1
                      : cols == std::set<int>{2} ? FirstElimination::Column2
                                                 : FirstElimination::Multiple;
      if (codim4_first_elimination(t) != observed) ++bad;
    });
    if (bad) return fail(std::to_string(bad) + " of " + std::to_string(checked) + " disagree");
    std::string witness;
    for_each_tuple(4, 20, true, [&](const CIType& t) {
      if (!witness.empty() || codim4_first_elimination(t) != FirstElimination::Multiple) return;
      if (first_columns(t).size() >= 2) {
        witness = format_degrees(DegreeSequence(t.degrees()));
      }
    });
    if (witness.empty()) return fail("no Multiple witness with d <= 20");
    return pass(std::to_string(checked) + " tuples; Multiple witness " + witness);
  });

  criterion(11, "census --codim 4 --max-degree 10 --strict: >= 8 signatures without multiple elimination", [] {
    std::ostringstream out, err;
    auto start = std::chrono::steady_clock::now();
    int code = run_cli({"census", "--codim", "4", "--max-degree", "10", "--strict"}, out, err);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (code != 0) return fail("exit code " + std::to_string(code));
    std::smatch m;
    std::string text = out.str();
    if (!std::regex_search(text, m, std::regex("signatures without multiple elimination: (\\d+)"))) {
      return fail("count missing from report");
    }
    int count = std::stoi(m[1]);
    std::ostringstream detail;
    detail << count << " signatures in " << seconds << " s";
    return count >= 8 && seconds < 120 ? pass(detail.str()) : fail(detail.str());
  });

  criterion(12, "greedy reconstruction with positive coefficients on 200 random tuples", [] {
    Gen gen(12001);
    for (int trial = 0; trial < 200; ++trial) {
      CIType t = gen.ci_type(5, 7, 1);
      Diagram k = koszul_betti(t);
      auto dec = greedy_decompose(k).decomposition;
      for (const auto& term : dec.terms) {
        if (term.coeff.sign() <= 0) return fail("nonpositive coefficient");
      }
      if (expand(dec) != k) return fail("trial " + std::to_string(trial));
    }
    return pass();
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
