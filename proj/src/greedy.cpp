#include "bsdecomp/greedy.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace bsdecomp {

namespace {

std::string degrees_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s + ")";
}

}  // namespace

Diagram expand(const PureDecomposition& dec) {
  Diagram sum;
  for (const auto& term : dec.terms) sum = add(sum, scale(term.coeff, pure(term.degrees)));
  return sum;
}

NotInCone::NotInCone(const std::string& reason, GreedyTrace partial, Diagram residual)
    : Error(ErrorKind::NotInCone, reason),
      partial_(std::move(partial)),
      residual_(std::move(residual)) {}

GreedyTrace greedy_decompose(const Diagram& a) {
  if (a.empty()) throw Error(ErrorKind::InvalidArgument, "cannot decompose the zero diagram");
  if (!a.all_nonnegative()) {
    throw Error(ErrorKind::InvalidArgument, "diagram has negative entries");
  }
  const int n = a.width();
  for (int i = 0; i <= n; ++i) {
    if (!a.min_shift(i)) {
      throw Error(ErrorKind::EmptyColumn, "column " + std::to_string(i) + " is empty");
    }
  }

  GreedyTrace trace;
  Diagram::Entries residual = a.entries();
  const int max_iterations = static_cast<int>(a.size()) + 1;

  auto fail = [&](const std::string& reason) {
    throw NotInCone(reason, trace, Diagram(residual));
  };

  for (int iteration = 1; !residual.empty(); ++iteration) {
    if (iteration > max_iterations) {
      throw std::logic_error("greedy decomposition made no progress");
    }

    // minimal shift per column, read off the ordered map
    std::vector<int> mins;
    mins.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
      auto it = residual.lower_bound(Cell{i, std::numeric_limits<int>::min()});
      if (it == residual.end() || it->first.i != i) {
        fail("column " + std::to_string(i) + " emptied at iteration " +
             std::to_string(iteration) + " while other entries remain");
      }
      if (!mins.empty() && it->first.j <= mins.back()) {
        mins.push_back(it->first.j);
        fail("minimal shifts " + degrees_text(mins) + "... are not strictly increasing at iteration " +
             std::to_string(iteration));
      }
      mins.push_back(it->first.j);
    }

    DegreeSequence d(mins);
    Diagram p = pure(d);

    std::optional<Rational> q;
    for (int i = 0; i <= n; ++i) {
      Cell c{i, d[i]};
      Rational ratio = residual.at(c) / p.at(c);
      if (!q || ratio < *q) q = ratio;
    }

    for (int i = 0; i <= n; ++i) {
      Cell c{i, d[i]};
      auto it = residual.find(c);
      it->second -= *q * p.at(c);
      if (it->second.is_zero()) {
        residual.erase(it);
        trace.table.cells.emplace(c, iteration);
      }
    }
    trace.decomposition.terms.push_back(PureTerm{*q, std::move(d)});
    trace.table.iterations = iteration;
  }
  return trace;
}

EliminationTable elimination_table(const Diagram& a) { return greedy_decompose(a).table; }

bool verify_symmetric(const GreedyTrace& trace, int r, int n) {
  const auto& terms = trace.decomposition.terms;
  const int socle = r + n;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& lhs = terms[k];
    const auto& rhs = terms[terms.size() - 1 - k];
    if (lhs.degrees.length() != n || rhs.degrees.length() != n) return false;
    if (lhs.coeff != rhs.coeff) return false;
    if (rhs.degrees != mirror(lhs.degrees, socle)) return false;
  }
  return true;
}

}  // namespace bsdecomp
