#pragma once

#include <map>
#include <vector>

#include "bsdecomp/degree_sequence.hpp"
#include "bsdecomp/diagram.hpp"
#include "bsdecomp/errors.hpp"

namespace bsdecomp {

struct PureTerm {
  Rational coeff;
  DegreeSequence degrees;

  friend bool operator==(const PureTerm&, const PureTerm&) = default;
};

/// Terms of a chain decomposition, in subtraction order. Degree sequences
/// form a strictly increasing chain; coefficients are positive.
struct PureDecomposition {
  std::vector<PureTerm> terms;

  std::size_t size() const { return terms.size(); }
  friend bool operator==(const PureDecomposition&, const PureDecomposition&) = default;
};

/// sum coeff * pure(degrees).
Diagram expand(const PureDecomposition& dec);

/// Iteration (1-based) at which each entry of the source diagram first
/// became zero. Entries cleared in the same iteration share the index.
struct EliminationTable {
  std::map<Cell, int> cells;
  int iterations = 0;

  friend bool operator==(const EliminationTable&, const EliminationTable&) = default;
};

struct GreedyTrace {
  PureDecomposition decomposition;
  EliminationTable table;
};

/// The greedy decomposition ran into a residual that is not a positive
/// multiple of a pure diagram chain. Carries the partial trace.
class NotInCone : public Error {
 public:
  NotInCone(const std::string& reason, GreedyTrace partial, Diagram residual);

  const GreedyTrace& partial() const { return partial_; }
  const Diagram& residual() const { return residual_; }

 private:
  GreedyTrace partial_;
  Diagram residual_;
};

/// Totally ordered decomposition: repeatedly subtract the largest multiple of
/// the pure diagram on the residual's minimal degree sequence.
///
/// Throws InvalidArgument for empty input or negative entries, EmptyColumn if
/// a column of the input is empty, and NotInCone if the residual degenerates.
GreedyTrace greedy_decompose(const Diagram& a);

EliminationTable elimination_table(const Diagram& a);

/// True iff the k-th term mirrors the (s-1-k)-th: equal coefficients and
/// degree sequences related by d |-> (r+n - d_n, ..., r+n - d_0).
bool verify_symmetric(const GreedyTrace& trace, int r, int n);

}  // namespace bsdecomp
