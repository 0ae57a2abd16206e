#pragma once

#include <compare>
#include <map>
#include <optional>
#include <utility>

#include "bsdecomp/rational.hpp"

namespace bsdecomp {

/// Position in a Betti diagram: homological index i >= 0, internal degree j.
struct Cell {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Finite-support element of V = (+)_i (+)_j Q.
///
/// Stored sparsely; zero entries are never stored. Diagrams are immutable
/// values: every operation below returns a new diagram.
class Diagram {
 public:
  using Entries = std::map<Cell, Rational>;

  Diagram() = default;
  /// Zero values are dropped. Throws InvalidArgument on a negative index i.
  explicit Diagram(Entries entries);

  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Entry at (i, j); zero when absent.
  Rational at(int i, int j) const;
  Rational at(Cell c) const { return at(c.i, c.j); }
  bool contains(Cell c) const { return entries_.contains(c); }

  /// Largest stored homological index, or -1 for the empty diagram.
  int width() const;
  /// max(j - i) over stored entries.
  std::optional<int> regularity() const;
  /// Smallest stored row index j - i (top row in the grid display).
  std::optional<int> min_row() const;
  std::optional<int> min_shift(int i) const;
  std::optional<int> max_shift(int i) const;

  bool all_nonnegative() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Entries entries_;
};

Diagram add(const Diagram& a, const Diagram& b);
Diagram scale(const Rational& q, const Diagram& a);
/// a - b.
Diagram subtract(const Diagram& a, const Diagram& b);

/// (D*)_{i,j} = D_{n-i,-j}. Requires n >= width(a).
Diagram dual(const Diagram& a, int n);

/// D(r)_{i,j} = D_{i,r+j}.
Diagram twist(const Diagram& a, int r);

inline bool equals(const Diagram& a, const Diagram& b) { return a == b; }

inline Diagram operator+(const Diagram& a, const Diagram& b) { return add(a, b); }
inline Diagram operator-(const Diagram& a, const Diagram& b) { return subtract(a, b); }
inline Diagram operator*(const Rational& q, const Diagram& a) { return scale(q, a); }

}  // namespace bsdecomp
