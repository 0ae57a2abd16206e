#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "bsdecomp/diagram.hpp"

namespace bsdecomp {

/// Strictly increasing integer tuple (d_0, ..., d_n), n >= 0.
class DegreeSequence {
 public:
  /// Throws NotADegreeSequence if empty or not strictly increasing.
  explicit DegreeSequence(std::vector<int> degrees);
  DegreeSequence(std::initializer_list<int> degrees)
      : DegreeSequence(std::vector<int>(degrees)) {}

  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  /// n, the index of the last entry.
  int length() const { return static_cast<int>(degrees_.size()) - 1; }
  int operator[](std::size_t i) const { return degrees_[i]; }
  int front() const { return degrees_.front(); }
  int back() const { return degrees_.back(); }

  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

/// Sequence of positive integers; repeats allowed, may be empty.
class OrderedSet {
 public:
  OrderedSet() = default;
  /// Throws InvalidArgument if an element is < 1.
  explicit OrderedSet(std::vector<int> elems);
  OrderedSet(std::initializer_list<int> elems) : OrderedSet(std::vector<int>(elems)) {}

  const std::vector<int>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  int operator[](std::size_t i) const { return elems_[i]; }

  friend auto operator<=>(const OrderedSet&, const OrderedSet&) = default;

 private:
  std::vector<int> elems_;
};

/// The normalized pure diagram: entry (i, d_i) = prod_{k != i} 1/|d_i - d_k|.
Diagram pure(const DegreeSequence& d);

/// Componentwise c <= d. Throws LengthMismatch.
bool leq(const DegreeSequence& c, const DegreeSequence& d);
/// c <= d and c != d.
bool strictly_less(const DegreeSequence& c, const DegreeSequence& d);

/// First differences (d_1 - d_0, ..., d_n - d_{n-1}).
OrderedSet delta(const DegreeSequence& d);

/// Partial sums (e, e + s_1, e + s_1 + s_2, ...).
DegreeSequence sigma(const OrderedSet& s, int e);
DegreeSequence sigma(std::span<const int> s, int e);

/// (s - d_n, ..., s - d_0).
DegreeSequence mirror(const DegreeSequence& d, int s);

/// Per-column minimal shifts of `a` for columns 0..width(a).
/// Throws EmptyColumn or NotADegreeSequence.
DegreeSequence min_degree_sequence(const Diagram& a);

}  // namespace bsdecomp
