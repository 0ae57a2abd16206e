#pragma once

#include <span>
#include <vector>

#include "bsdecomp/diagram.hpp"
#include "bsdecomp/rational.hpp"

namespace bsdecomp {

/// Type (e_1, ..., e_n) of a complete intersection, sorted weakly increasing.
class CIType {
 public:
  CIType() = default;
  /// Sorts. Throws NonPositiveDegree if any entry is < 1.
  explicit CIType(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  int codim() const { return static_cast<int>(degrees_.size()); }
  int operator[](std::size_t i) const { return degrees_[i]; }

  Rational multiplicity() const;
  int regularity() const;
  int socle_degree() const;
  bool strictly_increasing() const;

  friend auto operator<=>(const CIType&, const CIType&) = default;

 private:
  std::vector<int> degrees_;
};

CIType normalize(std::vector<int> degrees);

/// Betti diagram of the Koszul complex: entry (i, j) counts the i-subsets of
/// generators whose degrees sum to j.
Diagram koszul_betti(const CIType& t);

}  // namespace bsdecomp
