#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bsdecomp/degree_sequence.hpp"
#include "bsdecomp/diagram.hpp"
#include "bsdecomp/greedy.hpp"
#include "bsdecomp/koszul.hpp"

namespace bsdecomp {

/// Sum of pure diagrams with no ordering requirement. Terms keep first-seen
/// order; a degree sequence appears at most once.
class PureSum {
 public:
  PureSum() = default;

  /// Adds coeff to the term for d, appending it if new. Zero sums are kept
  /// out of the result.
  void add(const Rational& coeff, const DegreeSequence& d);

  const std::vector<PureTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of d, zero when absent.
  Rational coeff(const DegreeSequence& d) const;

  friend bool operator==(const PureSum&, const PureSum&) = default;

 private:
  std::vector<PureTerm> terms_;
  std::map<DegreeSequence, std::size_t> index_;
};

inline constexpr std::uint64_t kDefaultShuffleCap = 1'000'000;

/// Reads BSDECOMP_SHUFFLE_CAP if set, otherwise kDefaultShuffleCap.
std::uint64_t default_shuffle_cap();

/// Convolution: (a.b)_{i,j} = sum over i1+i2=i, j1+j2=j of a_{i1,j1} b_{i2,j2}.
Diagram tensor(const Diagram& a, const Diagram& b);

/// Number of order-preserving interleavings (a multinomial coefficient);
/// saturates at UINT64_MAX.
std::uint64_t shuffle_count(const std::vector<OrderedSet>& sets);

/// All interleavings, in lexicographic order of the source-choice vector.
/// Throws SizeExceeded above `cap`.
std::vector<std::vector<int>> shuffles(const std::vector<OrderedSet>& sets,
                                       std::uint64_t cap = default_shuffle_cap());

/// s_1 (s_1+s_2) ... (s_1+...+s_r); 1 for the empty set.
Rational prod_of(std::span<const int> s);
inline Rational prod_of(const OrderedSet& s) { return prod_of(s.elems()); }

/// prod pure(d^i) expanded as sum over shuffles sigma of the first
/// differences of pure(Sigma(sigma, sum d^i_0)). Throws InvalidArgument on an
/// empty list and SizeExceeded above `cap`.
PureSum shuffle_product(const std::vector<DegreeSequence>& ds,
                        std::uint64_t cap = default_shuffle_cap());

/// Decomposition of M/(f) from one of M, for f regular of degree e.
PureSum quotient_by_regular_element(const PureSum& dec, int e,
                                    std::uint64_t cap = default_shuffle_cap());
PureSum quotient_by_regular_element(const PureDecomposition& dec, int e,
                                    std::uint64_t cap = default_shuffle_cap());

/// Multiplicity times the sum over all orderings of the generator degrees.
PureSum ci_shuffle_decomposition(const CIType& t,
                                 std::uint64_t cap = default_shuffle_cap());

/// sum coeff * pure(d). Throws LengthMismatch on mixed lengths.
Diagram expand_pure_sum(const PureSum& s);

/// sum over shuffles sigma of Prod(A_1)...Prod(A_r) / Prod(sigma).
Rational shuffle_identity_check(const std::vector<OrderedSet>& sets,
                                std::uint64_t cap = default_shuffle_cap());

}  // namespace bsdecomp
