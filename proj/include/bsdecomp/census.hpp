#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bsdecomp/closed_forms.hpp"
#include "bsdecomp/koszul.hpp"

namespace bsdecomp {

/// Column sets cleared by each greedy iteration, in iteration order. The
/// final iteration omits the outer columns 0 and n, which always clear last.
struct EliminationSignature {
  std::vector<std::vector<int>> steps;

  int iterations() const { return static_cast<int>(steps.size()); }
  /// Some iteration before the last clears more than one column.
  bool has_multiple_elimination() const;
  /// Iterations (1-based) that clear two or more cells, final one included.
  std::vector<int> multiple_iterations() const;
  /// Compact form, e.g. "[2][1][2,3]...".
  std::string to_string() const;

  friend auto operator<=>(const EliminationSignature&,
                          const EliminationSignature&) = default;
};

EliminationSignature signature_of(const CIType& t);

struct CensusOptions {
  int codim = 4;
  int max_degree = 10;
  bool strict = true;
  unsigned workers = 0;  // 0: hardware concurrency
  std::chrono::milliseconds time_budget{0};  // 0: unbounded
  std::size_t witness_cap = 5;
};

struct CensusRow {
  CIType type;
  EliminationSignature signature;
};

struct CensusReport {
  CensusOptions options;
  std::uint64_t swept = 0;
  std::uint64_t total = 0;  // tuples in range; > swept only when truncated
  bool truncated = false;

  struct Entry {
    std::uint64_t count = 0;
    std::vector<CIType> witnesses;
  };
  std::map<EliminationSignature, Entry> signatures;

  std::uint64_t multiple_tuples = 0;
  std::size_t signatures_without_multiple = 0;

  // codim 4, strict only
  std::uint64_t predicate_checked = 0;
  std::uint64_t predicate_agreed = 0;
  std::uint64_t predicate_multiple = 0;

  std::uint64_t reconstruction_checked = 0;
  std::uint64_t reconstruction_failed = 0;
  std::uint64_t non_integer_coefficients = 0;

  /// Per-tuple rows in sweep order.
  std::vector<CensusRow> rows;
};

/// All weakly (or strictly) increasing tuples of length `codim` in
/// 1..max_degree, in lexicographic order.
std::vector<CIType> census_tuples(int codim, int max_degree, bool strict);

/// Throws InvalidArgument when codim is not 4 or 5 or the range is empty.
CensusReport run_census(const CensusOptions& options);

std::string format_report_text(const CensusReport& report);
std::string format_report_tsv(const CensusReport& report);

}  // namespace bsdecomp
