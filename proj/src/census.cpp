#include "bsdecomp/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bsdecomp/errors.hpp"
#include "bsdecomp/greedy.hpp"
#include "bsdecomp/io.hpp"

namespace bsdecomp {

namespace {

std::string tuple_text(const CIType& t) {
  std::string s = "(";
  for (int k = 0; k < t.codim(); ++k) {
    if (k) s += ',';
    s += std::to_string(t[k]);
  }
  return s + ")";
}

EliminationSignature signature_from(const EliminationTable& table, int n) {
  std::vector<std::set<int>> columns(static_cast<std::size_t>(table.iterations));
  for (const auto& [cell, iteration] : table.cells) columns[iteration - 1].insert(cell.i);
  if (!columns.empty()) {
    columns.back().erase(0);
    columns.back().erase(n);
  }
  EliminationSignature sig;
  for (const auto& c : columns) sig.steps.emplace_back(c.begin(), c.end());
  return sig;
}

struct TupleResult {
  EliminationSignature signature;
  bool reconstruction_checked = false;
  bool reconstruction_ok = true;
  std::uint64_t non_integer = 0;
};

TupleResult analyse(const CIType& t, bool check_reconstruction) {
  Diagram betti = koszul_betti(t);
  GreedyTrace trace;
  try {
    trace = greedy_decompose(betti);
  } catch (const NotInCone& e) {
    throw std::logic_error("complete intersection " + tuple_text(t) +
                           " left the cone: " + e.what());
  }
  TupleResult result;
  result.signature = signature_from(trace.table, t.codim());
  for (const auto& term : trace.decomposition.terms) {
    if (!term.coeff.is_integer()) ++result.non_integer;
  }
  if (check_reconstruction) {
    result.reconstruction_checked = true;
    result.reconstruction_ok = expand(trace.decomposition) == betti;
  }
  return result;
}

std::optional<FirstElimination> observed_first(const EliminationSignature& sig) {
  if (sig.steps.empty()) return std::nullopt;
  const auto& first = sig.steps.front();
  if (first == std::vector<int>{1}) return FirstElimination::Column1;
  if (first == std::vector<int>{2}) return FirstElimination::Column2;
  if (first == std::vector<int>{1, 2}) return FirstElimination::Multiple;
  return std::nullopt;
}

}  // namespace

bool EliminationSignature::has_multiple_elimination() const {
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    if (steps[k].size() > 1) return true;
  }
  return false;
}

std::vector<int> EliminationSignature::multiple_iterations() const {
  std::vector<int> out;
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    if (steps[k].size() > 1) out.push_back(static_cast<int>(k) + 1);
  }
  // the last iteration clears columns 0 and n as well
  if (!steps.empty()) out.push_back(static_cast<int>(steps.size()));
  return out;
}

std::string EliminationSignature::to_string() const {
  std::string s;
  for (const auto& step : steps) {
    s += '[';
    for (std::size_t k = 0; k < step.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(step[k]);
    }
    s += ']';
  }
  return s;
}

EliminationSignature signature_of(const CIType& t) {
  if (t.codim() < 1) throw Error(ErrorKind::InvalidArgument, "signature needs codimension >= 1");
  return signature_from(elimination_table(koszul_betti(t)), t.codim());
}

std::vector<CIType> census_tuples(int codim, int max_degree, bool strict) {
  std::vector<CIType> out;
  if (codim < 1 || max_degree < 1) return out;
  std::vector<int> current(static_cast<std::size_t>(codim), 0);
  auto recurse = [&](auto& self, int pos, int lo) -> void {
    if (pos == codim) {
      out.emplace_back(current);
      return;
    }
    for (int v = lo; v <= max_degree; ++v) {
      current[pos] = v;
      self(self, pos + 1, strict ? v + 1 : v);
    }
  };
  recurse(recurse, 0, 1);
  return out;
}

CensusReport run_census(const CensusOptions& options) {
  if (options.codim != 4 && options.codim != 5) {
    throw Error(ErrorKind::InvalidArgument, "census supports codimension 4 or 5");
  }
  if (options.max_degree < 1 || (options.strict && options.max_degree < options.codim)) {
    throw Error(ErrorKind::InvalidArgument,
                "max degree " + std::to_string(options.max_degree) +
                    " leaves no tuples to sweep");
  }

  const auto tuples = census_tuples(options.codim, options.max_degree, options.strict);
  std::vector<std::optional<TupleResult>> results(tuples.size());

  const auto deadline = std::chrono::steady_clock::now() + options.time_budget;
  const bool bounded = options.time_budget.count() > 0;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      if (failed || (bounded && std::chrono::steady_clock::now() >= deadline)) return;
      const std::size_t k = next.fetch_add(1);
      if (k >= tuples.size()) return;
      try {
        results[k] = analyse(tuples[k], k % 100 == 0);
      } catch (const std::exception& e) {
        std::lock_guard lock(failure_mutex);
        failure = e.what();
        failed = true;
      }
    }
  };

  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, tuples.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failed) throw std::logic_error(failure);

  CensusReport report;
  report.options = options;
  report.total = tuples.size();
  const bool predicate = options.codim == 4 && options.strict;

  for (std::size_t k = 0; k < tuples.size(); ++k) {
    if (!results[k]) {
      report.truncated = true;
      break;
    }
    const auto& r = *results[k];
    ++report.swept;
    auto& entry = report.signatures[r.signature];
    ++entry.count;
    if (entry.witnesses.size() < options.witness_cap) entry.witnesses.push_back(tuples[k]);
    if (r.signature.has_multiple_elimination()) ++report.multiple_tuples;
    if (r.reconstruction_checked) {
      ++report.reconstruction_checked;
      if (!r.reconstruction_ok) ++report.reconstruction_failed;
    }
    report.non_integer_coefficients += r.non_integer;

    if (predicate) {
      const auto predicted = codim4_first_elimination(tuples[k]);
      ++report.predicate_checked;
      if (predicted == FirstElimination::Multiple) ++report.predicate_multiple;
      if (observed_first(r.signature) == predicted) ++report.predicate_agreed;
    }
    report.rows.push_back(CensusRow{tuples[k], r.signature});
  }

  report.signatures_without_multiple = static_cast<std::size_t>(
      std::count_if(report.signatures.begin(), report.signatures.end(),
                    [](const auto& kv) { return !kv.first.has_multiple_elimination(); }));
  return report;
}

std::string format_report_text(const CensusReport& report) {
  const auto& o = report.options;
  std::ostringstream out;
  out << "census: codim " << o.codim << ", degrees 1.." << o.max_degree << ", "
      << (o.strict ? "strictly" : "weakly") << " increasing\n";
  out << "tuples swept: " << report.swept << " of " << report.total
      << (report.truncated ? " (truncated by time budget)" : "") << '\n';
  out << "distinct signatures: " << report.signatures.size() << '\n';
  out << "signatures without multiple elimination: " << report.signatures_without_multiple << '\n';
  out << "tuples with multiple elimination: " << report.multiple_tuples << '\n';
  if (report.predicate_checked > 0) {
    out << "first-elimination predicate agreement: " << report.predicate_agreed << " / "
        << report.predicate_checked << " (Multiple predicted for " << report.predicate_multiple
        << ")\n";
  }
  out << "reconstruction spot checks: " << report.reconstruction_checked - report.reconstruction_failed
      << " passed, " << report.reconstruction_failed << " failed\n";
  out << "non-integer coefficients: " << report.non_integer_coefficients << '\n';
  out << '\n';
  out << "iterations\tcount\tmultiple\tsignature\twitnesses\n";
  for (const auto& [sig, entry] : report.signatures) {
    out << sig.iterations() << '\t' << entry.count << '\t'
        << (sig.has_multiple_elimination() ? "yes" : "no") << '\t' << sig.to_string() << '\t';
    for (std::size_t k = 0; k < entry.witnesses.size(); ++k) {
      if (k) out << ' ';
      out << tuple_text(entry.witnesses[k]);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_report_tsv(const CensusReport& report) {
  std::string out;
  for (const auto& row : report.rows) {
    out += tuple_text(row.type) + '\t' + std::to_string(row.signature.iterations()) + '\t' +
           row.signature.to_string() + '\t' +
           (row.signature.has_multiple_elimination() ? "yes" : "no") + '\n';
  }
  return out;
}

}  // namespace bsdecomp
