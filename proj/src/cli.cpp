#include "bsdecomp/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "bsdecomp/census.hpp"
#include "bsdecomp/closed_forms.hpp"
#include "bsdecomp/errors.hpp"
#include "bsdecomp/io.hpp"
#include "bsdecomp/koszul.hpp"
#include "bsdecomp/reference.hpp"
#include "bsdecomp/shuffle.hpp"

namespace bsdecomp {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string degrees;
  std::vector<std::string> inputs;
  std::vector<std::string> seqs;
  bool elim_table = false;
  int codim = 4;
  int max_degree = 10;
  bool strict = false;
  std::string format = "text";
  std::optional<std::uint64_t> shuffle_cap;
  int by = 0;
  unsigned workers = 0;
  double time_budget = 0;
};

CIType degrees_of(const Options& o) { return CIType(parse_int_list(o.degrees)); }

// Diagram from exactly one of --degrees / --in.
Diagram input_diagram(const Options& o, const CLI::App& cmd) {
  const bool has_degrees = cmd.count("--degrees") > 0;
  if (has_degrees == !o.inputs.empty() || o.inputs.size() > 1) {
    throw UsageError(cmd.get_name() + ": give exactly one of --degrees or --in");
  }
  return has_degrees ? koszul_betti(degrees_of(o)) : read_betti_file(o.inputs.front());
}

std::uint64_t cap_of(const Options& o) { return o.shuffle_cap.value_or(default_shuffle_cap()); }

void require_degrees(const CLI::App& cmd) {
  if (cmd.count("--degrees") == 0) throw UsageError(cmd.get_name() + ": --degrees is required");
}

void report_error(const Error& e, std::ostream& err) {
  err << e.name() << ": " << e.what() << '\n';
  if (const auto* cone = dynamic_cast<const NotInCone*>(&e)) {
    err << "partial decomposition (" << cone->partial().decomposition.size() << " terms):\n"
        << format_terms(cone->partial().decomposition.terms);
    err << "residual:\n" << write_betti(cone->residual());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Betti diagram decompositions into pure diagrams", "bsdecomp"};
  app.require_subcommand(1);
  Options o;

  auto add_degrees = [&](CLI::App* cmd, const std::string& help) {
    cmd->add_option("--degrees", o.degrees, help);
  };
  auto add_input = [&](CLI::App* cmd) {
    add_degrees(cmd, "complete intersection generator degrees, e.g. 1,2,4,8");
    cmd->add_option("--in", o.inputs, "diagram file in BETTI/1 format");
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--shuffle-cap", o.shuffle_cap,
                    "refuse expansions with more shuffles than this "
                    "(default: BSDECOMP_SHUFFLE_CAP or 1000000)");
  };

  auto* ci_betti = app.add_subcommand("ci-betti", "Betti diagram of a complete intersection");
  add_degrees(ci_betti, "generator degrees");
  ci_betti->add_option("--format", o.format, "text (grid) or tsv (BETTI/1, default)")
      ->check(CLI::IsMember({"text", "tsv"}));

  auto* decompose = app.add_subcommand("decompose", "greedy chain decomposition into pure diagrams");
  add_input(decompose);
  decompose->add_flag("--elim-table", o.elim_table, "also print the elimination table");

  auto* elim = app.add_subcommand("elim-table", "elimination table of the greedy decomposition");
  add_input(elim);

  auto* closed = app.add_subcommand("closed-form", "closed-form decomposition, codimension 1 to 3");
  add_degrees(closed, "generator degrees");

  auto* predict = app.add_subcommand("predict-first-elim",
                                     "first eliminated column for degrees a<b<c<d");
  add_degrees(predict, "four strictly increasing degrees");

  auto* shuffle = app.add_subcommand("shuffle", "expand a product of pure diagrams");
  shuffle->add_option("--seq", o.seqs, "degree sequence factor, repeatable")->required();
  add_cap(shuffle);

  auto* ci_shuffle = app.add_subcommand("ci-shuffle", "multiplicity-weighted sum over orderings");
  add_degrees(ci_shuffle, "generator degrees");
  add_cap(ci_shuffle);

  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of diagrams");
  tensor_cmd->add_option("--in", o.inputs, "BETTI/1 files, repeatable")->required();

  auto* quotient = app.add_subcommand("quotient",
                                      "decomposition after quotienting by a regular element");
  add_input(quotient);
  quotient->add_option("--by", o.by, "degree of the regular element")->required();
  add_cap(quotient);

  auto* census = app.add_subcommand("census", "sweep elimination orders of complete intersections");
  census->add_option("--codim", o.codim, "4 or 5")->check(CLI::IsMember({4, 5}));
  census->add_option("--max-degree", o.max_degree, "largest generator degree");
  census->add_flag("--strict", o.strict, "only strictly increasing degree tuples");
  census->add_option("--format", o.format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));
  census->add_option("--workers", o.workers, "worker threads (0: all cores)");
  census->add_option("--time-budget", o.time_budget, "stop after this many seconds (0: none)");

  auto* verify = app.add_subcommand("verify-paper", "recompute the published worked examples");

  std::vector<const char*> argv{"bsdecomp"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ci_betti->parsed()) {
      require_degrees(*ci_betti);
      auto d = koszul_betti(degrees_of(o));
      out << (o.format == "text" && ci_betti->count("--format") ? render_diagram(d) : write_betti(d));
    } else if (decompose->parsed()) {
      auto trace = greedy_decompose(input_diagram(o, *decompose));
      out << format_terms(trace.decomposition.terms);
      if (o.elim_table) out << '\n' << render_elimination_table(trace.table);
    } else if (elim->parsed()) {
      out << render_elimination_table(elimination_table(input_diagram(o, *elim)));
    } else if (closed->parsed()) {
      require_degrees(*closed);
      out << format_terms(closed_form_decomposition(degrees_of(o)).terms);
    } else if (predict->parsed()) {
      require_degrees(*predict);
      out << to_string(codim4_first_elimination(degrees_of(o))) << '\n';
    } else if (shuffle->parsed()) {
      std::vector<DegreeSequence> ds;
      for (const auto& s : o.seqs) ds.push_back(parse_degrees(s));
      out << format_terms(shuffle_product(ds, cap_of(o)).terms());
    } else if (ci_shuffle->parsed()) {
      require_degrees(*ci_shuffle);
      out << format_terms(ci_shuffle_decomposition(degrees_of(o), cap_of(o)).terms());
    } else if (tensor_cmd->parsed()) {
      Diagram product(Diagram::Entries{{{0, 0}, Rational(1)}});
      for (const auto& path : o.inputs) product = tensor(product, read_betti_file(path));
      out << write_betti(product);
    } else if (quotient->parsed()) {
      auto base = greedy_decompose(input_diagram(o, *quotient)).decomposition;
      out << format_terms(quotient_by_regular_element(base, o.by, cap_of(o)).terms());
    } else if (census->parsed()) {
      CensusOptions opts;
      opts.codim = o.codim;
      opts.max_degree = o.max_degree;
      opts.strict = o.strict;
      opts.workers = o.workers;
      opts.time_budget = std::chrono::milliseconds(static_cast<long>(o.time_budget * 1000));
      auto report = run_census(opts);
      out << (o.format == "tsv" ? format_report_tsv(report) : format_report_text(report));
    } else if (verify->parsed()) {
      int failed = 0;
      for (const auto& r : run_reference_checks()) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name << '\n';
        if (!r.passed) {
          out << "      " << r.detail << '\n';
          ++failed;
        }
      }
      out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
      return failed == 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    report_error(e, err);
    return 1;
  }
  return 0;
}

}  // namespace bsdecomp
