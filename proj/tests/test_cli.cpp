#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bsdecomp/cli.hpp"

using namespace bsdecomp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return Run{code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("bsdecomp_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("decompose prints coefficient and degree lines") {
  Run r = run({"decompose", "--degrees", "1,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\t(0,1,3)\n2\t(0,2,3)\n");

  Run big = run({"decompose", "--degrees", "1,2,4,8"});
  CHECK(big.code == 0);
  CHECK(big.out.rfind("168\t(0,1,3,7,15)\n", 0) == 0);
  CHECK(std::count(big.out.begin(), big.out.end(), '\n') == 12);
}

TEST_CASE("ci-betti output feeds decompose unchanged") {
  Run betti = run({"ci-betti", "--degrees", "2,3,4,7"});
  REQUIRE(betti.code == 0);
  CHECK(betti.out.rfind("BETTI 1\n", 0) == 0);
  std::string path = temp_file("ci.betti", betti.out);
  Run from_file = run({"decompose", "--in", path});
  Run from_degrees = run({"decompose", "--degrees", "2,3,4,7"});
  CHECK(from_file.code == 0);
  CHECK(from_file.out == from_degrees.out);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"decompose"}).code == 2);
  CHECK(run({"census", "--codim", "3"}).code == 2);
  CHECK(run({"shuffle"}).code == 2);
}

TEST_CASE("domain errors exit with 1 and name the error") {
  Run bad = run({"decompose", "--degrees", "0,2"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NonPositiveDegree") != std::string::npos);

  std::string empty = temp_file("empty.betti", "BETTI 1\n");
  Run e = run({"decompose", "--in", empty});
  CHECK(e.code == 1);
  std::remove(empty.c_str());

  std::string outside = temp_file("outside.betti", "BETTI 1\n0\t0\t2\n1\t1\t1\n");
  Run o = run({"decompose", "--in", outside});
  CHECK(o.code == 1);
  CHECK(o.err.find("NotInCone") != std::string::npos);
  CHECK(o.err.find("residual") != std::string::npos);
  std::remove(outside.c_str());

  CHECK(run({"closed-form", "--degrees", "1,2,3,4"}).code == 1);
  CHECK(run({"predict-first-elim", "--degrees", "1,2,2,3"}).code == 1);
  CHECK(run({"decompose", "--in", "/nonexistent/file"}).code == 1);
}

TEST_CASE("other subcommands") {
  CHECK(run({"predict-first-elim", "--degrees", "4,5,7,9"}).out == "Multiple\n");
  CHECK(run({"closed-form", "--degrees", "3"}).out == "3\t(0,3)\n");
  CHECK(run({"ci-shuffle", "--degrees", "3,3"}).out == "18\t(0,3,6)\n");
  Run sh = run({"shuffle", "--seq", "0,3,5", "--seq", "0,1,6"});
  CHECK(sh.code == 0);
  CHECK(sh.out.rfind("1\t(0,3,5,6,11)\n", 0) == 0);
  CHECK(run({"shuffle", "--seq", "0,1,2,3", "--seq", "0,1,2,3", "--shuffle-cap", "3"}).code == 1);
  Run q = run({"quotient", "--degrees", "2,3,4", "--by", "7"});
  CHECK(q.code == 0);
  CHECK(std::count(q.out.begin(), q.out.end(), '\n') == 20);
  Run table = run({"elim-table", "--degrees", "1,2"});
  CHECK(table.code == 0);
  CHECK(table.out.find("0:") != std::string::npos);
  Run census = run({"census", "--codim", "4", "--max-degree", "6", "--strict", "--format", "tsv"});
  CHECK(census.code == 0);
  CHECK(census.out.find("(1,2,3,4)\t") != std::string::npos);
}
