#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sgpc/cli.hpp"
#include "sgpc/document.hpp"

using namespace sgpc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "sgpc_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string data(const char* name) { return std::string(SGPC_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("place asgc") {
  const auto out = (scratch() / "p6.json").string();
  const auto r = run({"place", "--p", "6", "--algorithm", "asgc", "--out", out});
  CHECK(r.code == 0);
  CHECK(has(r.out, "sources: 14"));
  CHECK(has(r.out, "lower_bound: 13"));
  const auto doc = read_document(out);
  CHECK(doc.placement.size() == 14);
  REQUIRE(doc.annotations.has_value());
  CHECK(doc.annotations->algorithm == "asgc");
  CHECK(doc.report->passed);
}

TEST_CASE("place exact") {
  const auto out = (scratch() / "p4.json").string();
  const auto r = run({"place", "--p", "4", "--algorithm", "exact", "--out", out});
  CHECK(r.code == 0);
  CHECK(has(r.out, "sources: 6"));
  CHECK(has(r.out, "exhausted: true"));
  const auto doc = read_document(out);
  REQUIRE(doc.search.has_value());
  CHECK(doc.search->exhausted);
  CHECK(doc.search->optimal_count == 6);
}

TEST_CASE("place preconditions and usage errors exit 2") {
  CHECK(run({"place", "--p", "5", "--algorithm", "asgc"}).code == 2);
  CHECK(run({"place", "--p", "9", "--algorithm", "exact"}).code == 2);
  CHECK(run({"place", "--p", "6", "--algorithm", "greedy"}).code == 2);
  CHECK(run({"place"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  const auto good = (scratch() / "v9.json").string();
  REQUIRE(run({"place", "--p", "9", "--out", good}).code == 0);
  auto r = run({"verify", "--instance", good, "--placement", good});
  CHECK(r.code == 0);
  CHECK(has(r.out, "passed: yes"));

  auto doc = read_document(good);
  doc.placement = doc.placement.without({1, 2});
  const auto broken = (scratch() / "v9_missing.json").string();
  write_file_atomic(broken, serialize(doc));
  r = run({"verify", "--instance", good, "--placement", broken});
  CHECK(r.code == 1);
  CHECK(has(r.out, "uncovered: (1,1)"));

  const auto text = slurp(good);
  const auto truncated = (scratch() / "v9_truncated.json").string();
  write_file_atomic(truncated, text.substr(0, text.size() / 2));
  r = run({"verify", "--instance", good, "--placement", truncated});
  CHECK(r.code == 2);
  CHECK(has(r.err, "invalid JSON"));
  CHECK(run({"verify", "--instance", (scratch() / "nope.json").string(), "--placement", good}).code == 2);
}

TEST_CASE("bounds") {
  const auto r = run({"bounds", "--p", "8"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "lower_bound: 22"));
  CHECK(has(r.out, "ratio_bound: 12/11"));
  CHECK(run({"bounds", "--p", "3"}).out == "lower_bound: 3\n");
  CHECK(run({"bounds", "--p", "0"}).code == 2);
}

TEST_CASE("reduce and certify") {
  auto r = run({"reduce", "--cnf", data("tiny.ot3")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "p: 21"));
  CHECK(has(r.out, "budget: 159"));
  CHECK(has(r.out, "bands: 6"));

  const auto inst = (scratch() / "pair_inst.json").string();
  const auto good = (scratch() / "pair_good.json").string();
  const auto bad = (scratch() / "pair_bad.json").string();
  CHECK(run({"reduce", "--cnf", data("pair.ot3"), "--out", inst}).code == 0);
  r = run({"reduce", "--cnf", data("pair.ot3"), "--assignment", "0100", "--out", good});
  CHECK(r.code == 0);
  CHECK(has(r.out, "certificate: accepted"));
  r = run({"reduce", "--cnf", data("pair.ot3"), "--assignment", "1100", "--out", bad});
  CHECK(r.code == 1);
  CHECK(has(r.out, "certificate: rejected"));

  r = run({"certify", "--instance", inst, "--placement", good, "--cnf", data("pair.ot3")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "assignment: 0100"));
  r = run({"certify", "--instance", inst, "--placement", bad, "--cnf", data("pair.ot3")});
  CHECK(r.code == 1);
  CHECK(has(r.out, "rejected:"));
  r = run({"certify", "--instance", inst, "--placement", good, "--cnf", data("tiny.ot3")});
  CHECK(r.code == 1);

  CHECK(run({"reduce", "--cnf", data("pair.ot3"), "--assignment", "01"}).code == 2);
  CHECK(run({"reduce", "--cnf", data("missing.ot3")}).code == 2);
  r = run({"reduce", "--cnf", data("five.ot3")});
  CHECK(has(r.out, "p: 33"));
  CHECK(has(r.out, "budget: 383"));
}

TEST_CASE("sweep and area") {
  auto r = run({"sweep", "--p", "9"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "covered: yes"));
  r = run({"sweep", "--p", "8", "--steps", "4"});
  CHECK(r.code == 1);
  CHECK(has(r.out, "covered: no"));
  r = run({"area", "--p", "7", "--radius", "1.59"});
  CHECK(r.code == 0);
  r = run({"area", "--p", "7", "--radius", "1"});
  CHECK(r.code == 1);

  const auto dump = (scratch() / "sweep.json").string();
  r = run({"sweep", "--p", "8", "--steps", "4", "--out", dump});
  const auto doc = read_document(dump);
  REQUIRE(doc.coverage.has_value());
  CHECK(doc.coverage->mode == "sweep");
  CHECK(format_path(doc.coverage->path) == "NSSN");
  CHECK_FALSE(doc.coverage->uncovered_samples.empty());

  CHECK(run({"sweep", "--p", "9", "--steps", "9"}).code == 2);
  CHECK(run({"sweep", "--p", "9", "--path", "NQ"}).code == 2);
  CHECK(run({"sweep", "--p", "9", "--resolution", "fine"}).code == 2);
  CHECK(run({"sweep"}).code == 2);
}

TEST_CASE("optimal") {
  auto r = run({"optimal", "--width", "5", "--height", "5"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "optimal: 9"));
  CHECK(has(r.out, "exhausted: true"));
  r = run({"optimal", "--width", "4", "--height", "4", "--budget", "5"});
  CHECK(r.code == 1);
  CHECK(has(r.out, "infeasible"));
  CHECK(run({"optimal", "--width", "9", "--height", "9"}).code == 2);
}

TEST_CASE("render") {
  const auto doc = (scratch() / "r6.json").string();
  REQUIRE(run({"place", "--p", "6", "--out", doc}).code == 0);
  const auto a = run({"render", "--placement", doc, "--style", "ascii"});
  CHECK(a.code == 0);
  CHECK(a.out == "oooooo\nSSSSSS\noCoooo\noCoooo\nSSSSSS\noooooo\n");
  const auto svg = (scratch() / "r6.svg").string();
  CHECK(run({"render", "--placement", doc, "--style", "svg", "--out", svg}).code == 0);
  CHECK(has(slurp(svg), "<svg"));
  CHECK(run({"render", "--placement", doc, "--style", "png"}).code == 2);
}

TEST_CASE("repeated runs are byte-identical") {
  CHECK(run({"place", "--p", "11", "--out", "-"}).out == run({"place", "--p", "11", "--out", "-"}).out);
  CHECK(run({"optimal", "--width", "5", "--height", "4"}).out == run({"optimal", "--width", "5", "--height", "4"}).out);
}
