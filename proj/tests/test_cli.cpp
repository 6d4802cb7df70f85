#include <doctest.h>
#include <cstdio>
#include <fstream>

#include <sstream>

#include "commands.hpp"

using endstool::json;
using endstool::Report;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = endstool::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string pairs = std::string(ENDS_TEST_DATA) + "/end_pairs.txt";

}  // namespace

TEST_CASE("report schema round trip") {
  const std::vector<std::vector<std::string>> commands = {
      {"ends", "estimate", "--group", "free(2)", "--rmax", "5"},
      {"ends", "metric", "--group", "free(2)", "--pairs", pairs, "--triples", "50"},
      {"ends", "holder", "--group", "free(2)", "--genset2", "a,ab", "--samples", "40"},
      {"verify", "coupme", "--factors", "cyclic(2),cyclic(3)", "--radius", "5", "--samples", "50"},
      {"verify", "biends", "--group", "free_product([cyclic(2), cyclic(2)])", "--set", "cone(a)", "--radius", "5"},
      {"verify", "cardbool", "--group", "free(2)", "--random", "5", "--radius", "4"},
  };
  for (const auto& args : commands) {
    CAPTURE(args[1]);
    const Report r = endstool::execute(args);
    const json j = r.to_json();
    const std::string once = j.dump(2);
    const std::string twice = Report::from_json(json::parse(once)).to_json().dump(2);
    CHECK(once == twice);
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == args[0] + " " + args[1]);
    // Refutations always carry witnesses.
    for (const auto& c : j["checks"]) {
      if (c["status"] == "refuted") CHECK_FALSE(c["witness"].is_null());
    }
  }
}

TEST_CASE("same seed, same bytes") {
  const std::vector<std::string> args = {"verify", "coupme", "--factors", "cyclic(2),cyclic(3),cyclic(4)",
                                         "--radius", "6", "--samples", "200", "--seed", "9", "--quiet"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err.empty());
  auto other = args;
  other[9] = "10";
  CHECK(invoke(other).out != a.out);

  const std::vector<std::string> metric = {"ends", "metric", "--group", "free(2)", "--pairs", pairs, "--quiet"};
  CHECK(invoke(metric).out == invoke(metric).out);
}

TEST_CASE("exit codes") {
  SUBCASE("verified") {
    const auto o = invoke({"verify", "commensurated", "--group", "free(2)", "--set", "cone(a*b)", "--radius", "4"});
    CHECK(o.code == 0);
    CHECK(json::parse(o.out)["checks"][0]["status"] == "verified_exact");
    CHECK(o.err.find("commensurated") != std::string::npos);  // human table on stderr
  }
  SUBCASE("refutation") {
    const auto o = invoke({"verify", "biends", "--group", "free_product([cyclic(2), cyclic(2)])", "--set", "cone(a)",
                           "--radius", "6", "--quiet"});
    CHECK(o.code == 1);
    const auto j = json::parse(o.out);
    CHECK(j["summary"]["exit_code"] == 1);
    CHECK(j["checks"][0]["witness"]["side"] == "right");
  }
  SUBCASE("usage errors") {
    const auto unknown = invoke({"ends", "estimate", "--group", "heisenberg(3)", "--rmax", "5"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("heisenberg") != std::string::npos);
    CHECK(unknown.out.empty());
    CHECK(invoke({"ends", "estimate", "--group", "free(2)", "--bogus"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"ends", "estimate", "--group", "free(2)", "--format", "xml"}).code == 2);
    CHECK(invoke({"verify", "cardbool", "--group", "free(2)", "--set", "cone(a)", "--radius", "3"}).code == 2);
    CHECK(invoke({"verify", "notame", "--chain", "sum_z2", "--N", "4"}).code == 2);
    CHECK(invoke({"ends", "estimate", "--group", "free(2)", "--rmax", "8", "--max-elements", "1000"}).code == 2);
  }
  SUBCASE("group-spec file") {
    const std::string path = "group_spec_test.txt";
    {
      std::ofstream f(path);
      f << "# two copies of Z/2\nfree_product([cyclic(2),\n              cyclic(2)])  # D-infinity\n";
    }
    const auto o = invoke({"ends", "estimate", "--group", "@" + path, "--rmax", "6", "--quiet"});
    CHECK(o.code == 0);
    CHECK(json::parse(o.out)["checks"][0]["detail"]["verdict"] == "two");
    std::remove(path.c_str());
    CHECK(invoke({"ends", "estimate", "--group", "@missing_file", "--rmax", "6"}).code == 2);
  }
  SUBCASE("help") { CHECK(invoke({"--help"}).code == 0); }
}

TEST_CASE("command outputs") {
  SUBCASE("estimates") {
    auto j = json::parse(invoke({"ends", "estimate", "--group", "free(2)", "--rmax", "6", "--quiet"}).out);
    CHECK(j["checks"][0]["detail"]["verdict"] == "many");
    CHECK(j["checks"][0]["detail"]["unbounded"] == json({12, 36, 108, 324}));
    j = json::parse(invoke({"ends", "estimate", "--group", "free_abelian(1)", "--rmax", "6", "--quiet"}).out);
    CHECK(j["checks"][0]["detail"]["verdict"] == "two");
  }
  SUBCASE("notame") {
    const auto o = invoke({"verify", "notame", "--chain", "sum_z2", "--N", "12", "--g", "e2", "--quiet"});
    CHECK(o.code == 0);
    CHECK(json::parse(o.out)["parameters"]["N"] == 12);
  }
  SUBCASE("csv") {
    const auto o = invoke({"ends", "estimate", "--group", "free(2)", "--rmax", "5", "--format", "csv", "--quiet"});
    std::istringstream in(o.out);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "inner_radius,outer_radius,unbounded,total");
    CHECK(row == "1,3,12,12");
    const auto checks = invoke({"verify", "commensurated", "--group", "free(2)", "--set", "cone(a)", "--format", "csv",
                                "--quiet"});
    CHECK(checks.out.rfind("check,status,witness\ncommensurated,verified_exact,", 0) == 0);
  }
  SUBCASE("tree export") {
    const std::string path = "tree_edges_test.txt";
    const auto o = invoke({"verify", "tree-disjoint", "--H", "cyclic(2)", "--L", "cyclic(3)", "--depth", "4", "--radius",
                           "3", "--edges", path, "--quiet"});
    CHECK(o.code == 0);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first.rfind("# Bass-Serre tree", 0) == 0);
    std::remove(path.c_str());
    CHECK(invoke({"verify", "tree-disjoint", "--H", "cyclic(2)", "--L", "cyclic(3)", "--depth", "3", "--radius", "3"})
              .code == 2);
  }
}
