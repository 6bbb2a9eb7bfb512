#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "arith/io.hpp"
#include "cli.hpp"

using namespace arith;
namespace cli = arith::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ARITH_TEST_DATA) + "/" + name; }

Json json_of(const Outcome& o) { return parse_json(o.out, "cli output"); }

}  // namespace

TEST_CASE("verify", "[cli]") {
  const Outcome ok = run({"verify", "--graph", data("bridged7.json"), "--r", "2,1,1,2,1,1,1"});
  CHECK(ok.code == cli::kExitOk);
  CHECK(json_of(ok)["verified"] == true);
  CHECK(json_of(ok)["d"] == Json::array({2, 5, 3, 2, 4, 2, 2}));

  const Outcome wrong =
      run({"verify", "--graph", data("bridged7.json"), "--r", "1,1,1,1,1,1,1", "--d", "2,5,3,2,4,2,2"});
  CHECK(wrong.code == cli::kExitFalse);
  CHECK(json_of(wrong)["verified"] == false);

  const Outcome laplacian = run({"verify", "--graph", data("bridged7.json"), "--r", "1,1,1,1,1,1,1"});
  CHECK(laplacian.code == cli::kExitOk);

  const Outcome indivisible = run({"verify", "--family", "path", "--n", "3", "--r", "2,1,1"});
  CHECK(indivisible.code == cli::kExitFalse);

  CHECK(run({"verify", "--family", "path", "--n", "3", "--r", "1,1"}).code == cli::kExitInput);
  CHECK(run({"verify", "--graph", data("missing.json"), "--r", "1"}).code == cli::kExitInput);
}

TEST_CASE("reduce", "[cli]") {
  const Outcome one = run({"reduce", "--graph", data("bridged7.json"), "--r", "2,1,1,2,1,1,1", "--vertex", "1"});
  REQUIRE(one.code == cli::kExitOk);
  const Json j = json_of(one);
  CHECK(j["removed_vertex"] == 1);
  CHECK(j["s"] == 2);
  CHECK(j["structure"]["r"] == Json::array({1, 1, 2, 1, 1, 1}));

  const Outcome chain = run({"reduce", "--graph", data("k4.json"), "--r", "6,3,2,1", "--vertex", "1,1"});
  REQUIRE(chain.code == cli::kExitOk);
  const Json steps = json_of(chain)["steps"];
  REQUIRE(steps.size() == 2);
  CHECK(steps[1]["structure"]["r"] == Json::array({2, 1}));
  CHECK(steps[1]["graph"]["edges"] == Json::array({Json::array({1, 2, 8})}));

  CHECK(run({"reduce", "--graph", data("k4.json"), "--r", "6,3,2,1", "--vertex", "9"}).code == cli::kExitInput);
}

TEST_CASE("enumerate", "[cli]") {
  const Outcome k3 = run({"enumerate", "--family", "mkn", "--n", "3", "--m", "6"});
  REQUIRE(k3.code == cli::kExitOk);
  CHECK(json_of(k3)["count"] == 57);
  CHECK(json_of(k3)["method"] == "recursive");

  const Outcome p4 = run({"enumerate", "--graph", data("path4.json")});
  REQUIRE(p4.code == cli::kExitOk);
  CHECK(json_of(p4)["count"] == 5);
  CHECK(json_of(p4)["complete"] == true);

  const Outcome boxed = run({"enumerate", "--graph", data("path4.json"), "--r-max", "2"});
  REQUIRE(boxed.code == cli::kExitOk);
  CHECK(json_of(boxed)["complete"] == false);
  CHECK_FALSE(boxed.err.empty());

  const Outcome plain = run({"enumerate", "--family", "mkn", "--n", "3", "--m", "1", "--format", "plain"});
  CHECK(plain.code == cli::kExitOk);
  CHECK(std::count(plain.out.begin(), plain.out.end(), '\n') >= 3);

  const Outcome agree = run({"enumerate", "--family", "mkn", "--n", "4", "--m", "1", "--check-agree"});
  CHECK(agree.code == cli::kExitOk);
  CHECK(json_of(agree)["agree"] == true);
  CHECK(json_of(agree)["count"] == 14);

  CHECK(run({"enumerate", "--family", "mkn", "--n", "3"}).code == cli::kExitInput);
  CHECK(run({"enumerate", "--family", "path", "--n", "3", "--method", "recursive"}).code == cli::kExitInput);
}

TEST_CASE("enumerate output is deterministic", "[cli]") {
  const std::vector<std::string> args{"enumerate", "--family", "mkn", "--n", "3", "--m", "4", "--method", "brute",
                                      "--threads", "3"};
  CHECK(run(args).out == run(args).out);
  const Outcome timed = run({"enumerate", "--family", "mkn", "--n", "3", "--m", "1", "--timing"});
  CHECK(json_of(timed).contains("elapsed_seconds"));
}

TEST_CASE("egyptian", "[cli]") {
  const Outcome reps = run({"egyptian", "--n", "3", "--m", "1"});
  REQUIRE(reps.code == cli::kExitOk);
  std::istringstream lines(reps.out);
  std::string first;
  std::getline(lines, first);
  CHECK(parse_json(first, "line")["x"] == Json::array({2, 3, 6}));
  CHECK(std::count(reps.out.begin(), reps.out.end(), '\n') == 3);

  CHECK(run({"egyptian", "--n", "3", "--m", "101", "--count-only"}).out == "164\n");
  CHECK(run({"egyptian", "--n", "0", "--m", "1"}).code == cli::kExitInput);
}

TEST_CASE("bounds", "[cli]") {
  const Outcome k4 = run({"bounds", "--n", "4", "--m", "1"});
  REQUIRE(k4.code == cli::kExitOk);
  const Json j = json_of(k4);
  CHECK(j["mkn"]["value"] == 688);
  CHECK(j["general"]["value"] == 805503);
  CHECK(j["r1"]["floor"] == 10077696);

  CHECK(json_of(run({"bounds", "--n", "2", "--edges", "3"}))["general"]["value"] == 19);
  CHECK(run({"bounds", "--n", "4"}).code == cli::kExitInput);
  CHECK(run({"bounds", "--n", "4", "--m", "1", "--edges", "6"}).code == cli::kExitInput);
}

TEST_CASE("precision from the environment", "[cli]") {
  ::setenv(cli::kPrecisionEnv, "256", 1);
  const Outcome wide = run({"bounds", "--n", "3", "--m", "2"});
  CHECK(json_of(wide)["mkn"]["precision_bits"] == 256);
  CHECK(json_of(run({"bounds", "--n", "3", "--m", "2", "--precision-bits", "192"}))["mkn"]["precision_bits"] == 192);
  ::setenv(cli::kPrecisionEnv, "lots", 1);
  CHECK(run({"bounds", "--n", "3", "--m", "2"}).code == cli::kExitInput);
  ::unsetenv(cli::kPrecisionEnv);
}

TEST_CASE("table matches the golden file", "[cli]") {
  std::ifstream golden_file(data("published_table.csv"));
  std::stringstream golden;
  golden << golden_file.rdbuf();

  const Outcome published = run({"table", "--cells", "published", "--method", "egyptian"});
  REQUIRE(published.code == cli::kExitOk);
  CHECK(published.out == golden.str());

  const Outcome small = run({"table", "--n-list", "3", "--m-max", "2"});
  CHECK(small.out == "m,count_n3,bound_n3\n1,3,20\n2,10,56\n");

  const Outcome empty = run({"table", "--n-list", "3,4", "--m-max", "0"});
  CHECK(empty.code == cli::kExitOk);
}

TEST_CASE("crosscheck", "[cli]") {
  const Outcome grid = run({"crosscheck", "--n-list", "3", "--m-max", "3", "--brute"});
  CHECK(grid.code == cli::kExitOk);
  CHECK(std::count(grid.out.begin(), grid.out.end(), '\n') == 3);
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(run({}).code == cli::kExitInput);
  CHECK(run({"frobnicate"}).code == cli::kExitInput);
  CHECK(run({"--help"}).code == cli::kExitOk);
  CHECK(run({"egyptian", "--n", "x", "--m", "1"}).code == cli::kExitInput);
}
