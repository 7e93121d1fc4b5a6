#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "symcap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = symcap::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("capacities csv") {
  auto r = run({"capacities", "--domain", "B(1)", "--kmax", "6", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "k,c_k\n0,0\n1,1\n2,1\n3,2\n4,2\n5,2\n6,3\n");
}

TEST_CASE("validation exit code") {
  auto r = run({"capacities", "--domain", "E(0,1)"});
  CHECK(r.code == 1);
  auto e = nlohmann::json::parse(r.err);
  CHECK(e["error"] == "validation");
  CHECK(run({"capacities", "--nope"}).code == 1);
  CHECK(run({"coloring", "--k", "4", "--alpha", "1/4"}).code == 1);
}

TEST_CASE("divergence column is decreasing") {
  auto r = run({"cex", "divergence", "--dmax", "1e6"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  auto rows = j["rows"];
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i]["s_d"].get<double>() < rows[i - 1]["s_d"].get<double>());
}

TEST_CASE("output is deterministic") {
  auto a = run({"--seed", "7", "--selftest", "billiard"});
  auto b = run({"--seed", "7", "--selftest", "billiard"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("every subcommand has a selftest") {
  for (std::string m : {"capacities", "weyl", "packing", "coloring", "rotcheck", "billiard", "cex"}) {
    auto r = run({"--selftest", m, "--format", "csv"});
    INFO(m << "\n" << r.out);
    CHECK(r.code == 0);
  }
}

TEST_CASE("rationals stay exact in csv") {
  auto r = run({"capacities", "--domain", "E(3/2,1)", "--kmax", "2", "--format", "csv"});
  CHECK(r.out == "k,c_k\n0,0\n1,1\n2,3/2\n");
}
