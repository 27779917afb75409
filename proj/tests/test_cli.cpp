#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "topring/cli.hpp"

using namespace topring;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "topring");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* kSierpinski = R"({"n":2,"opens":[[],[0],[0,1]]})";

}  // namespace

TEST(Cli, RingInfo) {
  const auto r = run({"ring", "info", "Z/12", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["size"], 12);
  EXPECT_EQ(j["units"], json::parse("[1,5,7,11]"));
  EXPECT_EQ(j["zerodivisors"], json::parse("[0,2,3,4,6,8,9,10]"));
  EXPECT_EQ(j["idempotents"], json::parse("[0,1,4,9]"));
  const auto t = run({"ring", "info", "Z/12"});
  EXPECT_NE(t.out.find("units: [1,5,7,11]"), std::string::npos);
}

TEST(Cli, AdicReport) {
  const auto r = run({"adic", "report", "--ring", "Z/12", "--ideal", "4", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["data"]["stable_ideal"], json::parse("[0,4,8]"));
  EXPECT_EQ(j["data"]["pi0_size"], 4);
  EXPECT_EQ(j["data"]["hausdorff"], false);
  EXPECT_EQ(j["data"]["absolute"], true);
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Cli, CheckTopringSierpinskiFailsWithWitness) {
  const auto r = run({"check", "topring", "--ring", "Z/2", "--topology", kSierpinski, "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_FALSE(j["topological_ring"].get<bool>());
  EXPECT_EQ(j["add_witness_open"], json::parse("[0]"));
  EXPECT_EQ(j["add_witness_preimage"], json::parse("[0,3]"));
  const auto t = run({"check", "topring", "--ring", "Z/2", "--topology", kSierpinski});
  EXPECT_NE(t.out.find("fail"), std::string::npos);
  EXPECT_NE(t.out.find("open {0}"), std::string::npos);
}

TEST(Cli, AdicTopologyRoundTripsIntoChecks) {
  const auto r = run({"adic", "report", "--ring", "Z/12", "--ideal", "4", "--output", "json"});
  const auto lit = json::parse(r.out)["data"]["topology"].dump();
  const auto ring = run({"check", "topring", "--ring", "Z/12", "--topology", lit, "--output", "json"});
  ASSERT_EQ(ring.code, 0) << ring.err;
  EXPECT_TRUE(json::parse(ring.out)["topological_ring"].get<bool>());
  const auto abs = run({"check", "absolute", "--ring", "Z/12", "--topology", lit, "--output", "json"});
  ASSERT_EQ(abs.code, 0) << abs.err;
  EXPECT_TRUE(json::parse(abs.out)["data"]["absolute"].get<bool>());
  const auto again = run({"check", "absolute", "--ring", "Z/12", "--topology", lit, "--output", "json"});
  EXPECT_EQ(abs.out, again.out);
  const auto grp = run({"check", "topgroup", "--ring", "Z/12", "--topology", lit});
  EXPECT_NE(grp.out.find("pass"), std::string::npos);
}

TEST(Cli, TextAndJsonAgree) {
  const auto j = run({"check", "topgroup", "--ring", "Z/2", "--topology", kSierpinski, "--output", "json"});
  const auto t = run({"check", "topgroup", "--ring", "Z/2", "--topology", kSierpinski});
  EXPECT_FALSE(json::parse(j.out)["topological_group"].get<bool>());
  EXPECT_NE(t.out.find("fail"), std::string::npos);
  const auto aj = run({"adic", "report", "--ring", "Z/12", "--ideal", "6", "--output", "json"});
  const auto at = run({"adic", "report", "--ring", "Z/12", "--ideal", "6"});
  EXPECT_TRUE(json::parse(aj.out)["data"]["hausdorff"].get<bool>());
  EXPECT_NE(at.out.find("hausdorff: true"), std::string::npos);
  EXPECT_EQ(aj.code, at.code);
}

TEST(Cli, TopologyEnumerate) {
  EXPECT_EQ(run({"topology", "enumerate", "--size", "3", "--count-only"}).out, "29\n");
  const auto j = run({"topology", "enumerate", "--size", "2", "--output", "json"});
  const auto parsed = json::parse(j.out);
  EXPECT_EQ(parsed["count"], 4);
  for (const auto& t : parsed["topologies"]) EXPECT_NO_THROW(topology_from_json(t));
}

TEST(Cli, SearchNonAbsolute) {
  const auto r = run({"search", "non-absolute", "--ring", "Z/4", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["topologies_searched"], 355);
  EXPECT_TRUE(j["non_absolute"].empty());
}

TEST(Cli, SuiteWritesJson) {
  const auto path = (std::filesystem::temp_directory_path() / "topring_suite_test.json").string();
  std::filesystem::remove(path);
  const auto r = run({"suite", "run", "--theorems", "nonfield-criterion,adic-absolute", "--rings", "Z/4;Z/6",
                      "--rings", "Z/2 x Z/2", "--json", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(path);
  ASSERT_TRUE(f.good());
  const auto j = json::parse(f);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["sections"]["nonfield_rings"], 3);
  EXPECT_GT(j["tallies"]["adic-absolute"]["holds"].get<int>(), 0);
  std::filesystem::remove(path);
}

TEST(Cli, UsageAndParseErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"ring"}).code, 1);
  EXPECT_EQ(run({"ring", "info", "Z/0"}).code, 1);
  EXPECT_EQ(run({"ring", "info", "nonsense"}).code, 1);
  EXPECT_EQ(run({"adic", "report", "--ring", "Z/12", "--ideal", "x"}).code, 1);
  EXPECT_EQ(run({"adic", "report", "--ring", "Z/12", "--ideal", "12"}).code, 1);
  EXPECT_EQ(run({"check", "topring", "--ring", "Z/2", "--topology", "{bad"}).code, 1);
  EXPECT_EQ(run({"check", "topring", "--ring", "Z/3", "--topology", kSierpinski}).code, 1);
  EXPECT_EQ(run({"check", "topring", "--ring", "Z/2", "--topology", R"({"n":2,"opens":[[0],[0,1]]})"}).code, 1);
  EXPECT_EQ(run({"check", "absolute", "--ring", "Z/2", "--topology", kSierpinski}).code, 1);
  EXPECT_EQ(run({"topology", "enumerate", "--size", "9"}).code, 1);
  EXPECT_EQ(run({"suite", "run", "--theorems", "bogus"}).code, 1);
  EXPECT_EQ(run({"ring", "info", "Z/6", "--output", "yaml"}).code, 1);
}

TEST(Cli, ViolationReportsExitTwo) {
  Report rep;
  rep.subject = "synthetic";
  rep.expect("adic-absolute", "deliberately false", false, {{"open", json::array({0})}});
  std::ostringstream out;
  EXPECT_EQ(cli::detail::emit_report(out, false, rep), cli::kViolation);
  EXPECT_NE(out.str().find("VIOLATION"), std::string::npos);
  EXPECT_NE(out.str().find("witness"), std::string::npos);
}

TEST(Cli, BudgetExceededExitsThree) {
  ::setenv("TOPRING_BUDGET", "10", 1);
  const auto r = run({"check", "topring", "--ring", "Z/4", "--topology", topology_to_json(FinTopology::discrete(4)).dump()});
  ::unsetenv("TOPRING_BUDGET");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}
