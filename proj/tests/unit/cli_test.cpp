#include <gtest/gtest.h>

#include <sstream>

#include "torlink/cli.hpp"
#include "torlink/report.hpp"

using namespace torlink;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

bool contains(std::string const& s, std::string const& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST(Cli, TlkOfX11) {
  CliRun r = run({"tlk", "--family", "X", "--k", "1", "--l", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "{1,2,3}: (0,1,-1)")) << r.out;
  EXPECT_TRUE(contains(r.out, "triple point lower bound: 16")) << r.out;
}

TEST(Cli, AbelianP5) {
  CliRun r = run({"abelian", "--family", "P", "--k", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "Abelian, rank 3\n");
}

TEST(Cli, Feasible) {
  EXPECT_EQ(run({"feasible", "--genera", "1,1,1,1,1"}).out,
            "infeasible (prefix k=5: 20 < 20 fails)\n");
  EXPECT_EQ(run({"feasible", "--genera", "1,1,1,1"}).out,
            "feasible (necessary condition only)\n");
  EXPECT_EQ(run({"feasible", "--genera", "1,x"}).code, cli::kUsageError);
  EXPECT_EQ(run({"feasible", "--genera", "1,-2"}).code, cli::kUsageError);
}

TEST(Cli, Components) {
  CliRun r = run({"components", "--family", "P", "--k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "F1: strands {1,2,3}")) << r.out;
}

TEST(Cli, ExplicitBraids) {
  CliRun r = run({"lk", "--braid-a", "s1 s1", "--braid-b", "", "--strands", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "lk^a:\n    0    1\n    1    0\nlk^b:\n    0    0\n    0    0\n");
  CliRun t = run({"lk", "--braid-a", "s1 s1", "--strands", "2"});
  EXPECT_TRUE(contains(t.out, "lk^b:\n    0    1")) << t.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(run({"lk"}).code, cli::kUsageError);
  EXPECT_EQ(run({"lk", "--family", "X", "--braid-a", "s1"}).code,
            cli::kUsageError);
  EXPECT_EQ(run({"lk", "--family", "W"}).code, cli::kUsageError);
  EXPECT_EQ(run({"tables", "--id", "4"}).code, cli::kUsageError);
  EXPECT_EQ(run({"construct", "--plus", "2", "--highgenus", "5"}).code,
            cli::kUsageError);
  EXPECT_EQ(run({"construct", "--highgenus", "4"}).code, cli::kUsageError);
}

TEST(Cli, ComputationErrors) {
  CliRun r = run({"lk", "--braid-a", "s1", "--braid-b", "s2", "--strands", "3"});
  EXPECT_EQ(r.code, cli::kComputationError);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"dlk", "--braid-a", "s1", "--braid-b", "s1", "--strands", "2"})
                .code,
            cli::kComputationError);
}

TEST(Cli, JsonRoundTrip) {
  CliRun r = run({"--json", "abelian", "--family", "Q", "--k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  Report rep = parse_report(r.out);
  EXPECT_EQ(rep.command, "abelian");
  ASSERT_TRUE(rep.verdict);
  EXPECT_TRUE(rep.verdict->is_abelian());
  EXPECT_EQ(rep.verdict->rank, 3u);
  ASSERT_TRUE(rep.invariants);
  EXPECT_EQ(rep.invariants->tlk(1, 2, 0), 3);
  EXPECT_EQ(parse_report(serialize(rep)), rep);
}

TEST(Cli, JsonIsDeterministicApartFromTiming) {
  auto strip = [](std::string const& s) {
    Json j = Json::parse(s);
    j.erase("elapsed_ms");
    return j;
  };
  std::vector<std::string> args{"--json", "tlk", "--family", "Y", "--k", "2",
                                "--l", "1"};
  EXPECT_EQ(strip(run(args).out), strip(run(args).out));
}

TEST(Cli, Construct) {
  CliRun r = run({"construct", "--highgenus", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "verdict: Abelian, rank 5")) << r.out;
  CliRun j = run({"--json", "construct", "--plus", "3"});
  ASSERT_EQ(j.code, 0) << j.err;
  Json parsed = Json::parse(j.out);
  EXPECT_EQ(parsed.get<ConstructionRecord>(), plus_tower(3));
}

TEST(Cli, Table2) {
  CliRun r = run({"tables", "--id", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, Properties) {
  CliRun r = run({"properties", "--cases", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "ok   ")) << r.out;
}
