#include <gtest/gtest.h>

#include <sstream>

#include "coadj/cli.hpp"
#include "support/fixtures.hpp"

using namespace coadj;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(COADJ_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Cli, DiagramPrintsWorkedExampleGrid) {
    const auto r = run({"diagram", sample("worked_example.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    std::string expected;
    for (const auto& line : fixtures::worked_example_steps().back()) expected += line + "\n";
    EXPECT_EQ(r.out.substr(0, expected.size()), expected);
    EXPECT_NE(r.out.find("crosses=5 plus_minus=12 bullets=4"), std::string::npos);
    EXPECT_NE(r.out.find("step 5:"), std::string::npos);
}

TEST(Cli, InvariantsJsonListsFiveCanonicalStrings) {
    const auto r = run({"invariants", sample("worked_example.json"), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto records = Json::parse(r.out).get<std::vector<InvariantRecord>>();
    ASSERT_EQ(records.size(), 5u);
    EXPECT_EQ(records, all_invariants(fixtures::worked_example()));
    EXPECT_EQ(Json::parse(r.out)[0]["P"], "y[4,1]");
}

TEST(Cli, PermutationReport) {
    const auto r = run({"permutation", sample("worked_example.json")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("w = (4,6,7,5,3,2,1)"), std::string::npos);
    EXPECT_NE(r.out.find("l(w) = 17, dim L = 17"), std::string::npos);
}

TEST(Cli, VerifyPassesOnWorkedExample) {
    const auto r = run({"verify", sample("worked_example.json"), "--trials", "10", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(Json::parse(r.out)["passed"].get<bool>());
}

TEST(Cli, StrictModeRejectsUnclosedGenerators) {
    const auto r = run({"verify", sample("unclosed.json"), "--strict"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("error"), std::string::npos);
    EXPECT_EQ(run({"diagram", sample("unclosed.json")}).code, 0);
}

TEST(Cli, InvalidInputsExitWithTwo) {
    EXPECT_EQ(run({"frobnicate", sample("worked_example.json")}).code, 2);
    EXPECT_EQ(run({"diagram", sample("does-not-exist.json")}).code, 2);
    EXPECT_EQ(run({"diagram"}).code, 2);
    EXPECT_EQ(run({"diagram", sample("worked_example.json"), "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"verify", sample("worked_example.json"), "--trials", "0"}).code, 2);
}

TEST(Cli, BudgetExceededExitsWithThree) {
    EXPECT_EQ(run({"oracle", sample("worked_example.json"), "--budget", "10"}).code, 3);
    EXPECT_EQ(run({"extremal-scan", sample("worked_example.json"), "--budget", "10"}).code, 3);
}

TEST(Cli, OrbitStatsAndOracle) {
    auto r = run({"orbit-stats", sample("worked_example.json"), "--trials", "20", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto s = Json::parse(r.out).get<OrbitStats>();
    EXPECT_EQ(s.max_rank, 12);
    EXPECT_EQ(s.corank, 5);

    r = run({"oracle", sample("kirillov6.json"), "--max-degree", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("dimension 1"), std::string::npos);
    EXPECT_NE(r.out.find("y[6,1]"), std::string::npos);
}

TEST(Cli, ExtremalScan) {
    const auto r = run({"extremal-scan", sample("kirillov6.json"), "--max-size", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto entries = Json::parse(r.out).get<std::vector<ExtremalEntry>>();
    EXPECT_EQ(entries, enumerate_extremal(fixtures::empty_ideal(6), 3));
    EXPECT_EQ(run({"extremal-scan", sample("kirillov6.json"), "--max-size", "9"}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::string> args{"verify", sample("worked_example.json"), "--trials", "5", "--seed", "42",
                                        "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
}
