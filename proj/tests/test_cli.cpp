#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "revauto/cli.hpp"
#include "support/golden.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = revauto::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("revauto_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST(Cli, AnalyzeStrong) {
    auto r = run({"analyze", "--regex", "a*b(a+b)*"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "language degree: strongly irreversible"));
    EXPECT_TRUE(contains(r.out, "pump certificate"));
    EXPECT_TRUE(contains(r.out, "3-forbidden pattern"));
}

TEST(Cli, AnalyzeHierarchy) {
    auto r = run({"analyze", "--regex", "a*bbb*"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "language degree: k-reversible, minimal k = 3"));
}

TEST(Cli, AnalyzeJsonMatchesText) {
    auto text = run({"analyze", "--regex", "a*bbb*"});
    auto json = run({"analyze", "--json", "--regex", "a*bbb*"});
    ASSERT_EQ(json.code, 0);
    auto doc = nlohmann::json::parse(json.out);
    EXPECT_EQ(doc["language_degree"]["kind"], "finite");
    EXPECT_EQ(doc["language_degree"]["k"], 3);
    EXPECT_EQ(doc["minimal_states"], 3);
    EXPECT_EQ(doc["witness"]["type"], "forbidden_pattern");
    EXPECT_TRUE(contains(text.out, "witness: 2-forbidden pattern: p = " + doc["witness"]["p"].get<std::string>()));
    EXPECT_FALSE(doc.contains("timing_ms"));
}

TEST(Cli, Timing) {
    auto r = run({"analyze", "--timing", "--regex", "a*"});
    EXPECT_TRUE(contains(r.out, "timing: "));
}

TEST(Cli, ConstructRefuses) {
    auto r = run({"construct", "-k", "1", "--regex", "a*b(a+b)*"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "p = q0, q = q1, r = q1, x = ε, sigma = b, w = ε"));
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ConstructWritesDfa) {
    auto r = run({"construct", "-k", "5", write_temp("a57.dfa", revauto::serialize_dfa(golden::a57()))});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(revauto::equivalent(revauto::parse_dfa_file(r.out), golden::a57_prime()));
    auto path = write_temp("out.dfa", "");
    auto again = run({"construct", "-k", "3", "--regex", "a*bbb*", "-o", path});
    EXPECT_EQ(again.code, 0);
    EXPECT_TRUE(again.out.empty());
    EXPECT_TRUE(revauto::equivalent(revauto::parse_dfa_file(revauto::cli::read_file(path)), golden::hierarchy(2)));
}

TEST(Cli, ConstructForce) {
    auto r = run({"construct", "-k", "1", "--force", "--regex", "a*b(a+b)*"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.err, "warning"));
}

TEST(Cli, CheckAChain) {
    auto file = write_temp("a_chain.dfa", golden::kAChain);
    EXPECT_EQ(run({"check", "-k", "3", file}).code, 3);
    EXPECT_EQ(run({"check", "-k", "4", file}).code, 0);
    auto r = run({"analyze", file});
    EXPECT_TRUE(contains(r.out, "language degree: k-reversible, minimal k = 1"));
    EXPECT_TRUE(contains(r.out, "automaton degree: k-reversible, minimal k = 4"));
}

TEST(Cli, MinimizeAndDot) {
    auto file = write_temp("chainm.dfa", golden::kAChain);
    auto r = run({"minimize", file});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "alphabet: a\nstates: qI\ninitial: qI\nfinal: qI\ntrans: qI a qI\n");
    auto d = run({"dot", "--regex", "a*b(a+b)*"});
    EXPECT_TRUE(contains(d.out, "digraph"));
    auto p = run({"dot", "--pattern", "--regex", "a*b(a+b)*"});
    EXPECT_TRUE(contains(p.out, "\"(q0,q1)\" -> \"(q0,q1)\" [label=\"a\"]"));
}

TEST(Cli, Witness) {
    auto r = run({"witness", "--regex", "a*bbb*"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "2-forbidden pattern"));
    auto k = run({"witness", "-k", "3", "--regex", "a*bbb*"});
    EXPECT_TRUE(contains(k.out, "no 3-forbidden pattern"));
}

TEST(Cli, Errors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"analyze"}).code, 1);
    EXPECT_EQ(run({"analyze", "--regex", "a("}).code, 1);
    EXPECT_EQ(run({"analyze", "/nonexistent/file.dfa"}).code, 1);
    EXPECT_EQ(run({"construct", "-k", "0", "--regex", "a"}).code, 1);
    EXPECT_EQ(run({"check", "--regex", "a", "-k", "1"}).code, 1);
    auto bad = write_temp("bad.dfa", "alphabet: a\nstates: q0 q1 q2\ninitial: q0\nfinal:\ntrans: q0 a q1\ntrans: q0 a q2\n");
    auto r = run({"analyze", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.err, "line 6"));
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
    for (std::vector<std::string> args : {std::vector<std::string>{"analyze", "--json", "--regex", "a*b(a+b)*"},
                                          {"construct", "-k", "3", "--regex", "a*bbb*"},
                                          {"dot", "--pattern", "--regex", "a*bbb*"}}) {
        auto a = run(args);
        auto b = run(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.err, b.err);
    }
}
