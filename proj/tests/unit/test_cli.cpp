#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

using namespace hypercf;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(HYPERCF_DATA_DIR) + "/" + rel; }

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST(Cli, ExpandEmitsJsonLines) {
    auto r = run({"expand", "--curve", "genus1-quartic", "--lines", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines_of(r.out);
    ASSERT_EQ(ls.size(), 3u);
    auto j = json::parse(ls[1]);
    EXPECT_EQ(j["n"], 1);
    EXPECT_EQ(j["d"], "1");
    EXPECT_EQ(j["v"], "0");
}

TEST(Cli, CurveFromFileMatchesBuiltin) {
    auto a = run({"moments", "--curve", data("curves/genus2-sextic.json"), "--count", "8"});
    auto b = run({"moments", "--curve", "genus2-sextic", "--count", "8"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OeisStyleHankel) {
    auto r = run({"hankel", "--curve", "genus1-quartic", "--size", "6", "--oeis-style"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("1 1 2 3 7 23 59"), std::string::npos) << r.out;
}

TEST(Cli, OrbitCsv) {
    auto r = run({"orbit", "--genus", "1", "--steps", "3", "--seed-json", data("orbits/genus1-quartic-seed.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines_of(r.out);
    ASSERT_EQ(ls.size(), 5u);
    EXPECT_EQ(ls[0], "n,d,v");
    EXPECT_EQ(ls[1], "0,1,-1");
    EXPECT_EQ(ls[2], "1,1,0");
}

TEST(Cli, SomosFindOnStoredSequence) {
    auto r = run({"somos", "find", "--input", data("sequences/genus2-sextic-glued-tau.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["k"], 8);
    EXPECT_EQ(j["coefficients"], json({"7", "137", "2504", "-43424", "-26959"}));
}

TEST(Cli, VerifySuitesSucceed) {
    auto r = run({"verify", "forward-hankel", "--curve", "genus2-sextic", "--size", "6"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    r = run({"verify", "theorem2", "--curve", "genus1-quartic", "--size", "6"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(json::parse(r.out)["results"].size(), 2u);
    r = run({"verify", "poisson", "--genus", "2", "--samples", "3"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, ReproListAndRun) {
    auto r = run({"repro", "--list"});
    ASSERT_EQ(r.code, 0);
    for (const auto& [id, _] : cli::repro_bundles()) EXPECT_NE(r.out.find(id), std::string::npos);
    r = run({"repro", "example4"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, ShortLongOrbitRepro) {
    auto res = cli::run_repro("fig1-orbit", {.steps = 60, .csv = nullptr});
    EXPECT_TRUE(res.report.ok());
    EXPECT_EQ(res.details["invariants"], json({"-2", "-3"}));
}

TEST(Cli, BadInputExitCodes) {
    EXPECT_EQ(run({"no-such-command"}).code, cli::kBadInput);
    EXPECT_EQ(run({"expand", "--curve", "/nonexistent.json"}).code, cli::kBadInput);
    EXPECT_EQ(run({"repro", "no-such-id"}).code, cli::kBadInput);
    EXPECT_EQ(run({"orbit", "--genus", "3", "--seed-json", data("orbits/genus1-quartic-seed.json")}).code,
              cli::kBadInput);
}

TEST(Cli, FormatDouble) {
    EXPECT_EQ(cli::format_double(-0.0), "0");
    EXPECT_EQ(cli::format_double(0.5), "0.5");
}
