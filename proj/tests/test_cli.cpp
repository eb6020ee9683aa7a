#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Out {
    int code;
    std::string text;
    json body() const { return json::parse(text); }
};

Out run(std::vector<std::string> args) {
    args.insert(args.begin(), "taffine");
    std::ostringstream os;
    int code = taffine::cli::run(args, os);
    return {code, os.str()};
}

}  // namespace

TEST(Cli, RootsSmallestWindow) {
    auto r = run({"roots", "--family", "A2MIX", "--k", "1", "--l", "1", "--window", "0"});
    ASSERT_EQ(r.code, 0) << r.text;
    EXPECT_EQ(r.body().size(), 11u);
}

TEST(Cli, ClassifyNonsingular) {
    auto r = run({"classify", "--family", "D2", "--k", "2", "--l", "1", "--root", "e1+f1"});
    ASSERT_EQ(r.code, 0) << r.text;
    EXPECT_EQ(r.body()["kind"], "nonsingularx");
    EXPECT_TRUE(r.body()["length"].is_null());
}

TEST(Cli, SalphaAndSubsystem) {
    auto s = run({"salpha", "--family", "A4", "--k", "2", "--l", "2", "--root", "2f1"});
    ASSERT_EQ(s.code, 0);
    EXPECT_EQ(s.body()["r"], 4);
    auto sub = run({"subsystem", "--family", "D2", "--k", "2", "--l", "1", "--index", "2", "--kind", "R", "--window", "1"});
    ASSERT_EQ(sub.code, 0);
    EXPECT_FALSE(sub.body().empty());
    auto c = run({"closed", "--family", "A2ODD", "--k", "2", "--l", "1", "--index", "1", "--window", "3"});
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(c.body()["closed"], true);
}

TEST(Cli, FunctionalCommands) {
    auto t = run({"triangular", "--family", "A2MIX", "--k", "1", "--l", "1", "--window", "1", "--functional", R"({"d": 1})"});
    ASSERT_EQ(t.code, 0) << t.text;
    for (const auto& a : t.body()["circ"]) EXPECT_EQ(a.get<std::string>().find('d'), std::string::npos);
    auto p = run({"parabolic", "--family", "A2ODD", "--k", "2", "--l", "1", "--window", "2", "--functional",
                  R"({"outer": {"d": 1}, "inner": {}})"});
    ASSERT_EQ(p.code, 0) << p.text;
    EXPECT_EQ(p.body()["parabolic"], true);
    auto l = run({"levi", "--family", "A2ODD", "--k", "2", "--l", "1", "--window", "2", "--functional", R"({"d": 1})"});
    ASSERT_EQ(l.code, 0) << l.text;
    EXPECT_EQ(l.body()["names"], json::array({"D(2,1)"}));
}

TEST(Cli, Recognize) {
    auto r = run({"recognize", "--k", "1", "--l", "1", "--roots", R"(["0", "f1", "-f1", "2f1", "-2f1"])"});
    ASSERT_EQ(r.code, 0) << r.text;
    EXPECT_EQ(r.body()["names"], json::array({"B(0,1)"}));
}

TEST(Cli, SupportQueries) {
    const std::string s = R"({"pieces": [{"base": "e1 + 1/2f1 + 6L0", "zgens": ["2f1"]}]})";
    auto r = run({"support", "--k", "2", "--l", "1", "--support", s, "--weight", "e1 + 9/2f1 + 6L0", "--root", "2f1"});
    ASSERT_EQ(r.code, 0) << r.text;
    EXPECT_EQ(r.body()["member"], true);
    EXPECT_EQ(r.body()["in_B"], false);
    EXPECT_EQ(r.body()["in_C"], true);
}

TEST(Cli, TightnessAndVerify) {
    auto t = run({"tightness", "--example", "--k", "2", "--window", "4"});
    ASSERT_EQ(t.code, 0) << t.text;
    EXPECT_EQ(t.body()["S(1)"]["class"], "hybrid");
    EXPECT_EQ(t.body()["S(1)"]["direction"], 1);
    EXPECT_EQ(t.body()["quasi_integrable"], 2);
    auto v = run({"verify-example", "--k", "2", "--zeta", "1/2", "--window", "6"});
    ASSERT_EQ(v.code, 0) << v.text;
    auto body = v.body();
    EXPECT_EQ(body["steps"].size(), 6u);
    EXPECT_EQ(body["all_pass"], false);
}

TEST(Cli, DeterministicOutput) {
    std::vector<std::string> args{"parabolic", "--family", "A4", "--k", "2", "--l", "2", "--window", "2", "--functional",
                                  R"({"outer": {"e1": "1/3", "d": 1}, "inner": {"f2": -1}})"};
    EXPECT_EQ(run(args).text, run(args).text);
    std::vector<std::string> v{"verify-example", "--k", "3", "--window", "3"};
    EXPECT_EQ(run(v).text, run(v).text);
}

TEST(Cli, EmittedLiteralsRoundTrip) {
    for (const char* fam : {"A2ODD", "A2MIX", "A4", "D2"}) {
        auto r = run({"roots", "--family", fam, "--k", "2", "--l", "2", "--window", "2"});
        ASSERT_EQ(r.code, 0);
        for (const auto& lit : r.body()) {
            auto w = taffine::Weight::parse(lit.get<std::string>(), 2, 2);
            EXPECT_EQ(w.str(), lit.get<std::string>());
        }
    }
    const std::string s = R"({"pieces": [{"base": "(1/2)e1 - 3/4f1 + 2d", "ngens": ["-d"], "offsets": ["0", "-e2"]}]})";
    auto r = run({"support", "--k", "2", "--l", "1", "--support", s, "--weight", "0"});
    ASSERT_EQ(r.code, 0) << r.text;
    auto piece = r.body()["support"]["pieces"][0];
    auto w = taffine::Weight::parse(piece["base"].get<std::string>(), 2, 1);
    EXPECT_EQ(w, taffine::Weight::parse("1/2e1 - 3/4f1 + 2d", 2, 1));
}

TEST(Cli, InvalidInputExitsOne) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"roots", "--family", "B2", "--k", "1", "--l", "1"},
             {"roots", "--family", "A2ODD", "--k", "1", "--l", "1"},
             {"classify", "--family", "D2", "--k", "2", "--l", "1", "--root", "e1 +"},
             {"classify", "--family", "D2", "--k", "2", "--l", "1", "--root", "3e1"},
             {"roots", "--family", "D2", "--k", "2", "--l", "1", "--bogus"},
             {"triangular", "--family", "D2", "--k", "2", "--l", "1", "--functional", "{"},
             {"triangular", "--family", "D2", "--k", "2", "--l", "1", "--functional", R"({"g1": 1})"},
             {"verify-example", "--k", "2", "--zeta", "1"},
         }) {
        auto r = run(args);
        EXPECT_EQ(r.code, 1) << args[0] << " " << r.text;
        auto body = r.body();
        ASSERT_TRUE(body.contains("error")) << r.text;
        EXPECT_EQ(body["error"]["type"], "invalid_input");
        EXPECT_FALSE(body["error"]["message"].get<std::string>().empty());
    }
}

TEST(Cli, UndecidedSearchExitsTwo) {
    const std::string s = R"({"pieces": [{"base": "0", "ngens": ["3e1", "5e1"]}]})";
    auto r = run({"support", "--k", "2", "--l", "1", "--support", s, "--weight", "7e1", "--bound", "0"});
    EXPECT_EQ(r.code, 2) << r.text;
    EXPECT_EQ(r.body()["error"]["type"], "indeterminate");
}
