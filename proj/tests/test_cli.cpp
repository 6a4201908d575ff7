#include <sstream>

#include <gtest/gtest.h>

#include "satake/cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = satake::cli::main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Kostka, PrettyExamples)
{
    auto r = run({"kostka", "--type", "a2", "--lambda", "1,1", "--mu", "0,0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "q + q^2\n");
    r = run({"kostka", "--shape", "2,1", "--content", "1,1,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "q + q^2\n");
    r = run({"kostka", "--type", "a1", "--lambda", "6", "--mu", "2"});
    EXPECT_EQ(r.out, "q^2\n");
}

TEST(Kostka, Json)
{
    const auto r = run({"kostka", "--type", "a2", "--lambda", "2,2", "--mu", "0,0", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["polynomial"], "q^2 + q^3 + q^4");
    EXPECT_EQ(j["coefficients"], nlohmann::json::parse("[0,0,1,1,1]"));
    EXPECT_EQ(j["type"], "A2");
}

TEST(Kostka, UsageErrors)
{
    EXPECT_EQ(run({"kostka", "--type", "a2", "--lambda", "1,1"}).code, 2);
    EXPECT_EQ(run({"kostka", "--type", "a2", "--lambda", "1,x", "--mu", "0,0"}).code, 2);
    EXPECT_EQ(run({"kostka", "--type", "b2", "--lambda", "1,1", "--mu", "0,0"}).code, 2);
    EXPECT_EQ(run({"kostka", "--shape", "2,1"}).code, 2);
    EXPECT_EQ(run({"kostka", "--type", "a2", "--lambda", "1,1", "--mu", "0,0", "--format", "csv"}).code, 2);
}

TEST(Stalks, SinglePairCsv)
{
    const auto r = run({"stalks", "--family", "octonionic", "--lambda", "2,1", "--mu", "0,0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "lambda,mu,degree,dim\n\"2,1\",\"0,0\",-32,1\n\"2,1\",\"0,0\",-24,1\n");
    const auto s = run({"stalks", "--family", "octonionic", "--lambda", "2,1", "--mu", "0,0", "--convention", "shifted"});
    EXPECT_EQ(s.out, "lambda,mu,degree,dim\n\"2,1\",\"0,0\",-16,1\n\"2,1\",\"0,0\",-8,1\n");
}

TEST(Stalks, NotBelowIsANoteNotAnError)
{
    const auto r = run({"stalks", "--family", "lorentz", "--n", "5", "--lambda", "1", "--mu", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "lambda,mu,degree,dim\n");
    EXPECT_NE(r.err.find("note:"), std::string::npos);
}

TEST(Stalks, SweepFormats)
{
    const auto csv = run({"stalks", "--family", "lorentz", "--n", "3", "--lmax", "2"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out, "lambda,mu,degree,dim\n0,0,0,1\n1,1,-2,1\n2,0,-8,1\n2,2,-4,1\n");
    const auto js = run({"stalks", "--family", "octonionic", "--box", "3", "--format", "json"});
    ASSERT_EQ(js.code, 0);
    const auto j = nlohmann::json::parse(js.out);
    ASSERT_TRUE(j.is_array());
    EXPECT_FALSE(j.empty());
    for (const auto& e : j) {
        EXPECT_TRUE(e.contains("family"));
        EXPECT_TRUE(e.contains("lambda"));
        EXPECT_TRUE(e.contains("mu"));
        EXPECT_TRUE(e.contains("stalks"));
    }
    const auto pretty = run({"stalks", "--family", "lorentz", "--n", "3", "--lmax", "1", "--format", "pretty"});
    EXPECT_EQ(pretty.out, "lambda=0 mu=0: H^0=1\nlambda=1 mu=1: H^-2=1\n");
}

TEST(Stalks, UsageErrors)
{
    EXPECT_EQ(run({"stalks", "--family", "nowhere"}).code, 2);
    EXPECT_EQ(run({"stalks", "--family", "lorentz"}).code, 2);
    EXPECT_EQ(run({"stalks", "--family", "lorentz", "--n", "1"}).code, 2);
    EXPECT_EQ(run({"stalks", "--family", "octonionic", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"stalks"}).code, 2);
    EXPECT_EQ(run({"stalks", "--family", "octonionic", "--lambda", "1,0"}).code, 2);
    EXPECT_EQ(run({"stalks", "--family", "octonionic", "--lambda", "1,0", "--mu", "0,0", "--lmax", "3"}).code, 2);
    EXPECT_EQ(run({"stalks", "--family", "octonionic", "--lambda", "1", "--mu", "0"}).code, 2);
    EXPECT_EQ(run({"stalks", "--family", "octonionic", "--lambda", "0,1", "--mu", "0,0"}).code, 2);
    EXPECT_EQ(run({"stalks", "--family", "octonionic", "--convention", "sideways"}).code, 2);
}

TEST(HilbertCheck, JsonSchema)
{
    const auto r = run({"hilbert-check", "--family", "octonionic", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* k : {"family", "checks", "degree_multisets", "hilbert_series"})
        EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_TRUE(j["hilbert_series"].contains("num"));
    EXPECT_TRUE(j["hilbert_series"].contains("den"));
}

TEST(HilbertCheck, AllFamiliesPretty)
{
    const auto r = run({"hilbert-check"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("PASS graded.part2_K.octonionic"), std::string::npos);
    EXPECT_NE(r.out.find("PASS graded.ext_hilbert.lorentz(12)"), std::string::npos);
    EXPECT_EQ(run({"hilbert-check", "--format", "csv"}).code, 2);
}

TEST(PairingCheck, Runs)
{
    const auto r = run({"pairing-check", "--family", "lorentz", "--n", "7", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["checked"], 41);
    EXPECT_TRUE(j["failures"].empty());
    EXPECT_EQ(run({"pairing-check"}).code, 0);
}

TEST(CentralizerCheck, Json)
{
    const auto r = run({"centralizer-check", "--family", "octonionic", "--samples", "20", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["samples"], 30);
    EXPECT_TRUE(j["failures"].empty());
    EXPECT_TRUE(j["equivariance"].get<bool>());
    EXPECT_EQ(run({"centralizer-check", "--samples", "0"}).code, 2);
    EXPECT_EQ(run({"centralizer-check", "--seed", "-4"}).code, 2);
}

TEST(Tensor, Formats)
{
    auto r = run({"tensor", "--type", "a1", "--lambda", "2", "--mu", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 x V(0)\n1 x V(2)\n1 x V(4)\n");
    r = run({"tensor", "--type", "a2", "--lambda", "1,0", "--mu", "0,1", "--format", "csv"});
    EXPECT_EQ(r.out, "weight,multiplicity\n\"0,0\",1\n\"1,1\",1\n");
    r = run({"tensor", "--type", "a2", "--lambda", "1,1", "--mu", "1,1", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    long total = 0;
    for (const auto& e : j)
        total += e["multiplicity"].get<long>();
    EXPECT_EQ(total, 6);
    EXPECT_EQ(run({"tensor", "--type", "a2"}).code, 2);
}

TEST(VerifyAll, DeterministicAndValid)
{
    const std::vector<std::string> args{"verify-all", "--family", "lorentz", "--n", "4", "--samples", "30"};
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("summary: "), std::string::npos);
    EXPECT_NE(a.out.find(" 0 failed"), std::string::npos);

    const auto js = run({"verify-all", "--family", "octonionic", "--format", "json", "--samples", "30"});
    ASSERT_EQ(js.code, 0);
    const auto j = nlohmann::json::parse(js.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_TRUE(j["failures"].empty());
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c.contains("name"));
        EXPECT_EQ(c["status"], "PASS") << c["name"];
        EXPECT_TRUE(c.contains("detail"));
    }
}

TEST(General, ExitCodes)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"stalks", "--help"}).code, 0);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"verify-all", "--bogus"}).code, 2);
}
