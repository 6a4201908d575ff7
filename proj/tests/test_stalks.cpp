#include <cstdlib>

#include <gtest/gtest.h>

#include "satake/stalks.hpp"

using namespace satake;

TEST(StalkPolynomial, OctonionicAdjoint)
{
    const auto o = RealFormFamily::octonionic();
    // (2,1) maps to the adjoint weight (1,1) of SL3; K = q + q^2.
    const auto r = stalk_polynomial(o, {{2, 1}}, {{0, 0}});
    EXPECT_FALSE(r.diagnostic);
    EXPECT_EQ(r.stalks, (StalkDegrees{{-32, 1}, {-24, 1}}));
    EXPECT_EQ(stalk_polynomial(o, {{2, 1}}, {{2, 1}}).stalks, (StalkDegrees{{-16, 1}}));
}

TEST(StalkPolynomial, Lorentz)
{
    const auto l = RealFormFamily::lorentz(5);
    // K_{m,k} = q^{(m-k)/2}: a single degree -8 (m-k)/2 - 4 m.
    for (long m = 0; m <= 10; ++m)
        for (long k = m % 2; k <= m; k += 2)
            EXPECT_EQ(stalk_polynomial(l, {{m}}, {{k}}).stalks, (StalkDegrees{{-8 * (m - k) / 2 - 4 * m, 1}}));
    EXPECT_EQ(stalk_polynomial(RealFormFamily::lorentz(2), {{2}}, {{0}}).stalks, (StalkDegrees{{-4, 1}}));
}

TEST(StalkPolynomial, NotBelowGivesDiagnostic)
{
    const auto l = RealFormFamily::lorentz(4);
    const auto r = stalk_polynomial(l, {{1}}, {{3}});
    EXPECT_TRUE(r.stalks.empty());
    ASSERT_TRUE(r.diagnostic);
    EXPECT_NE(r.diagnostic->find("not <="), std::string::npos);
    const auto o = RealFormFamily::octonionic();
    EXPECT_TRUE(stalk_polynomial(o, {{1, 0}}, {{0, 0}}).diagnostic);
    EXPECT_THROW(stalk_polynomial(o, {{1, -1}}, {{0, 0}}), Error);
}

TEST(StalkPolynomial, SubstitutionView)
{
    const auto l = RealFormFamily::lorentz(5);
    EXPECT_EQ(q_substitution_view(l, {{4}}, {{0}}).str(), "q^8");
    const auto o = RealFormFamily::octonionic();
    EXPECT_EQ(q_substitution_view(o, {{2, 1}}, {{0, 0}}).str(), "q^4 + q^8");
    EXPECT_EQ(q_substitution_view(o, {{1, 0}}, {{1, 1}}).str(), "0");
}

TEST(StalkTable, SweepContainsExactlyTheDominatedPairs)
{
    const auto l = RealFormFamily::lorentz(3);
    const auto t = stalk_table(l, 5);
    // Pairs (m, k) with k <= m, k = m mod 2: sum over m of floor(m/2) + 1.
    EXPECT_EQ(t.entries().size(), 1u + 1 + 2 + 2 + 3 + 3);
    const auto o = RealFormFamily::octonionic();
    const auto to = stalk_table(o, 2);
    EXPECT_EQ(to.entries().size(), 9u);
    EXPECT_THROW(stalk_table(o, -1), Error);
}

TEST(StalkTable, IdentityChecks)
{
    for (int n = 2; n <= 12; ++n) {
        const auto t = stalk_table(RealFormFamily::lorentz(n), 12);
        EXPECT_TRUE(parity_check(t)) << n;
        EXPECT_TRUE(support_window_check(t)) << n;
        EXPECT_TRUE(degree_span_check(t)) << n;
        EXPECT_TRUE(substitution_check(t)) << n;
    }
    const auto t = stalk_table(RealFormFamily::octonionic(), 8);
    EXPECT_TRUE(parity_check(t));
    EXPECT_TRUE(support_window_check(t));
    EXPECT_TRUE(degree_span_check(t));
    EXPECT_TRUE(substitution_check(t));
}

TEST(StalkTable, ChecksDetectCorruption)
{
    auto t = stalk_table(RealFormFamily::octonionic(), 3);
    auto bad = t;
    bad.entries().begin()->second[-3] = 1;  // wrong residue mod 8
    EXPECT_FALSE(parity_check(bad));
    auto out_of_window = t;
    out_of_window.entries().begin()->second[8] = 1;
    EXPECT_FALSE(support_window_check(out_of_window));
    auto missing_top = t;
    missing_top.entries().at({RealWeight{{2, 1}}, RealWeight{{2, 1}}}).clear();
    EXPECT_FALSE(degree_span_check(missing_top));
}

TEST(StalkTable, DegreesNeedNotFillTheResidueClass)
{
    // lambda = 3 omega_1 of SL3: K = 1, q, q^3 over the three mu, so degree -40
    // never occurs although the span is the full window.
    const auto o = RealFormFamily::octonionic();
    const auto t = stalk_table(o, 3);
    std::set<long> degrees;
    for (const auto& [key, stalks] : t.entries())
        if (key.first == RealWeight{{3, 0}})
            for (const auto& [d, dim] : stalks)
                degrees.insert(d);
    EXPECT_EQ(degrees, (std::set<long>{-48, -32, -24}));
}

TEST(StalkTable, ParallelSweepIsDeterministic)
{
    const auto o = RealFormFamily::octonionic();
    ::setenv("SATAKE_KIT_THREADS", "1", 1);
    const std::string serial = table_to_csv(stalk_table(o, 5));
    ::setenv("SATAKE_KIT_THREADS", "4", 1);
    const std::string parallel = table_to_csv(stalk_table(o, 5));
    ::unsetenv("SATAKE_KIT_THREADS");
    EXPECT_EQ(serial, parallel);
}

TEST(Output, CsvFormat)
{
    const auto o = RealFormFamily::octonionic();
    const auto t = stalk_table(o, 1);
    EXPECT_EQ(table_to_csv(t), "lambda,mu,degree,dim\n"
                               "\"0,0\",\"0,0\",0,1\n"
                               "\"1,0\",\"1,0\",-8,1\n"
                               "\"1,1\",\"1,1\",-8,1\n");
    const auto l = stalk_table(RealFormFamily::lorentz(5), 2);
    EXPECT_EQ(table_to_csv(l), "lambda,mu,degree,dim\n0,0,0,1\n1,1,-4,1\n2,0,-16,1\n2,2,-8,1\n");
    EXPECT_EQ(table_to_csv(l, DegreeConvention::shifted),
              "lambda,mu,degree,dim\n0,0,0,1\n1,1,0,1\n2,0,-8,1\n2,2,0,1\n");
}

TEST(Output, JsonSchema)
{
    const auto o = RealFormFamily::octonionic();
    const auto j = stalks_to_json(o, {{2, 1}}, {{0, 0}}, stalk_polynomial(o, {{2, 1}}, {{0, 0}}).stalks);
    EXPECT_EQ(j["family"]["family"], "octonionic");
    EXPECT_EQ(j["lambda"], nlohmann::json::parse("[2,1]"));
    EXPECT_EQ(j["mu"], nlohmann::json::parse("[0,0]"));
    ASSERT_EQ(j["stalks"].size(), 2u);
    EXPECT_EQ(j["stalks"][0]["degree"], -32);
    EXPECT_EQ(j["stalks"][0]["dim"], 1);
    const auto arr = table_to_json(stalk_table(RealFormFamily::lorentz(3), 2));
    ASSERT_TRUE(arr.is_array());
    for (const auto& e : arr) {
        EXPECT_TRUE(e.contains("family"));
        EXPECT_TRUE(e["lambda"].is_number_integer());
        EXPECT_TRUE(e["stalks"].is_array());
    }
}

TEST(Conventions, ShiftedPutsOpenStratumInDegreeZero)
{
    const auto o = RealFormFamily::octonionic();
    const auto table = stalk_table(o, 4);
    for (const auto& [key, stalks] : table.entries()) {
        if (key.first != key.second)
            continue;
        const auto s = apply_convention(o, key.first, stalks, DegreeConvention::shifted);
        EXPECT_EQ(s, (StalkDegrees{{0, 1}}));
    }
}
