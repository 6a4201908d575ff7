#include <gtest/gtest.h>

#include "oracles.hpp"
#include "satake/graded.hpp"

using namespace satake;

namespace {

RatPolynomial poly(std::vector<Rational> c) { return RatPolynomial(std::move(c)); }

} // namespace

TEST(InvariantDegrees, Table)
{
    EXPECT_EQ(invariant_degrees("A2"), GradedDegrees({2, 3}));
    EXPECT_EQ(invariant_degrees("B3"), GradedDegrees({2, 4, 6}));
    EXPECT_EQ(invariant_degrees("D4"), GradedDegrees({2, 4, 4, 6}));
    EXPECT_EQ(invariant_degrees("E6"), GradedDegrees({2, 5, 6, 8, 9, 12}));
    EXPECT_EQ(invariant_degrees("F4"), GradedDegrees({2, 6, 8, 12}));
    EXPECT_EQ(invariant_degrees("G2"), GradedDegrees({2, 6}));
    EXPECT_EQ(invariant_degrees(CartanType{Family::D, 1}), GradedDegrees({1}));
    EXPECT_EQ(invariant_degrees(CartanType{Family::B, 0}).size(), 0u);
    EXPECT_EQ(invariant_degrees("D4").str(), "{2,4,4,6}");
}

TEST(InvariantDegrees, RejectsNonPositiveDegrees)
{
    EXPECT_THROW(GradedDegrees({2, 0}), Error);
    EXPECT_THROW(GradedDegrees({-1}), Error);
    EXPECT_EQ(GradedDegrees({6, 2, 4}).degrees(), (std::vector<int>{2, 4, 6}));
}

TEST(Shift, Examples)
{
    EXPECT_EQ(shifted(GradedDegrees({2, 3}), 8), GradedDegrees({16, 24}));
    EXPECT_EQ(shifted(linear_coordinates(2), 8), GradedDegrees({8, 8}));
    EXPECT_EQ(shifted(GradedDegrees({2, 6}), 1), GradedDegrees({2, 6}));
    const GradedDegrees g({2, 5, 6});
    EXPECT_EQ(shifted(shifted(g, 2), 4), shifted(g, 8));
    EXPECT_THROW(shifted(g, 0), Error);
    EXPECT_THROW(shifted(g, -2), Error);
}

TEST(Molien, MatchesSignedPermutationOracle)
{
    for (int n = 1; n <= 4; ++n)
        EXPECT_EQ(molien_series({Family::B, n}), oracle::molien_signed_permutations(n, false)) << "B" << n;
    for (int n = 2; n <= 4; ++n)
        EXPECT_EQ(molien_series({Family::D, n}), oracle::molien_signed_permutations(n, true)) << "D" << n;
}

TEST(Molien, MatchesSymmetricGroupAndDihedralOracles)
{
    for (int r = 1; r <= 3; ++r)
        EXPECT_EQ(molien_series({Family::A, r}), oracle::molien_symmetric_group(r)) << "A" << r;
    EXPECT_EQ(molien_series({Family::G, 2}), oracle::molien_dihedral12());
}

TEST(Molien, OraclesAgreeWithDegreeTable)
{
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(oracle::molien_signed_permutations(n, false), invariant_degrees(CartanType{Family::B, n}).hilbert_series());
        if (n >= 2) {
            EXPECT_EQ(oracle::molien_signed_permutations(n, true), invariant_degrees(CartanType{Family::D, n}).hilbert_series());
        }
    }
    for (int r = 1; r <= 3; ++r)
        EXPECT_EQ(oracle::molien_symmetric_group(r), invariant_degrees(CartanType{Family::A, r}).hilbert_series());
    EXPECT_EQ(oracle::molien_dihedral12(), invariant_degrees("G2").hilbert_series());
}

TEST(Molien, LargerGroups)
{
    EXPECT_TRUE(invariant_degrees_check({Family::F, 4}));
    EXPECT_EQ(molien_series({Family::F, 4}), invariant_degrees("F4").hilbert_series());
    EXPECT_THROW(molien_series({Family::E, 6}), Error);
    // E6 is checked by the product and sum identities.
    EXPECT_TRUE(shephard_todd_check({Family::E, 6}));
    EXPECT_TRUE(invariant_degrees_check({Family::E, 6}));
    EXPECT_TRUE(invariant_degrees_check({Family::D, 1}));
    EXPECT_TRUE(invariant_degrees_check({Family::B, 0}));
    for (int n = 1; n <= 6; ++n)
        EXPECT_TRUE(shephard_todd_check({Family::B, n}));
}

TEST(Molien, CharacteristicPolynomial)
{
    // Rotation by 90 degrees: det(1 - tM) = 1 + t^2.
    const IntMatrix rot{{0, -1}, {1, 0}};
    EXPECT_EQ(reversed_characteristic_polynomial(rot), IntPolynomial(std::vector<Integer>{1, 0, 1}));
    const IntMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    EXPECT_EQ(reversed_characteristic_polynomial(id), IntPolynomial(std::vector<Integer>{1, -3, 3, -1}));
}

TEST(HilbertSeries, FreeAlgebraFormatting)
{
    EXPECT_EQ(HilbertSeries::free_algebra({2, 6}).str(), "(1) / (1 - t^2 - t^6 + t^8)");
    EXPECT_EQ(HilbertSeries::free_algebra({}).str(), "(1) / (1)");
    const auto coeffs = HilbertSeries::free_algebra({1, 2}).expand(6);
    const std::vector<Rational> expected{1, 1, 2, 2, 3, 3, 4};
    EXPECT_EQ(coeffs, expected);
    EXPECT_THROW(HilbertSeries::free_algebra({0}), Error);
}

TEST(HilbertSeries, Arithmetic)
{
    const RatPolynomial one(Rational(1));
    const auto a = HilbertSeries::fraction(one, poly({1, -1}));
    const auto b = HilbertSeries::fraction(one, poly({1, 1}));
    EXPECT_EQ(a * b, HilbertSeries::free_algebra({2}));
    // 1/(1-t) + 1/(1+t) = 2/(1-t^2).
    EXPECT_EQ(a + b, HilbertSeries::free_algebra({2}) * Rational(2));
    EXPECT_EQ(HilbertSeries::free_algebra({1, 2}) / HilbertSeries::free_algebra({1}), HilbertSeries::free_algebra({2}));
    // (1 + t^2) / (1 - t^4) reduces to 1 / (1 - t^2).
    EXPECT_EQ(HilbertSeries::fraction(poly({1, 0, 1}), poly({1, 0, 0, 0, -1})), HilbertSeries::free_algebra({2}));
    EXPECT_THROW(HilbertSeries::fraction(one, poly({1, -2})), Error);
    EXPECT_THROW(a / HilbertSeries(RatPolynomial(), {}), Error);
    const auto [n, d] = (a + b).integer_fraction();
    EXPECT_EQ(n, IntPolynomial(Integer(2)));
    EXPECT_EQ(d, IntPolynomial(std::vector<Integer>{1, 0, -1}));
}

TEST(HilbertSeries, CyclotomicFactoring)
{
    EXPECT_EQ(cyclotomic(1), IntPolynomial(std::vector<Integer>{-1, 1}));
    EXPECT_EQ(cyclotomic(6), IntPolynomial(std::vector<Integer>{1, -1, 1}));
    const auto [exps, rest] = factor_cyclotomic(one_minus_t_power<Rational>(12));
    EXPECT_EQ(exps, (CyclotomicExponents{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}, {12, 1}}));
    EXPECT_EQ(rest, RatPolynomial(Rational(-1)));
    EXPECT_THROW(cyclotomic(0), Error);
}

TEST(DegreeMultisets, Octonionic)
{
    const auto r = degree_multiset_check(RealFormFamily::octonionic());
    EXPECT_TRUE(r.all());
    EXPECT_EQ(r.cohomology_K, GradedDegrees({4, 12, 16, 24}));
    EXPECT_EQ(r.cohomology_M, GradedDegrees({4, 8, 8, 12}));
    EXPECT_EQ(r.dual_side_K, GradedDegrees({4, 12, 16, 24}));
    EXPECT_EQ(r.dual_side_M, GradedDegrees({4, 8, 8, 12}));
}

TEST(DegreeMultisets, LorentzFamily)
{
    for (int n = 2; n <= 12; ++n) {
        const auto r = degree_multiset_check(RealFormFamily::lorentz(n));
        EXPECT_TRUE(r.part1_K) << n;
        EXPECT_TRUE(r.part1_M) << n;
        EXPECT_TRUE(r.part2_M) << n;
        EXPECT_TRUE(r.part2_K) << n;
        std::vector<int> k;
        for (int i = 1; i <= n - 1; ++i)
            k.push_back(4 * i);
        EXPECT_EQ(r.cohomology_K, GradedDegrees(k)) << n;
    }
    const auto r5 = degree_multiset_check(RealFormFamily::lorentz(5));
    EXPECT_EQ(r5.cohomology_M, GradedDegrees({4, 8, 8, 12}));
}

TEST(ExtAlgebra, Degrees)
{
    EXPECT_EQ(ext_algebra_degrees(RealFormFamily::octonionic()),
              GradedDegrees({4, 8, 8, 8, 8, 8, 8, 8, 8, 12}));
    EXPECT_EQ(ext_algebra_degrees(RealFormFamily::lorentz(5)), GradedDegrees({4, 8, 8, 8, 8, 12}));
    EXPECT_EQ(ext_algebra_degrees(RealFormFamily::lorentz(2)), GradedDegrees({2, 2, 2}));
}

TEST(ExtAlgebra, HilbertIdentity)
{
    EXPECT_TRUE(ext_fiberproduct_hilbert_check(RealFormFamily::octonionic()));
    for (int n = 2; n <= 12; ++n)
        EXPECT_TRUE(ext_fiberproduct_hilbert_check(RealFormFamily::lorentz(n))) << n;
}

TEST(ExtAlgebra, IdentityRejectsWrongDegrees)
{
    const auto o = RealFormFamily::octonionic();
    // Dropping the L_X invariants breaks the identity.
    EXPECT_FALSE(ext_fiberproduct_hilbert_check(o, shifted(linear_coordinates(8), 8)));
    EXPECT_FALSE(ext_fiberproduct_hilbert_check(o, GradedDegrees({4, 8, 8, 8, 8, 8, 8, 8, 8, 8})));
    EXPECT_FALSE(ext_fiberproduct_hilbert_check(RealFormFamily::lorentz(4), GradedDegrees({6, 6, 6, 4})));
}

TEST(Report, JsonKeys)
{
    const auto j = graded_report_json(RealFormFamily::octonionic());
    EXPECT_EQ(j["family"]["family"], "octonionic");
    for (const char* k : {"part1_K", "part1_M", "part2_M", "part2_K", "ext_hilbert"})
        EXPECT_TRUE(j["checks"][k].get<bool>()) << k;
    EXPECT_EQ(j["degree_multisets"]["ext"].size(), 10u);
    EXPECT_EQ(j["degree_multisets"]["cohomology_K"], nlohmann::json::parse("[4,12,16,24]"));
    // Denominator (1 - t^4)(1 - t^8)^8 (1 - t^12) starts at 1, numerator is 1.
    EXPECT_EQ(j["hilbert_series"]["num"], nlohmann::json::parse("[1]"));
    EXPECT_EQ(j["hilbert_series"]["den"][0], 1);
    EXPECT_EQ(j["hilbert_series"]["den"].size(), 4u + 64 + 12 + 1);
}
