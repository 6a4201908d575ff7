#include <gtest/gtest.h>

#include "satake/centralizer.hpp"

using namespace satake;

namespace {

RatMatrix mat(std::vector<std::vector<Rational>> rows) { return RatMatrix(std::move(rows)); }

/// Both sides of Ad_{(n_X rho-check)(x^-1)} e^T(x^-k t) = x^-n_X e^T(t), with
/// the conjugation done as an explicit product D M D^-1.
bool scaled_identity(const RealFormFamily& fam, const Rational& x, const RationalVector& t, long k)
{
    RationalVector scaled;
    for (const auto& c : t)
        scaled.push_back(c * ipow(Rational(1) / x, k));
    const auto e = cocharacter_exponents(fam);
    std::vector<Rational> d;
    for (long ei : e)
        d.push_back(ipow(Rational(1) / x, ei));
    const RatMatrix dm = RatMatrix::diagonal(d);
    const RatMatrix lhs = dm * e_section(fam, cartan_point(fam, scaled)) * dm.inverse();
    const RatMatrix rhs = ipow(x, -fam.n_X()) * e_section(fam, cartan_point(fam, t));
    return lhs == rhs;
}

} // namespace

TEST(Section, PTExamples)
{
    const auto l = RealFormFamily::lorentz(5);
    EXPECT_EQ(p_T(l, {1, 2, 3, Rational(1, 2)}), (RationalVector{3}));
    EXPECT_THROW(p_T(l, {1, 2}), Error);
    const auto o = RealFormFamily::octonionic();
    EXPECT_EQ(p_T(o, {1, 2, 2, 3}), (RationalVector{2, 24}));
    EXPECT_EQ(point_over(o, {5, -7}).image, (RationalVector{5, -7}));
    EXPECT_EQ(point_over(l, {Rational(2, 3)}).image, (RationalVector{Rational(2, 3)}));
    EXPECT_THROW(point_over(o, {1}), Error);
}

TEST(Section, Matrices)
{
    const auto l = RealFormFamily::lorentz(5);
    EXPECT_EQ(e_section(l, cartan_point(l, {1, 2, 3, 1})), mat({{6, 1}, {0, -6}}));
    const auto o = RealFormFamily::octonionic();
    EXPECT_EQ(e_section(o, point_over(o, {2, 3})), mat({{2, 1, 0}, {0, 3, 1}, {0, 0, -5}}));
    EXPECT_EQ(regular_nilpotent(o), mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
    EXPECT_EQ(e_section(o, point_over(o, {2, 3})).trace(), 0);
}

TEST(Centralizer, Dimensions)
{
    EXPECT_EQ(centralizer_dimension(mat({{0, 1}, {0, 0}})), 1u);
    EXPECT_EQ(centralizer_dimension(RatMatrix(2, 2)), 3u);
    EXPECT_EQ(centralizer_dimension(RatMatrix(3, 3)), 8u);
    EXPECT_EQ(centralizer_dimension(RatMatrix::diagonal({1, 2, -3})), 2u);
    // Repeated eigenvalue without a nilpotent part: s(gl2 x gl1).
    EXPECT_EQ(centralizer_dimension(RatMatrix::diagonal({1, 1, -2})), 4u);
    EXPECT_EQ(centralizer_dimension(mat({{1, 1, 0}, {0, 1, 0}, {0, 0, -2}})), 2u);
    EXPECT_THROW(ad_matrix(RatMatrix(2, 3)), Error);
    EXPECT_THROW(ad_matrix(RatMatrix::identity(2)), Error);
    EXPECT_EQ(sl_basis(3).size(), 8u);
}

TEST(Centralizer, Abelian)
{
    EXPECT_TRUE(centralizer_is_abelian(mat({{0, 1}, {0, 0}})));
    EXPECT_FALSE(centralizer_is_abelian(RatMatrix(2, 2)));
    EXPECT_FALSE(centralizer_is_abelian(RatMatrix::diagonal({1, 1, -2})));
    const auto b = centralizer_basis(mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
    ASSERT_EQ(b.size(), 2u);
    for (const auto& m : b)
        EXPECT_EQ(bracket(m, mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})), RatMatrix(3, 3));
}

TEST(Regularity, DegeneratePointsComeFirst)
{
    const auto o = RealFormFamily::octonionic();
    const auto pts = sample_points(o, 5, 3);
    ASSERT_EQ(pts.size(), degenerate_images(o).size() + 5);
    EXPECT_EQ(pts[0].image, (RationalVector{0, 0}));
    for (std::size_t i = 0; i < degenerate_images(o).size(); ++i) {
        const auto d = cartan_diagonal(o, pts[i].image);
        EXPECT_TRUE(d[0] == d[1] || d[1] == d[2] || d[0] == d[2]) << pts[i].str();
    }
    EXPECT_EQ(sample_points(RealFormFamily::lorentz(3), 0, 1).size(), 1u);
}

TEST(Regularity, AllFamilies)
{
    for (int n = 2; n <= 12; ++n) {
        const auto f = RealFormFamily::lorentz(n);
        const auto r = regularity_scan(f, sample_points(f, 100, 11));
        EXPECT_TRUE(r.passed()) << n;
        EXPECT_EQ(r.samples, 101u);
    }
    const auto o = RealFormFamily::octonionic();
    const auto r = regularity_scan(o, sample_points(o, 100, 11));
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_THROW(regularity_scan(o, {}), Error);
}

TEST(Sampling, SeedDeterminism)
{
    const auto o = RealFormFamily::octonionic();
    const auto a = sample_points(o, 10, 42);
    const auto b = sample_points(o, 10, 42);
    const auto c = sample_points(o, 10, 43);
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_EQ(a[i].t, b[i].t);
    EXPECT_NE(a.back().t, c.back().t);
}

TEST(Equivariance, Cocharacter)
{
    EXPECT_EQ(cocharacter_exponents(RealFormFamily::lorentz(5)), (std::vector<long>{4, -4}));
    EXPECT_EQ(cocharacter_exponents(RealFormFamily::lorentz(2)), (std::vector<long>{1, -1}));
    EXPECT_EQ(cocharacter_exponents(RealFormFamily::octonionic()), (std::vector<long>{8, 0, -8}));
}

TEST(Equivariance, Grid)
{
    EXPECT_EQ(scaling_grid().size(), 20u);
    EXPECT_TRUE(gm_equivariance_grid(RealFormFamily::octonionic(), 1));
    for (int n = 2; n <= 12; ++n)
        EXPECT_TRUE(gm_equivariance_grid(RealFormFamily::lorentz(n), 1)) << n;
    const auto o = RealFormFamily::octonionic();
    EXPECT_THROW(gm_equivariance_check(o, 0, point_over(o, {1, 1})), Error);
}

TEST(Equivariance, Symbolic)
{
    const auto o = RealFormFamily::octonionic();
    for (const auto& pt : sample_points(o, 5, 9))
        EXPECT_TRUE(gm_equivariance_symbolic(o, pt)) << pt.str();
    for (int n = 2; n <= 12; ++n) {
        const auto f = RealFormFamily::lorentz(n);
        EXPECT_TRUE(gm_equivariance_symbolic(f, sample_points(f, 1, 9).back())) << n;
    }
}

TEST(Equivariance, IndependentCheckAndWrongScaling)
{
    const auto o = RealFormFamily::octonionic();
    const auto l = RealFormFamily::lorentz(6);
    const RationalVector to{Rational(3, 2), -2, 5, Rational(1, 7)};
    const RationalVector tl{2, -1, Rational(1, 3), 4, 3};
    for (const auto& x : scaling_grid()) {
        EXPECT_TRUE(scaled_identity(o, x, to, 2));
        EXPECT_TRUE(scaled_identity(l, x, tl, 2));
        if (x == 1 || x == -1)
            continue;
        // Scaling t by x^-1 instead of x^-2 breaks the identity.
        EXPECT_FALSE(scaled_identity(o, x, to, 1)) << x;
        EXPECT_FALSE(scaled_identity(l, x, tl, 1)) << x;
    }
}

TEST(NuMap, IdentityAndErrors)
{
    const auto o = RealFormFamily::octonionic();
    const auto pt = point_over(o, {2, 3});
    const auto [y, back] = nu_map(o, RatMatrix::identity(3), pt);
    EXPECT_EQ(y, e_section(o, pt));
    EXPECT_EQ(back.t, pt.t);
    EXPECT_THROW(nu_map(o, RatMatrix::diagonal({2, 1, 1}), pt), Error);
    EXPECT_THROW(nu_map(o, RatMatrix::identity(2), pt), Error);
    const RatMatrix g = mat({{1, 2, 0}, {0, 1, 0}, {3, 0, 1}});
    ASSERT_EQ(g.determinant(), 1);
    EXPECT_EQ(char_poly_coeffs(nu_map(o, g, pt).first), char_poly_coeffs(e_section(o, pt)));
}

TEST(NuMap, CharacteristicPolynomialPreserved)
{
    EXPECT_TRUE(nu_char_poly_check(RealFormFamily::octonionic(), 50, 5));
    for (int n = 2; n <= 12; ++n)
        EXPECT_TRUE(nu_char_poly_check(RealFormFamily::lorentz(n), 50, 5)) << n;
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i)
        EXPECT_EQ(random_special_linear(3, rng).determinant(), 1);
}

TEST(Suite, ReportJson)
{
    const auto o = RealFormFamily::octonionic();
    const auto r = centralizer_suite(o, 100, 1);
    EXPECT_TRUE(r.passed());
    const auto j = centralizer_report_json(o, r);
    EXPECT_EQ(j["samples"], 110);
    EXPECT_TRUE(j["failures"].empty());
    EXPECT_TRUE(j["equivariance"].get<bool>());
    EXPECT_TRUE(j["equivariance_symbolic"].get<bool>());
    EXPECT_TRUE(j["nu_char_poly"].get<bool>());
}

TEST(Matrix, Basics)
{
    const RatMatrix a = mat({{1, 2}, {3, 4}});
    EXPECT_EQ(a.determinant(), -2);
    EXPECT_EQ(a * a.inverse(), RatMatrix::identity(2));
    EXPECT_EQ(a.characteristic_polynomial(), (std::vector<Rational>{-2, -5, 1}));
    EXPECT_EQ(a.rank(), 2u);
    const RatMatrix s = mat({{1, 2, 3}, {2, 4, 6}});
    EXPECT_EQ(s.rank(), 1u);
    EXPECT_EQ(s.nullspace().size(), 2u);
    for (const auto& v : s.nullspace())
        EXPECT_EQ(v[0] + 2 * v[1] + 3 * v[2], 0);
    EXPECT_THROW(mat({{1, 2}, {2, 4}}).inverse(), Error);
    EXPECT_THROW(a + s, Error);
    EXPECT_EQ(RatMatrix::diagonal({1, 2}).str(), "[[1, 0], [0, 2]]");
}

TEST(Laurent, Arithmetic)
{
    const auto x = LaurentPolynomial::monomial(1);
    const auto xi = LaurentPolynomial::monomial(-1);
    const auto s = (x + xi) * (x + xi);
    EXPECT_EQ(s.str(), "x^-2 + 2 + x^2");
    EXPECT_EQ(s.evaluate(2), Rational(25, 4));
    EXPECT_EQ(s / x, LaurentPolynomial::monomial(-3) + LaurentPolynomial(2) * xi + x);
    EXPECT_EQ(x * xi, 1);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_THROW(s / (x + xi), Error);
}
