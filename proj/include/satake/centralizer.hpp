#pragma once

// The section e^T = p^T + e into the Borel of g_X-dual (sl2 or sl3), pointwise
// regularity of its centralizers, the G_m-equivariance identity
//   Ad_{(n_X rho-check)(x^-1)} e^T(x^-2 t) = x^-n_X e^T(t),
// and the map nu(g, t) = (Ad_{g^-1} e^T(t), t).
//
// p^T : t -> t_X-dual is modelled as a homogeneous map of degree n_X / 2,
// which is what the equivariance identity forces:
//   Lorentz      p^T(t) = t_1 t_2 ... t_{n-1}          (the D_{n-1} Pfaffian)
//   octonionic   p^T(t) = (t_1^3 t_2, t_3^3 t_4)        on the F4 Cartan
// For sl3 the image (s1, s2) sits on the diagonal as (s1, s2, -s1 - s2).

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "satake/laurent.hpp"
#include "satake/matrix.hpp"
#include "satake/parallel.hpp"
#include "satake/realform.hpp"

namespace satake {

/// Size of the defining representation of g_X-dual.
inline std::size_t matrix_size(const RealFormFamily& fam) { return fam.kind() == FamilyKind::Lorentz ? 2 : 3; }

/// Dimension of the Cartan t of K_R, the domain of p^T.
inline std::size_t domain_rank(const RealFormFamily& fam)
{
    return static_cast<std::size_t>(fam.inventory().K.type.rank);
}

template <typename T>
std::vector<T> p_T_generic(const RealFormFamily& fam, const std::vector<T>& t)
{
    if (t.size() != domain_rank(fam))
        throw Error("p^T: expected " + std::to_string(domain_rank(fam)) + " coordinates, got "
                    + std::to_string(t.size()));
    if (fam.kind() == FamilyKind::Lorentz) {
        T s(1);
        for (const auto& x : t)
            s = s * x;
        return {s};
    }
    return {t[0] * t[0] * t[0] * t[1], t[2] * t[2] * t[2] * t[3]};
}

inline RationalVector p_T(const RealFormFamily& fam, const RationalVector& t) { return p_T_generic(fam, t); }

struct CartanPoint {
    RationalVector t;
    RationalVector image;  // p^T(t)

    std::string str() const
    {
        std::string s = "t=(";
        for (std::size_t i = 0; i < t.size(); ++i)
            s += (i ? "," : "") + t[i].str();
        s += ") p=(";
        for (std::size_t i = 0; i < image.size(); ++i)
            s += (i ? "," : "") + image[i].str();
        return s + ")";
    }
};

inline CartanPoint cartan_point(const RealFormFamily& fam, RationalVector t)
{
    RationalVector img = p_T(fam, t);
    return {std::move(t), std::move(img)};
}

/// A point of t lying over a prescribed image in t_X-dual.
inline CartanPoint point_over(const RealFormFamily& fam, const RationalVector& image)
{
    if (image.size() != static_cast<std::size_t>(fam.dual_system().rank()))
        throw Error("point_over: image has the wrong number of coordinates");
    RationalVector t(domain_rank(fam), Rational(1));
    if (fam.kind() == FamilyKind::Lorentz) {
        t[0] = image[0];
    } else {
        t[1] = image[0];
        t[3] = image[1];
    }
    return cartan_point(fam, std::move(t));
}

/// Diagonal of the Cartan element with coordinates `image`.
template <typename T>
std::vector<T> cartan_diagonal(const RealFormFamily& fam, const std::vector<T>& image)
{
    if (fam.kind() == FamilyKind::Lorentz)
        return {image[0], T(0) - image[0]};
    return {image[0], image[1], T(0) - image[0] - image[1]};
}

/// diag(p) plus the regular nilpotent (ones on the superdiagonal).
template <typename T>
Matrix<T> e_section_generic(const RealFormFamily& fam, const std::vector<T>& image)
{
    Matrix<T> m = Matrix<T>::diagonal(cartan_diagonal(fam, image));
    for (std::size_t i = 0; i + 1 < m.rows(); ++i)
        m(i, i + 1) = T(1);
    return m;
}

inline RatMatrix e_section(const RealFormFamily& fam, const CartanPoint& pt) { return e_section_generic(fam, pt.image); }

inline RatMatrix regular_nilpotent(const RealFormFamily& fam)
{
    return e_section_generic(fam, RationalVector(fam.dual_system().rank(), Rational(0)));
}

/// Basis of sl_n: off-diagonal E_ij, then E_ii - E_{i+1,i+1}.
inline std::vector<RatMatrix> sl_basis(std::size_t n)
{
    std::vector<RatMatrix> b;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) {
                RatMatrix m(n, n);
                m(i, j) = 1;
                b.push_back(std::move(m));
            }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        RatMatrix m(n, n);
        m(i, i) = 1;
        m(i + 1, i + 1) = -1;
        b.push_back(std::move(m));
    }
    return b;
}

inline RatMatrix bracket(const RatMatrix& x, const RatMatrix& y) { return x * y - y * x; }

/// Matrix of y -> [x, y] from sl_n (basis sl_basis) into n x n matrices (flattened).
inline RatMatrix ad_matrix(const RatMatrix& x)
{
    if (!x.square())
        throw Error("ad: matrix must be square");
    if (x.trace() != 0)
        throw Error("ad: matrix must be traceless");
    const std::size_t n = x.rows();
    const auto basis = sl_basis(n);
    RatMatrix ad(n * n, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const RatMatrix c = bracket(x, basis[k]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                ad(i * n + j, k) = c(i, j);
    }
    return ad;
}

/// dim of the centralizer of x in sl_n (exact nullity of ad x).
inline std::size_t centralizer_dimension(const RatMatrix& x)
{
    const RatMatrix ad = ad_matrix(x);
    return ad.cols() - ad.rank();
}

inline std::vector<RatMatrix> centralizer_basis(const RatMatrix& x)
{
    const auto basis = sl_basis(x.rows());
    std::vector<RatMatrix> out;
    for (const auto& v : ad_matrix(x).nullspace()) {
        RatMatrix m(x.rows(), x.rows());
        for (std::size_t k = 0; k < v.size(); ++k)
            m = m + v[k] * basis[k];
        out.push_back(std::move(m));
    }
    return out;
}

inline bool centralizer_is_abelian(const RatMatrix& x)
{
    const auto b = centralizer_basis(x);
    const RatMatrix zero(x.rows(), x.rows());
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!(bracket(b[i], b[j]) == zero))
                return false;
    return true;
}

/// Random rational p/q with |p| <= 20, 1 <= q <= 12.
inline Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    const long p = num(rng);
    const long q = den(rng);
    return Rational(p, q);
}

/// Images in t_X-dual where p^T(t) has repeated eigenvalues, including 0.
inline std::vector<RationalVector> degenerate_images(const RealFormFamily& fam)
{
    if (fam.kind() == FamilyKind::Lorentz)
        return {{Rational(0)}};
    std::vector<RationalVector> out{{Rational(0), Rational(0)}};
    for (long a : {1L, -3L, 7L}) {
        const Rational s(a);
        out.push_back({s, s});                  // e1 = e2
        out.push_back({Rational(-2) * s, s});   // e2 = e3
        out.push_back({s, Rational(-2) * s});   // e1 = e3
    }
    return out;
}

/// Degenerate points first, then `random_count` seeded random points of t.
inline std::vector<CartanPoint> sample_points(const RealFormFamily& fam, std::size_t random_count, std::uint64_t seed)
{
    std::vector<CartanPoint> out;
    for (const auto& img : degenerate_images(fam))
        out.push_back(point_over(fam, img));
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_count; ++i) {
        RationalVector t(domain_rank(fam));
        for (auto& x : t)
            x = random_rational(rng);
        out.push_back(cartan_point(fam, std::move(t)));
    }
    return out;
}

struct RegularityReport {
    std::size_t samples = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Centralizer of e^T(t) has dimension rank(g_X-dual) and is abelian.
inline RegularityReport regularity_scan(const RealFormFamily& fam, const std::vector<CartanPoint>& samples)
{
    if (samples.empty())
        throw Error("regularity_scan: no samples");
    const std::size_t rank = static_cast<std::size_t>(fam.dual_system().rank());
    auto verdicts = parallel_map(samples.size(), [&](std::size_t i) -> std::string {
        const RatMatrix x = e_section(fam, samples[i]);
        const std::size_t dim = centralizer_dimension(x);
        if (dim != rank)
            return samples[i].str() + ": centralizer dimension " + std::to_string(dim);
        if (!centralizer_is_abelian(x))
            return samples[i].str() + ": centralizer is not abelian";
        return {};
    });
    RegularityReport r;
    r.samples = samples.size();
    for (auto& v : verdicts)
        if (!v.empty())
            r.failures.push_back(std::move(v));
    return r;
}

/// Exponents e_i with (n_X rho-check)(x) = diag(x^{e_1}, ..., x^{e_n}),
/// read off the simple-coroot coordinates of rho-check via
/// alpha_j-check = E_jj - E_{j+1,j+1}.
inline std::vector<long> cocharacter_exponents(const RealFormFamily& fam)
{
    const Coweight rc = fam.dual_system().rho_check();
    const std::size_t n = matrix_size(fam);
    std::vector<long> e(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational here = i < rc.coords.size() ? rc.coords[i] : Rational(0);
        const Rational prev = i > 0 ? rc.coords[i - 1] : Rational(0);
        e[i] = to_long(to_integer(Rational(fam.n_X()) * (here - prev)));
    }
    return e;
}

namespace detail {

template <typename T>
T power(const T& x, const T& x_inv, long k)
{
    T r(1);
    for (long i = 0; i < (k < 0 ? -k : k); ++i)
        r = r * (k < 0 ? x_inv : x);
    return r;
}

/// Both sides of the equivariance identity over a ring T containing x and 1/x.
template <typename T>
std::pair<Matrix<T>, Matrix<T>> equivariance_sides(const RealFormFamily& fam, const T& x, const T& x_inv,
                                                   const RationalVector& t)
{
    const T scale = x_inv * x_inv;
    std::vector<T> scaled;
    for (const auto& c : t)
        scaled.push_back(scale * T(c));
    const Matrix<T> moved = e_section_generic(fam, p_T_generic(fam, scaled));
    const auto e = cocharacter_exponents(fam);
    Matrix<T> lhs = moved;
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            lhs(i, j) = power(x, x_inv, e[j] - e[i]) * moved(i, j);  // D(x^-1) M D(x^-1)^-1
    std::vector<T> tt;
    for (const auto& c : t)
        tt.push_back(T(c));
    const Matrix<T> base = e_section_generic(fam, p_T_generic(fam, tt));
    const Matrix<T> rhs = power(x, x_inv, -fam.n_X()) * base;
    return {lhs, rhs};
}

} // namespace detail

inline bool gm_equivariance_check(const RealFormFamily& fam, const Rational& x, const CartanPoint& pt)
{
    if (x == 0)
        throw Error("gm_equivariance_check: x must be nonzero");
    const auto [lhs, rhs] = detail::equivariance_sides<Rational>(fam, x, Rational(1) / x, pt.t);
    return lhs == rhs;
}

/// The same identity with x a formal variable (Laurent polynomials in x).
inline bool gm_equivariance_symbolic(const RealFormFamily& fam, const CartanPoint& pt)
{
    const auto x = LaurentPolynomial::monomial(1);
    const auto x_inv = LaurentPolynomial::monomial(-1);
    const auto [lhs, rhs] = detail::equivariance_sides<LaurentPolynomial>(fam, x, x_inv, pt.t);
    return lhs == rhs;
}

/// Twenty nonzero rationals: +-1, +-2, +-1/2, +-3, +-1/3, +-3/2, +-2/3, +-5, +-1/5, +-5/2.
inline std::vector<Rational> scaling_grid()
{
    std::vector<Rational> out;
    for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {3, 2}, {2, 3}, {5, 1}, {1, 5}, {5, 2}}) {
        out.emplace_back(p, q);
        out.emplace_back(-p, q);
    }
    return out;
}

/// Every x in scaling_grid() against the first 20 sample points.
inline bool gm_equivariance_grid(const RealFormFamily& fam, std::uint64_t seed)
{
    const auto points = sample_points(fam, 20, seed);
    const auto xs = scaling_grid();
    auto rows = parallel_map(xs.size(), [&](std::size_t i) {
        for (std::size_t j = 0; j < 20; ++j)
            if (!gm_equivariance_check(fam, xs[i], points[points.size() - 20 + j]))
                return 0;
        return 1;
    });
    return std::all_of(rows.begin(), rows.end(), [](int ok) { return ok == 1; });
}

/// Characteristic-polynomial coefficients, constant term first.
inline RationalVector char_poly_coeffs(const RatMatrix& m) { return m.characteristic_polynomial(); }

/// nu(g, t) = (Ad_{g^-1} e^T(t), t); g must have determinant 1.
inline std::pair<RatMatrix, CartanPoint> nu_map(const RealFormFamily& fam, const RatMatrix& g, const CartanPoint& pt)
{
    if (!g.square() || g.rows() != matrix_size(fam))
        throw Error("nu_map: g has the wrong size");
    if (g.determinant() != 1)
        throw Error("nu_map: det(g) must be 1");
    return {g.inverse() * e_section(fam, pt) * g, pt};
}

/// A random element of SL_n: diagonal torus part times unipotent factors.
inline RatMatrix random_special_linear(std::size_t n, std::mt19937_64& rng)
{
    std::vector<Rational> d(n, Rational(1));
    Rational prod = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Rational a = random_rational(rng);
        if (a == 0)
            a = 1;
        d[i] = a;
        prod *= a;
    }
    d[n - 1] = Rational(1) / prod;
    RatMatrix upper = RatMatrix::identity(n);
    RatMatrix lower = RatMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            upper(i, j) = random_rational(rng);
            lower(j, i) = random_rational(rng);
        }
    return lower * RatMatrix::diagonal(d) * upper;
}

/// nu lands in the right fiber of the Chevalley map on `count` random (g, t).
inline bool nu_char_poly_check(const RealFormFamily& fam, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 0; i < count; ++i) {
        const RatMatrix g = random_special_linear(matrix_size(fam), rng);
        RationalVector t(domain_rank(fam));
        for (auto& x : t)
            x = random_rational(rng);
        const CartanPoint pt = cartan_point(fam, std::move(t));
        const auto [y, back] = nu_map(fam, g, pt);
        if (char_poly_coeffs(y) != char_poly_coeffs(e_section(fam, pt)) || back.t != pt.t)
            return false;
    }
    return true;
}

struct CentralizerReport {
    RegularityReport regularity;
    bool equivariance = false;
    bool equivariance_symbolic = false;
    bool nu_char_poly = false;

    bool passed() const { return regularity.passed() && equivariance && equivariance_symbolic && nu_char_poly; }
};

inline CentralizerReport centralizer_suite(const RealFormFamily& fam, std::size_t samples, std::uint64_t seed)
{
    CentralizerReport r;
    r.regularity = regularity_scan(fam, sample_points(fam, samples, seed));
    r.equivariance = gm_equivariance_grid(fam, seed);
    r.equivariance_symbolic = gm_equivariance_symbolic(fam, sample_points(fam, 1, seed).back());
    r.nu_char_poly = nu_char_poly_check(fam, 50, seed);
    return r;
}

/// {family, samples, failures, equivariance, ...}.
inline nlohmann::json centralizer_report_json(const RealFormFamily& fam, const CentralizerReport& r)
{
    return {{"family", family_to_json(fam)},
            {"samples", r.regularity.samples},
            {"failures", r.regularity.failures},
            {"equivariance", r.equivariance},
            {"equivariance_symbolic", r.equivariance_symbolic},
            {"nu_char_poly", r.nu_char_poly}};
}

} // namespace satake
