#pragma once

// Molien series (1/|W|) sum_w 1/det(1 - t w) of a Weyl group acting on its
// reflection representation, summed exactly over the enumerated group.

#include <map>
#include <vector>

#include "satake/hilbert.hpp"
#include "satake/weyl_group.hpp"

namespace satake {

/// Coefficients of det(1 - t M), lowest degree first (Faddeev-LeVerrier).
inline IntPolynomial reversed_characteristic_polynomial(const IntMatrix& m)
{
    const std::size_t n = m.size();
    using RM = std::vector<std::vector<Rational>>;
    RM a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];
    // chi(s) = s^n + c_1 s^{n-1} + ... + c_n; det(1 - tM) = 1 + c_1 t + ... + c_n t^n.
    std::vector<Integer> out(n + 1);
    out[0] = 1;
    RM mk(n, std::vector<Rational>(n, Rational(0)));
    Rational c_prev = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        RM next(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t l = 0; l < n; ++l)
                    s += a[i][l] * mk[l][j];
                next[i][j] = s;
            }
            next[i][i] += c_prev;
        }
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                tr += a[i][l] * next[l][i];
        const Rational c = -tr / Rational(static_cast<long>(k));
        out[k] = to_integer(c);
        mk = std::move(next);
        c_prev = c;
    }
    return IntPolynomial(std::move(out));
}

inline constexpr long kMaxMolienOrder = 1152;

/// Molien series of W(type) on its reflection representation. Degenerate
/// labels give the trivial group on a space of dimension torus_rank().
inline HilbertSeries molien_series(const CartanType& type)
{
    if (!type.has_roots())
        return HilbertSeries::free_algebra(std::vector<int>(type.torus_rank(), 1));
    if (type.weyl_order_formula() > kMaxMolienOrder)
        throw Error("molien_series: |W(" + type.name() + ")| exceeds the enumeration cap");
    const RootSystem system(type);
    std::map<std::vector<Integer>, long> classes;
    long order = 0;
    for (const auto& w : weyl_elements(system)) {
        ++classes[reversed_characteristic_polynomial(w.matrix).coeffs()];
        ++order;
    }
    HilbertSeries sum(RatPolynomial(), {});
    for (const auto& [coeffs, count] : classes) {
        std::vector<Rational> c(coeffs.begin(), coeffs.end());
        sum = sum + HilbertSeries::fraction(RatPolynomial(Rational(count)), RatPolynomial(std::move(c)));
    }
    return sum * (Rational(1) / Rational(order));
}

} // namespace satake
