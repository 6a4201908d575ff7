#pragma once

// Lusztig's q-analogue of weight multiplicity through the q-Kostant
// partition function.

#include <vector>

#include "satake/qpolynomial.hpp"
#include "satake/root_system.hpp"
#include "satake/weyl_group.hpp"

namespace satake {

inline bool is_rank_one_or_two_type_a(const CartanType& t)
{
    return t.family == Family::A && (t.rank == 1 || t.rank == 2);
}

namespace detail {

/// Coefficient of q^N counts the ways of writing beta (simple-root
/// coordinates) as a sum of exactly N positive roots. Works for any type.
inline QPolynomial kostant_dp(const RootSystem& system, const IntVector& beta)
{
    for (long b : beta)
        if (b < 0)
            return {};
    const int r = system.rank();
    std::vector<std::size_t> stride(r);
    std::size_t cells = 1;
    for (int i = 0; i < r; ++i) {
        stride[i] = cells;
        cells *= static_cast<std::size_t>(beta[i] + 1);
    }
    long height = 0;
    for (long b : beta)
        height += b;

    // table[cell][n] = number of multisets of n positive roots summing to cell
    std::vector<std::vector<Integer>> table(cells, std::vector<Integer>(height + 1, Integer(0)));
    table[0][0] = 1;
    IntVector coord(r);
    for (const auto& alpha : system.positive_roots()) {
        std::size_t offset = 0;
        bool fits = true;
        for (int i = 0; i < r; ++i) {
            if (alpha[i] > beta[i])
                fits = false;
            offset += stride[i] * static_cast<std::size_t>(alpha[i]);
        }
        if (!fits)
            continue;
        for (std::size_t cell = 0; cell < cells; ++cell) {
            std::size_t rem = cell;
            bool ok = true;
            for (int i = r - 1; i >= 0; --i) {
                coord[i] = static_cast<long>(rem / stride[i]);
                rem %= stride[i];
                ok = ok && coord[i] >= alpha[i];
            }
            if (!ok)
                continue;
            const auto& src = table[cell - offset];
            auto& dst = table[cell];
            for (long n = 0; n < height; ++n)
                if (src[n] != 0)
                    dst[n + 1] += src[n];
        }
    }
    QPolynomial p;
    const auto& top = table[cells - 1];
    for (long n = 0; n <= height; ++n)
        p.add_term(static_cast<unsigned>(n), top[n]);
    return p;
}

} // namespace detail

/// q-weighted Kostant partition function P_q(beta) for A1 and A2.
inline QPolynomial q_kostant(const RootSystem& system, const Weight& beta)
{
    if (!is_rank_one_or_two_type_a(system.type()))
        throw Error("q_kostant: unsupported system " + system.type().name());
    IntVector c;
    if (!system.in_root_lattice(beta, &c))
        throw Error("q_kostant: " + beta.str() + " is not in the root lattice");
    return detail::kostant_dp(system, c);
}

/// Kostka-Foulkes polynomial K_{lambda,mu}(q) by Lusztig's alternating sum
/// over all of W (no chamber shortcuts).
inline QPolynomial kostka_foulkes(const RootSystem& system, const Weight& lambda, const Weight& mu)
{
    if (!is_rank_one_or_two_type_a(system.type()))
        throw Error("kostka_foulkes: unsupported system " + system.type().name());
    system.check(lambda);
    system.check(mu);
    if (!lambda.is_dominant() || !mu.is_dominant())
        throw Error("kostka_foulkes: weights must be dominant, got " + lambda.str() + ", " + mu.str());
    if (!system.in_root_lattice(lambda - mu))
        throw Error("kostka_foulkes: " + lambda.str() + " - " + mu.str() + " is not in the root lattice");

    const Weight rho = system.rho();
    const Weight lr = lambda + rho;
    const Weight mr = mu + rho;
    QPolynomial k;
    for (const auto& w : weyl_elements(system)) {
        IntVector c;
        system.in_root_lattice(w.apply(lr) - mr, &c);
        const QPolynomial term = detail::kostant_dp(system, c);
        if (w.sign > 0)
            k += term;
        else
            k -= term;
    }
    if (!k.nonnegative())
        throw InconsistencyError("kostka_foulkes produced a negative coefficient: " + k.str());
    return k;
}

} // namespace satake
