#pragma once

// Finite root systems in simple-root coordinates, weights in
// fundamental-weight coordinates, coweights in simple-coroot coordinates.
//
// Conventions: cartan[i][j] = <alpha_i^vee, alpha_j>, so the simple root
// alpha_j has fundamental-weight coordinates given by column j of the Cartan
// matrix. symmetrizer[i] is proportional to (alpha_i, alpha_i) / 2 and
// symmetrizer[i] * cartan[i][j] is symmetric.

#include <algorithm>
#include <compare>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "satake/cartan_type.hpp"
#include "satake/numeric.hpp"

namespace satake {

using IntVector = std::vector<long>;
using IntMatrix = std::vector<IntVector>;
using RationalVector = std::vector<Rational>;

inline std::string format_coords(const IntVector& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

/// Weight in fundamental-weight coordinates, tagged with its Cartan type.
struct Weight {
    CartanType type;
    IntVector coords;

    auto operator<=>(const Weight&) const = default;

    std::size_t rank() const { return coords.size(); }

    bool is_dominant() const
    {
        for (long c : coords)
            if (c < 0)
                return false;
        return true;
    }

    bool is_zero() const
    {
        for (long c : coords)
            if (c != 0)
                return false;
        return true;
    }

    std::string str() const { return format_coords(coords); }
};

inline void require_same_type(const Weight& a, const Weight& b)
{
    if (a.type != b.type || a.coords.size() != b.coords.size())
        throw Error("weights attached to incompatible systems: " + a.type.name() + " vs " + b.type.name());
}

inline Weight operator+(const Weight& a, const Weight& b)
{
    require_same_type(a, b);
    Weight r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] += b.coords[i];
    return r;
}

inline Weight operator-(const Weight& a, const Weight& b)
{
    require_same_type(a, b);
    Weight r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] -= b.coords[i];
    return r;
}

/// Coweight in simple-coroot coordinates (rational, so that rho-check fits).
struct Coweight {
    CartanType type;
    RationalVector coords;
};

class RootSystem {
public:
    explicit RootSystem(CartanType type) : type_(type)
    {
        if (!type.valid() || !type.has_roots() || type.rank < 1)
            throw Error("no root system for type " + type.name());
        build_cartan();
        build_positive_roots();
        build_inverse();
    }

    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const IntMatrix& cartan_matrix() const { return cartan_; }
    const IntVector& symmetrizer() const { return sym_; }
    /// Positive roots in simple-root coordinates, ordered by height then lexicographically.
    const std::vector<IntVector>& positive_roots() const { return positive_; }

    bool simply_laced() const
    {
        for (long d : sym_)
            if (d != sym_.front())
                return false;
        return true;
    }

    Weight weight(IntVector coords) const
    {
        if (static_cast<int>(coords.size()) != rank())
            throw Error("weight of length " + std::to_string(coords.size()) + " for rank " + std::to_string(rank()));
        return Weight{type_, std::move(coords)};
    }

    Weight zero() const { return weight(IntVector(rank(), 0)); }

    /// Fundamental-weight coordinates of an element of the root lattice.
    Weight root_to_weight(const IntVector& root_coords) const
    {
        IntVector w(rank(), 0);
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j)
                w[i] += cartan_[i][j] * root_coords[j];
        return weight(std::move(w));
    }

    Weight simple_root(int i) const
    {
        IntVector e(rank(), 0);
        e[i] = 1;
        return root_to_weight(e);
    }

    /// Simple-root coordinates of a weight (rational in general).
    RationalVector root_coordinates(const Weight& w) const
    {
        check(w);
        RationalVector c(rank(), Rational(0));
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j)
                c[i] += inverse_[i][j] * w.coords[j];
        return c;
    }

    /// Integral simple-root coordinates, or false when w is outside the root lattice.
    bool in_root_lattice(const Weight& w, IntVector* out = nullptr) const
    {
        const auto c = root_coordinates(w);
        IntVector ints(rank());
        for (int i = 0; i < rank(); ++i) {
            if (!is_integer(c[i]))
                return false;
            ints[i] = to_long(numerator(c[i]));
        }
        if (out)
            *out = std::move(ints);
        return true;
    }

    /// mu <= lambda in the dominance order: lambda - mu is a nonnegative integral root combination.
    bool dominates(const Weight& lambda, const Weight& mu) const
    {
        IntVector c;
        if (!in_root_lattice(lambda - mu, &c))
            return false;
        for (long x : c)
            if (x < 0)
                return false;
        return true;
    }

    Weight reflect(const Weight& w, int i) const
    {
        check(w);
        Weight r = w;
        const long k = w.coords[i];
        for (int a = 0; a < rank(); ++a)
            r.coords[a] -= k * cartan_[a][i];
        return r;
    }

    /// Reflects into the dominant chamber; returns the number of reflections used.
    std::pair<Weight, int> to_dominant(Weight w) const
    {
        check(w);
        int steps = 0;
        for (;;) {
            int i = 0;
            while (i < rank() && w.coords[i] >= 0)
                ++i;
            if (i == rank())
                return {w, steps};
            w = reflect(w, i);
            ++steps;
        }
    }

    /// Half the sum of positive roots; always (1,...,1).
    Weight rho() const
    {
        IntVector total(rank(), 0);
        for (const auto& beta : positive_)
            for (int i = 0; i < rank(); ++i)
                total[i] += beta[i];
        Weight twice = root_to_weight(total);
        for (auto& c : twice.coords) {
            if (c % 2 != 0)
                throw InconsistencyError("sum of positive roots is not divisible by 2");
            c /= 2;
        }
        return twice;
    }

    /// Coroot of a positive root, in simple-coroot coordinates.
    RationalVector coroot(const IntVector& beta) const
    {
        Rational half_norm = 0;
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j)
                half_norm += Rational(beta[i] * beta[j] * sym_[i] * cartan_[i][j]);
        half_norm /= 2;
        RationalVector c(rank());
        for (int j = 0; j < rank(); ++j)
            c[j] = Rational(beta[j] * sym_[j]) / half_norm;
        return c;
    }

    /// Half the sum of positive coroots.
    Coweight rho_check() const
    {
        RationalVector c(rank(), Rational(0));
        for (const auto& beta : positive_) {
            const auto cb = coroot(beta);
            for (int j = 0; j < rank(); ++j)
                c[j] += cb[j];
        }
        for (auto& x : c)
            x /= 2;
        return Coweight{type_, std::move(c)};
    }

    /// Invariant form (lambda, mu) up to a fixed positive scale.
    Rational inner_product(const Weight& lambda, const Weight& mu) const
    {
        const auto c = root_coordinates(mu);
        Rational s = 0;
        for (int j = 0; j < rank(); ++j)
            s += Rational(sym_[j] * lambda.coords[j]) * c[j];
        return s;
    }

    void check(const Weight& w) const
    {
        if (w.type != type_ || static_cast<int>(w.coords.size()) != rank())
            throw Error("weight of type " + w.type.name() + " used with root system " + type_.name());
    }

private:
    void link(int i, int j)
    {
        cartan_[i][j] = -1;
        cartan_[j][i] = -1;
    }

    void build_cartan()
    {
        const int r = rank();
        cartan_.assign(r, IntVector(r, 0));
        sym_.assign(r, 1);
        for (int i = 0; i < r; ++i)
            cartan_[i][i] = 2;
        switch (type_.family) {
        case Family::A:
            for (int i = 0; i + 1 < r; ++i)
                link(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < r; ++i)
                link(i, i + 1);
            if (r >= 2)
                cartan_[r - 1][r - 2] = -2;
            for (int i = 0; i + 1 < r; ++i)
                sym_[i] = 2;
            break;
        case Family::D:
            for (int i = 0; i + 2 < r; ++i)
                link(i, i + 1);
            if (r >= 3)
                link(r - 3, r - 1);
            break;
        case Family::E:
            link(0, 2);
            link(2, 3);
            link(3, 4);
            link(4, 5);
            link(1, 3);
            break;
        case Family::F:
            link(0, 1);
            link(1, 2);
            link(2, 3);
            cartan_[2][1] = -2;
            sym_ = {2, 2, 1, 1};
            break;
        case Family::G:
            cartan_ = {{2, -3}, {-1, 2}};
            sym_ = {1, 3};
            break;
        }
    }

    void build_positive_roots()
    {
        const int r = rank();
        std::set<IntVector> seen;
        std::deque<IntVector> queue;
        for (int i = 0; i < r; ++i) {
            IntVector e(r, 0);
            e[i] = 1;
            seen.insert(e);
            queue.push_back(e);
        }
        while (!queue.empty()) {
            IntVector beta = queue.front();
            queue.pop_front();
            for (int i = 0; i < r; ++i) {
                long pairing = 0;
                for (int j = 0; j < r; ++j)
                    pairing += cartan_[i][j] * beta[j];
                IntVector image = beta;
                image[i] -= pairing;
                bool positive = true;
                for (long x : image)
                    positive = positive && x >= 0;
                if (positive && seen.insert(image).second)
                    queue.push_back(image);
            }
        }
        positive_.assign(seen.begin(), seen.end());
        std::stable_sort(positive_.begin(), positive_.end(), [](const IntVector& a, const IntVector& b) {
            long ha = 0, hb = 0;
            for (long x : a)
                ha += x;
            for (long x : b)
                hb += x;
            return ha < hb;
        });
    }

    void build_inverse()
    {
        const int r = rank();
        std::vector<RationalVector> m(r, RationalVector(2 * r, Rational(0)));
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j)
                m[i][j] = cartan_[i][j];
            m[i][r + i] = 1;
        }
        for (int col = 0; col < r; ++col) {
            int piv = col;
            while (m[piv][col] == 0)
                ++piv;
            std::swap(m[piv], m[col]);
            const Rational p = m[col][col];
            for (auto& x : m[col])
                x /= p;
            for (int row = 0; row < r; ++row) {
                if (row == col || m[row][col] == 0)
                    continue;
                const Rational f = m[row][col];
                for (int k = 0; k < 2 * r; ++k)
                    m[row][k] -= f * m[col][k];
            }
        }
        inverse_.assign(r, RationalVector(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                inverse_[i][j] = m[i][r + j];
    }

    CartanType type_;
    IntMatrix cartan_;
    IntVector sym_;
    std::vector<IntVector> positive_;
    std::vector<RationalVector> inverse_;
};

inline Weight rho(const RootSystem& system) { return system.rho(); }

/// Canonical pairing <lambda, coweight>.
inline Rational pair(const Weight& lambda, const Coweight& coweight)
{
    if (lambda.type != coweight.type || lambda.coords.size() != coweight.coords.size())
        throw Error("pairing between incompatible systems " + lambda.type.name() + " and " + coweight.type.name());
    Rational s = 0;
    for (std::size_t i = 0; i < lambda.coords.size(); ++i)
        s += coweight.coords[i] * lambda.coords[i];
    return s;
}

/// All W-conjugates of w, sorted.
inline std::vector<Weight> weyl_orbit(const RootSystem& system, const Weight& w)
{
    system.check(w);
    std::set<Weight> seen{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        const Weight cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < system.rank(); ++i) {
            Weight next = system.reflect(cur, i);
            if (seen.insert(next).second)
                queue.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

/// Dominant weights nu with nu <= lambda (lambda dominant), in a fixed order.
inline std::vector<Weight> dominant_weights_below(const RootSystem& system, const Weight& lambda)
{
    system.check(lambda);
    if (!lambda.is_dominant())
        throw Error("dominant_weights_below: " + lambda.str() + " is not dominant");
    // A dominant nu <= lambda has nonnegative root coordinates, so
    // lambda - nu lies in the box [0, floor(rc(lambda))].
    const auto rc = system.root_coordinates(lambda);
    IntVector bound(system.rank());
    for (int i = 0; i < system.rank(); ++i) {
        Integer fl = numerator(rc[i]) / denominator(rc[i]);
        bound[i] = to_long(fl);
    }
    std::vector<Weight> out;
    IntVector c(system.rank(), 0);
    for (;;) {
        Weight nu = lambda - system.root_to_weight(c);
        if (nu.is_dominant())
            out.push_back(nu);
        int i = 0;
        while (i < system.rank() && c[i] == bound[i]) {
            c[i] = 0;
            ++i;
        }
        if (i == system.rank())
            break;
        ++c[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace satake
