#pragma once

// Weyl groups realized as explicit integer matrices on fundamental-weight
// coordinates. Elements are enumerated through the orbit of rho, which is
// regular, so w -> w(rho) is injective and the BFS depth is the length.

#include <deque>
#include <map>
#include <vector>

#include "satake/root_system.hpp"

namespace satake {

/// Largest group we are willing to enumerate (|W(E6)|).
inline constexpr long kMaxWeylEnumeration = 51840;

struct WeylElement {
    IntMatrix matrix;
    int length = 0;
    int sign = 1;

    Weight apply(const Weight& w) const
    {
        Weight r = w;
        for (std::size_t i = 0; i < matrix.size(); ++i) {
            long s = 0;
            for (std::size_t j = 0; j < matrix.size(); ++j)
                s += matrix[i][j] * w.coords[j];
            r.coords[i] = s;
        }
        return r;
    }
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t n = a.size();
    IntMatrix c(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

/// Matrix of the simple reflection s_i on fundamental-weight coordinates.
inline IntMatrix simple_reflection_matrix(const RootSystem& system, int i)
{
    IntMatrix m = identity_matrix(system.rank());
    for (int r = 0; r < system.rank(); ++r)
        m[r][i] -= system.cartan_matrix()[r][i];
    return m;
}

/// All elements of W with their lengths and signs; identity first.
inline std::vector<WeylElement> weyl_elements(const RootSystem& system)
{
    if (system.type().weyl_order_formula() > kMaxWeylEnumeration)
        throw Error("Weyl group of " + system.type().name() + " is too large to enumerate");
    const int r = system.rank();
    std::vector<IntMatrix> gens;
    for (int i = 0; i < r; ++i)
        gens.push_back(simple_reflection_matrix(system, i));

    const Weight rho = system.rho();
    std::vector<WeylElement> out;
    std::map<IntVector, std::size_t> index;
    out.push_back({identity_matrix(r), 0, 1});
    index.emplace(rho.coords, 0);
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& g : gens) {
            IntMatrix m = multiply(g, out[head].matrix);
            WeylElement candidate{std::move(m), out[head].length + 1, -out[head].sign};
            IntVector key = candidate.apply(rho).coords;
            if (index.emplace(std::move(key), out.size()).second)
                out.push_back(std::move(candidate));
        }
    }
    return out;
}

class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& system) : type_(system.type())
    {
        for (int i = 0; i < system.rank(); ++i)
            generators_.push_back(simple_reflection_matrix(system, i));
        const auto elements = weyl_elements(system);
        order_ = static_cast<long>(elements.size());
        for (const auto& e : elements)
            longest_length_ = std::max(longest_length_, e.length);
    }

    const CartanType& type() const { return type_; }
    const std::vector<IntMatrix>& generators() const { return generators_; }
    long order() const { return order_; }
    int longest_length() const { return longest_length_; }

private:
    CartanType type_;
    std::vector<IntMatrix> generators_;
    long order_ = 0;
    int longest_length_ = 0;
};

/// |W| by explicit closure where feasible; degenerate labels have trivial W.
inline Integer weyl_order_by_closure(const CartanType& type)
{
    if (!type.has_roots())
        return 1;
    return WeylGroup(RootSystem(type)).order();
}

} // namespace satake
