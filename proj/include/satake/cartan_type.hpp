#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <string>

#include "satake/numeric.hpp"

namespace satake {

enum class Family { A, B, D, E, F, G };

inline char family_letter(Family f)
{
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
    }
    return '?';
}

/// Label of a (possibly degenerate) compact Lie type.
///
/// Two degenerate labels are admitted so that the low-rank end of the
/// Lorentz family works uniformly: B0 is the trivial group and D1 is the
/// rank-one torus SO(2) (no roots, trivial Weyl group).
struct CartanType {
    Family family = Family::A;
    int rank = 1;

    auto operator<=>(const CartanType&) const = default;

    bool valid() const
    {
        switch (family) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 0;
        case Family::D: return rank >= 1;
        case Family::E: return rank == 6;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
        }
        return false;
    }

    /// False for the degenerate labels B0 and D1.
    bool has_roots() const
    {
        if (family == Family::B && rank == 0)
            return false;
        if (family == Family::D && rank == 1)
            return false;
        return true;
    }

    int torus_rank() const { return rank; }

    std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

    Integer weyl_order_formula() const
    {
        auto factorial = [](int k) {
            Integer f = 1;
            for (int i = 2; i <= k; ++i)
                f *= i;
            return f;
        };
        switch (family) {
        case Family::A: return factorial(rank + 1);
        case Family::B: return (Integer(1) << rank) * factorial(rank);
        case Family::D: return (Integer(1) << (rank - 1)) * factorial(rank);
        case Family::E: return 51840;
        case Family::F: return 1152;
        case Family::G: return 12;
        }
        return 0;
    }

    long positive_root_count_formula() const
    {
        const long r = rank;
        switch (family) {
        case Family::A: return r * (r + 1) / 2;
        case Family::B: return r * r;
        case Family::D: return r * (r - 1);
        case Family::E: return 36;
        case Family::F: return 24;
        case Family::G: return 6;
        }
        return 0;
    }
};

inline CartanType make_type(Family f, int rank)
{
    CartanType t{f, rank};
    if (!t.valid())
        throw Error("unsupported Cartan type " + t.name());
    return t;
}

/// Parses labels such as "a2", "B4", "g2", or "trivial" (= B0).
inline CartanType parse_cartan_type(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "trivial")
        return {Family::B, 0};
    if (s.size() < 2)
        throw Error("malformed Cartan type '" + s + "'");
    Family f;
    switch (s[0]) {
    case 'a': f = Family::A; break;
    case 'b': f = Family::B; break;
    case 'd': f = Family::D; break;
    case 'e': f = Family::E; break;
    case 'f': f = Family::F; break;
    case 'g': f = Family::G; break;
    default: throw Error("unsupported Cartan family in '" + s + "'");
    }
    const std::string digits = s.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw Error("malformed Cartan type '" + s + "'");
    return make_type(f, std::stoi(digits));
}

} // namespace satake
