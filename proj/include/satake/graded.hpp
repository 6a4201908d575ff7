#pragma once

// Generator-degree bookkeeping for free graded-commutative algebras:
// invariant degrees of Weyl groups, the shift V[m], and the degree and
// Hilbert-series identities relating equivariant cohomology of K_R and M_R
// to the dual-group side, plus the Ext-algebra fiber-product check.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "json.hpp"

#include "satake/hilbert.hpp"
#include "satake/molien.hpp"
#include "satake/realform.hpp"

namespace satake {

/// Multiset of cohomological degrees of free polynomial generators.
class GradedDegrees {
public:
    GradedDegrees() = default;
    GradedDegrees(std::vector<int> degrees) : d_(std::move(degrees))
    {
        for (int d : d_)
            if (d <= 0)
                throw Error("generator degrees must be positive, got " + std::to_string(d));
        std::sort(d_.begin(), d_.end());
    }

    const std::vector<int>& degrees() const { return d_; }
    std::size_t size() const { return d_.size(); }
    HilbertSeries hilbert_series() const { return HilbertSeries::free_algebra(d_); }

    /// Multiset union.
    friend GradedDegrees operator+(const GradedDegrees& a, const GradedDegrees& b)
    {
        std::vector<int> v = a.d_;
        v.insert(v.end(), b.d_.begin(), b.d_.end());
        return GradedDegrees(std::move(v));
    }

    friend bool operator==(const GradedDegrees& a, const GradedDegrees& b) { return a.d_ == b.d_; }

    std::string str() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < d_.size(); ++i)
            s += (i ? "," : "") + std::to_string(d_[i]);
        return s + "}";
    }

private:
    std::vector<int> d_;
};

/// Fundamental invariant degrees of W(type) on its reflection representation,
/// polynomial grading. D1 (a rank-one torus) gives {1}; B0 gives {}.
inline GradedDegrees invariant_degrees(const CartanType& type)
{
    if (!type.valid())
        throw Error("invariant_degrees: unsupported type " + type.name());
    const int r = type.rank;
    std::vector<int> d;
    switch (type.family) {
    case Family::A:
        for (int i = 2; i <= r + 1; ++i)
            d.push_back(i);
        break;
    case Family::B:
        for (int i = 1; i <= r; ++i)
            d.push_back(2 * i);
        break;
    case Family::D:
        if (r == 1)
            return GradedDegrees({1});
        for (int i = 1; i <= r - 1; ++i)
            d.push_back(2 * i);
        d.push_back(r);
        break;
    case Family::E: d = {2, 5, 6, 8, 9, 12}; break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
    }
    return GradedDegrees(std::move(d));
}

inline GradedDegrees invariant_degrees(const std::string& label) { return invariant_degrees(parse_cartan_type(label)); }

/// V[m]: a polynomial-degree-d generator lands in cohomological degree m*d.
inline GradedDegrees shifted(const GradedDegrees& g, int m)
{
    if (m <= 0)
        throw Error("shift must be positive, got " + std::to_string(m));
    std::vector<int> v;
    for (int d : g.degrees())
        v.push_back(d * m);
    return GradedDegrees(std::move(v));
}

/// `count` linear coordinates.
inline GradedDegrees linear_coordinates(std::size_t count) { return GradedDegrees(std::vector<int>(count, 1)); }

/// prod d_i == |W| and sum (d_i - 1) == number of positive roots, with
/// |W| and the root count computed independently of the degree table.
inline bool shephard_todd_check(const CartanType& type)
{
    const GradedDegrees g = invariant_degrees(type);
    if (static_cast<int>(g.size()) != type.torus_rank())
        return false;
    Integer product = 1;
    long excess = 0;
    for (int d : g.degrees()) {
        product *= d;
        excess += d - 1;
    }
    const long roots = type.has_roots() ? static_cast<long>(RootSystem(type).positive_roots().size()) : 0;
    return product == weyl_order(type) && excess == roots;
}

/// Degree table against the Molien series where the group is small enough to
/// enumerate, otherwise against the Shephard-Todd identities.
inline bool invariant_degrees_check(const CartanType& type)
{
    if (!type.has_roots() || type.weyl_order_formula() <= kMaxMolienOrder)
        return molien_series(type) == invariant_degrees(type).hilbert_series();
    return shephard_todd_check(type);
}

struct DegreeMultisetReport {
    bool part1_K = false;
    bool part1_M = false;
    bool part2_M = false;
    bool part2_K = false;

    GradedDegrees cohomology_K;   // t[2]//W_K
    GradedDegrees cohomology_M;   // t[2]//W_M
    GradedDegrees dual_side_M;    // t_X[n_X] x l_X[2]//L_X
    GradedDegrees dual_side_K;    // t_X[n_X]//W_X x l_X[2]//L_X

    bool all() const { return part1_K && part1_M && part2_M && part2_K; }
};

/// Equivariant cohomology of K_R and M_R as free algebras on t[2], and their
/// comparison with the dual-group side, as generator-degree multisets.
inline DegreeMultisetReport degree_multiset_check(const RealFormFamily& fam)
{
    const auto& inv = fam.inventory();
    const int nx = static_cast<int>(fam.n_X());
    DegreeMultisetReport r;
    r.cohomology_K = shifted(invariant_degrees(inv.K.type), 2);
    r.cohomology_M = shifted(invariant_degrees(inv.M.type), 2);
    const GradedDegrees levi = shifted(invariant_degrees(inv.L_X_wedge.type), 2);
    r.dual_side_M = shifted(linear_coordinates(static_cast<std::size_t>(inv.G_X_dual.type.rank)), nx) + levi;
    r.dual_side_K = shifted(invariant_degrees(inv.G_X_dual.type), nx) + levi;

    r.part1_M = invariant_degrees_check(inv.M.type) && r.cohomology_M.size() == static_cast<std::size_t>(inv.M.type.rank);
    r.part1_K = invariant_degrees_check(inv.K.type) && r.cohomology_K.size() == static_cast<std::size_t>(inv.K.type.rank)
                && inv.K.type.rank == inv.M.type.rank && weyl_factorization_check(fam);
    r.part2_M = r.cohomology_M == r.dual_side_M;
    r.part2_K = r.cohomology_K == r.dual_side_K;
    return r;
}

/// dim g_X-dual linear generators in degree n_X, plus the L_X invariants in [2].
inline GradedDegrees ext_algebra_degrees(const RealFormFamily& fam)
{
    const RootSystem& sys = fam.dual_system();
    const std::size_t dim = static_cast<std::size_t>(sys.rank()) + 2 * sys.positive_roots().size();
    return shifted(linear_coordinates(dim), static_cast<int>(fam.n_X()))
           + shifted(invariant_degrees(fam.inventory().L_X_wedge.type), 2);
}

/// HS(g_X[n_X]) * HS(t[2]//W_K) / HS(t_X[n_X]//W_X) == HS(ext), exactly.
inline bool ext_fiberproduct_hilbert_check(const RealFormFamily& fam, const GradedDegrees& ext)
{
    const RootSystem& sys = fam.dual_system();
    const int nx = static_cast<int>(fam.n_X());
    const std::size_t dim = static_cast<std::size_t>(sys.rank()) + 2 * sys.positive_roots().size();
    const HilbertSeries lhs = shifted(linear_coordinates(dim), nx).hilbert_series()
                              * shifted(invariant_degrees(fam.inventory().K.type), 2).hilbert_series()
                              / shifted(invariant_degrees(fam.inventory().G_X_dual.type), nx).hilbert_series();
    return lhs == ext.hilbert_series();
}

inline bool ext_fiberproduct_hilbert_check(const RealFormFamily& fam)
{
    return ext_fiberproduct_hilbert_check(fam, ext_algebra_degrees(fam));
}

inline nlohmann::json degrees_to_json(const GradedDegrees& g) { return g.degrees(); }

inline nlohmann::json polynomial_to_json(const IntPolynomial& p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(integer_json(c));
    return arr;
}

/// {family, checks, degree_multisets, hilbert_series: {num, den}}; the series
/// is that of the Ext algebra, coefficients listed from t^0 upwards.
inline nlohmann::json graded_report_json(const RealFormFamily& fam)
{
    const DegreeMultisetReport r = degree_multiset_check(fam);
    const GradedDegrees ext = ext_algebra_degrees(fam);
    const auto [num, den] = ext.hilbert_series().integer_fraction();
    return {
        {"family", family_to_json(fam)},
        {"checks",
         {{"part1_K", r.part1_K},
          {"part1_M", r.part1_M},
          {"part2_M", r.part2_M},
          {"part2_K", r.part2_K},
          {"ext_hilbert", ext_fiberproduct_hilbert_check(fam, ext)}}},
        {"degree_multisets",
         {{"cohomology_K", degrees_to_json(r.cohomology_K)},
          {"cohomology_M", degrees_to_json(r.cohomology_M)},
          {"dual_side_K", degrees_to_json(r.dual_side_K)},
          {"dual_side_M", degrees_to_json(r.dual_side_M)},
          {"ext", degrees_to_json(ext)}}},
        {"hilbert_series", {{"num", polynomial_to_json(num)}, {"den", polynomial_to_json(den)}}},
    };
}

} // namespace satake
