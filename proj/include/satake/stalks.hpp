#pragma once

// IC-stalk dimensions of spherical orbit closures, read off from
// Kostka-Foulkes polynomials of the dual group:
//   dim H^{-n_X i - n_X <lambda, rho-check>}_mu (IC_lambda) = [q^i] K_{lambda,mu}(q).
// Degrees use the perverse normalization (stalks in nonpositive degrees).

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "satake/parallel.hpp"
#include "satake/qanalog.hpp"
#include "satake/realform.hpp"

namespace satake {

using StalkDegrees = std::map<long, Integer>;  // cohomological degree -> dimension

struct StalkResult {
    StalkDegrees stalks;
    std::optional<std::string> diagnostic;  // set when mu is not <= lambda
};

enum class DegreeConvention { perverse, shifted };

namespace detail {

inline Weight dominant_dual(const RealFormFamily& fam, const RealWeight& lam)
{
    const DualImage img = to_dual_weight(fam, lam);
    if (!img.dominant)
        throw Error("real weight " + lam.str() + " maps to the non-dominant dual weight " + img.weight.str());
    return img.weight;
}

} // namespace detail

inline StalkResult stalk_polynomial(const RealFormFamily& fam, const RealWeight& lambda, const RealWeight& mu)
{
    const Weight l = detail::dominant_dual(fam, lambda);
    const Weight m = detail::dominant_dual(fam, mu);
    const RootSystem& sys = fam.dual_system();
    if (!sys.dominates(l, m))
        return {{}, "mu = " + mu.str() + " is not <= lambda = " + lambda.str() + " in the dominance order"};
    const QPolynomial k = kostka_foulkes(sys, l, m);
    const long shift = half_orbit_dim(fam, l);
    StalkResult r;
    for (const auto& [i, dim] : k.terms())
        r.stalks.emplace(-fam.n_X() * static_cast<long>(i) - shift, dim);
    return r;
}

/// K_{lambda,mu}(q'^{n_X/2}): one power of q' per two cohomological degrees.
inline QPolynomial q_substitution_view(const RealFormFamily& fam, const RealWeight& lambda, const RealWeight& mu)
{
    const Weight l = detail::dominant_dual(fam, lambda);
    const Weight m = detail::dominant_dual(fam, mu);
    if (fam.n_X() % 2 != 0)
        throw InconsistencyError("n_X is odd");
    if (!fam.dual_system().dominates(l, m))
        return {};
    return kostka_foulkes(fam.dual_system(), l, m).substitute_power(static_cast<unsigned>(fam.n_X() / 2));
}

class StalkTable {
public:
    using Key = std::pair<RealWeight, RealWeight>;  // (lambda, mu)

    explicit StalkTable(RealFormFamily family) : family_(std::move(family)) {}

    const RealFormFamily& family() const { return family_; }
    const std::map<Key, StalkDegrees>& entries() const { return entries_; }
    std::map<Key, StalkDegrees>& entries() { return entries_; }

    void set(const RealWeight& lambda, const RealWeight& mu, StalkDegrees stalks)
    {
        check_real_weight(family_, lambda);
        check_real_weight(family_, mu);
        entries_[{lambda, mu}] = std::move(stalks);
    }

private:
    RealFormFamily family_;
    std::map<Key, StalkDegrees> entries_;
};

/// Dominant real weights in the sweep box: 0 <= m <= bound (Lorentz) or
/// 0 <= b <= a <= bound (octonionic).
inline std::vector<RealWeight> dominant_real_weights(const RealFormFamily& fam, long bound)
{
    if (bound < 0)
        throw Error("sweep bound must be nonnegative");
    std::vector<RealWeight> out;
    if (fam.kind() == FamilyKind::Lorentz) {
        for (long m = 0; m <= bound; ++m)
            out.push_back({{m}});
    } else {
        for (long a = 0; a <= bound; ++a)
            for (long b = 0; b <= a; ++b)
                out.push_back({{a, b}});
    }
    return out;
}

/// Every (lambda, mu) in the box with mu <= lambda. Parallel over lambda.
inline StalkTable stalk_table(const RealFormFamily& fam, long bound)
{
    const auto weights = dominant_real_weights(fam, bound);
    const RootSystem& sys = fam.dual_system();
    auto rows = parallel_map(weights.size(), [&](std::size_t i) {
        std::vector<std::pair<RealWeight, StalkDegrees>> row;
        const Weight l = detail::dominant_dual(fam, weights[i]);
        for (const auto& mu : weights) {
            if (!sys.dominates(l, detail::dominant_dual(fam, mu)))
                continue;
            row.emplace_back(mu, stalk_polynomial(fam, weights[i], mu).stalks);
        }
        return row;
    });
    StalkTable table(fam);
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (auto& [mu, stalks] : rows[i])
            table.set(weights[i], mu, std::move(stalks));
    return table;
}

/// Every nonzero degree d satisfies n_X | d + n_X <lambda, rho-check>, and
/// equivalently n_X | d + dim_R(orbit of lambda) / 2.
inline bool parity_check(const StalkTable& table)
{
    const RealFormFamily& fam = table.family();
    const long nx = fam.n_X();
    for (const auto& [key, stalks] : table.entries()) {
        const long shift = half_orbit_dim(fam, detail::dominant_dual(fam, key.first));
        const long odim = orbit_dim(fam, key.first);
        if (2 * shift != odim)
            return false;
        for (const auto& [d, dim] : stalks) {
            if (dim == 0)
                continue;
            if ((d + shift) % nx != 0)
                return false;
            if ((d + odim / 2) % nx != 0)
                return false;
        }
    }
    return true;
}

/// Every degree lies in [-2 n_X <lambda, rho-check>, -n_X <lambda, rho-check>].
inline bool support_window_check(const StalkTable& table)
{
    const RealFormFamily& fam = table.family();
    for (const auto& [key, stalks] : table.entries()) {
        const long shift = half_orbit_dim(fam, detail::dominant_dual(fam, key.first));
        for (const auto& [d, dim] : stalks)
            if (dim != 0 && (d < -2 * shift || d > -shift))
                return false;
    }
    return true;
}

/// For each lambda, the degrees occurring over all mu <= lambda span exactly
/// [-n_X <lambda, rho-check> - n_X D, -n_X <lambda, rho-check>] with
/// D = max_mu <lambda - mu, rho-check>: the top is attained at mu = lambda and
/// the bottom at the deepest mu. For lambda in the root lattice D equals
/// <lambda, rho-check>, so the span is [-2 n_X <lambda, rho-check>, -n_X <lambda, rho-check>].
/// Intermediate degrees of the residue class need not all occur.
inline bool degree_span_check(const StalkTable& table)
{
    const RealFormFamily& fam = table.family();
    const RootSystem& sys = fam.dual_system();
    const Coweight rc = sys.rho_check();
    std::map<RealWeight, std::set<long>> seen;
    std::map<RealWeight, long> deepest;
    for (const auto& [key, stalks] : table.entries()) {
        const Weight l = detail::dominant_dual(fam, key.first);
        const Weight m = detail::dominant_dual(fam, key.second);
        const long depth = to_long(to_integer(pair(l - m, rc)));
        auto [it, fresh] = deepest.emplace(key.first, depth);
        if (!fresh)
            it->second = std::max(it->second, depth);
        for (const auto& [d, dim] : stalks)
            if (dim != 0)
                seen[key.first].insert(d);
    }
    for (const auto& [lam, depth] : deepest) {
        const Weight l = detail::dominant_dual(fam, lam);
        const long shift = half_orbit_dim(fam, l);
        const auto& degrees = seen[lam];
        if (degrees.empty() || *degrees.rbegin() != -shift || *degrees.begin() != -shift - fam.n_X() * depth)
            return false;
        if (sys.in_root_lattice(l) && *degrees.begin() != -2 * shift)
            return false;
    }
    return true;
}

/// q_substitution_view multiplies every Kostka-Foulkes exponent by n_X / 2.
inline bool substitution_check(const StalkTable& table)
{
    const RealFormFamily& fam = table.family();
    const unsigned half = static_cast<unsigned>(fam.n_X() / 2);
    for (const auto& [key, stalks] : table.entries()) {
        const QPolynomial k = kostka_foulkes(fam.dual_system(), detail::dominant_dual(fam, key.first),
                                             detail::dominant_dual(fam, key.second));
        const QPolynomial v = q_substitution_view(fam, key.first, key.second);
        if (v.terms().size() != k.terms().size())
            return false;
        for (const auto& [e, c] : k.terms())
            if (v.coefficient(e * half) != c)
                return false;
    }
    return true;
}

/// Moves degrees to the convention where the open stratum sits in degree 0.
inline StalkDegrees apply_convention(const RealFormFamily& fam, const RealWeight& lambda, const StalkDegrees& stalks,
                                     DegreeConvention conv)
{
    if (conv == DegreeConvention::perverse)
        return stalks;
    const long shift = orbit_dim(fam, lambda) / 2;
    StalkDegrees out;
    for (const auto& [d, dim] : stalks)
        out.emplace(d + shift, dim);
    return out;
}

inline nlohmann::json stalks_to_json(const RealFormFamily& fam, const RealWeight& lambda, const RealWeight& mu,
                                     const StalkDegrees& stalks)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [d, dim] : stalks)
        arr.push_back({{"degree", d}, {"dim", integer_json(dim)}});
    return {{"family", family_to_json(fam)},
            {"lambda", real_weight_to_json(lambda)},
            {"mu", real_weight_to_json(mu)},
            {"stalks", arr}};
}

inline std::string csv_field(const RealWeight& w)
{
    if (w.coords.size() == 1)
        return std::to_string(w.coords[0]);
    std::string s = "\"";
    for (std::size_t i = 0; i < w.coords.size(); ++i)
        s += (i ? "," : "") + std::to_string(w.coords[i]);
    return s + "\"";
}

/// CSV with header "lambda,mu,degree,dim"; rows sorted by (lambda, mu, degree).
inline std::string table_to_csv(const StalkTable& table, DegreeConvention conv = DegreeConvention::perverse)
{
    std::ostringstream os;
    os << "lambda,mu,degree,dim\n";
    for (const auto& [key, stalks] : table.entries())
        for (const auto& [d, dim] : apply_convention(table.family(), key.first, stalks, conv))
            os << csv_field(key.first) << ',' << csv_field(key.second) << ',' << d << ',' << dim << '\n';
    return os.str();
}

inline nlohmann::json table_to_json(const StalkTable& table, DegreeConvention conv = DegreeConvention::perverse)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, stalks] : table.entries())
        arr.push_back(stalks_to_json(table.family(), key.first, key.second,
                                     apply_convention(table.family(), key.first, stalks, conv)));
    return arr;
}

} // namespace satake
