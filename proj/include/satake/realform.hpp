#pragma once

// Family data for the Lorentz groups PSO(2n-1,1) and the octonionic form
// PE6(F4): restricted roots with multiplicities, real coweights and their
// translation to weights of the dual group, orbit dimensions, and the
// minuscule paving.

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "satake/root_system.hpp"
#include "satake/weyl_group.hpp"

namespace satake {

enum class FamilyKind { Lorentz, Octonionic };

struct NamedGroup {
    std::string name;  // e.g. "SO_9", "Spin_8", "G2"
    CartanType type;
};

struct GroupInventory {
    NamedGroup K;
    NamedGroup M;
    NamedGroup G_dual;
    NamedGroup G_X_dual;
    NamedGroup L_X_wedge;
};

using MultiplicityFunction = std::function<long(const IntVector&)>;

class RealFormFamily {
public:
    static RealFormFamily lorentz(int n)
    {
        if (n < 2)
            throw Error("lorentz family requires n >= 2, got " + std::to_string(n));
        return RealFormFamily(FamilyKind::Lorentz, n);
    }

    static RealFormFamily octonionic() { return RealFormFamily(FamilyKind::Octonionic, 0); }

    FamilyKind kind() const { return kind_; }
    /// Lorentz parameter n (0 for the octonionic family).
    int n() const { return n_; }
    long n_X() const { return kind_ == FamilyKind::Lorentz ? 2L * n_ - 2 : 8L; }

    const CartanType& dual_group_type() const { return restricted_.type(); }
    const RootSystem& restricted_system() const { return restricted_; }
    const RootSystem& dual_system() const { return restricted_; }
    long multiplicity(const IntVector& restricted_root) const { return multiplicity_(restricted_root); }
    const MultiplicityFunction& multiplicity_function() const { return multiplicity_; }
    const GroupInventory& inventory() const { return inventory_; }

    std::string name() const
    {
        return kind_ == FamilyKind::Lorentz ? "lorentz(" + std::to_string(n_) + ")" : std::string("octonionic");
    }

    /// Number of coordinates of a real coweight.
    std::size_t real_rank() const { return kind_ == FamilyKind::Lorentz ? 1 : 2; }

    friend bool operator==(const RealFormFamily& a, const RealFormFamily& b)
    {
        return a.kind_ == b.kind_ && a.n_ == b.n_;
    }

private:
    RealFormFamily(FamilyKind kind, int n)
        : kind_(kind), n_(n),
          restricted_(kind == FamilyKind::Lorentz ? CartanType{Family::A, 1} : CartanType{Family::A, 2})
    {
        const long nx = n_X();
        multiplicity_ = [nx](const IntVector&) { return nx; };
        if (kind == FamilyKind::Lorentz) {
            inventory_ = {
                {"SO_" + std::to_string(2 * n - 1), {Family::B, n - 1}},
                {"SO_" + std::to_string(2 * n - 2), {Family::D, n - 1}},
                {"Spin_" + std::to_string(2 * n), {Family::D, n}},
                {"SL_2", {Family::A, 1}},
                {"Spin_" + std::to_string(2 * n - 3), {Family::B, n - 2}},
            };
        } else {
            inventory_ = {
                {"F4", {Family::F, 4}},
                {"Spin_8", {Family::D, 4}},
                {"E6", {Family::E, 6}},
                {"SL_3", {Family::A, 2}},
                {"G2", {Family::G, 2}},
            };
        }
    }

    FamilyKind kind_;
    int n_;
    RootSystem restricted_;
    MultiplicityFunction multiplicity_;
    GroupInventory inventory_;
};

/// Element of Lambda_S: m for Lorentz, (a, b) for octonionic.
struct RealWeight {
    IntVector coords;

    auto operator<=>(const RealWeight&) const = default;

    std::string str() const { return coords.size() == 1 ? std::to_string(coords[0]) : format_coords(coords); }
};

inline void check_real_weight(const RealFormFamily& fam, const RealWeight& lam)
{
    if (lam.coords.size() != fam.real_rank())
        throw Error("real weight " + lam.str() + " has the wrong number of coordinates for " + fam.name());
}

/// Dominance in Lambda_S: m >= 0 (Lorentz) or a >= b (octonionic).
inline bool is_dominant(const RealFormFamily& fam, const RealWeight& lam)
{
    check_real_weight(fam, lam);
    if (fam.kind() == FamilyKind::Lorentz)
        return lam.coords[0] >= 0;
    return lam.coords[0] >= lam.coords[1];
}

/// How a real coweight is turned into a dual-group weight. `semisimple` is
/// the default identification; `gl_pair` reads lambda as the pair
/// (lambda, -lambda), i.e. lambda - w0(lambda), which doubles in rank one.
enum class WeightNormalization { semisimple, gl_pair };

struct DualImage {
    Weight weight;
    /// Central offset applied to the GL3 triple (a, b, 0); 0 for Lorentz.
    long central_shift = 0;
    /// False when the image leaves the dominant chamber (octonionic b < 0).
    bool dominant = true;
};

inline DualImage to_dual_weight(const RealFormFamily& fam, const RealWeight& lam,
                                WeightNormalization norm = WeightNormalization::semisimple)
{
    if (!is_dominant(fam, lam))
        throw Error("to_dual_weight: " + lam.str() + " is not dominant in " + fam.name());
    const RootSystem& sys = fam.dual_system();
    DualImage img{sys.zero()};
    if (fam.kind() == FamilyKind::Lorentz) {
        img.weight = sys.weight({lam.coords[0]});
    } else {
        const long a = lam.coords[0];
        const long b = lam.coords[1];
        // GL3 triple (a, b, 0), shifted by a central element when b < 0;
        // fundamental-weight coordinates are consecutive differences.
        img.central_shift = b < 0 ? -b : 0;
        img.weight = sys.weight({a - b, b});
    }
    img.dominant = img.weight.is_dominant();
    if (norm == WeightNormalization::gl_pair) {
        const auto elements = weyl_elements(sys);
        const WeylElement* longest = &elements.front();
        for (const auto& e : elements)
            if (e.length > longest->length)
                longest = &e;
        img.weight = img.weight - longest->apply(img.weight);
        img.dominant = img.weight.is_dominant();
    }
    return img;
}

/// 1/2 * sum over positive roots of multiplicity(alpha) * alpha, in
/// fundamental-weight coordinates (must be integral).
inline Weight half_weighted_root_sum(const RootSystem& system, const MultiplicityFunction& multiplicity)
{
    IntVector total(system.rank(), 0);
    for (const auto& alpha : system.positive_roots()) {
        const long m = multiplicity(alpha);
        if (m <= 0)
            throw Error("root multiplicities must be positive");
        for (int i = 0; i < system.rank(); ++i)
            total[i] += m * alpha[i];
    }
    Weight w = system.root_to_weight(total);
    for (auto& c : w.coords) {
        if (c % 2 != 0)
            throw InconsistencyError("half-weighted root sum is not integral");
        c /= 2;
    }
    return w;
}

/// rho_G restricted to the split torus, as a weight of the restricted system.
inline Weight restricted_rho(const RealFormFamily& fam)
{
    return half_weighted_root_sum(fam.restricted_system(), fam.multiplicity_function());
}

/// Reinterprets a weight of a simply-laced system, written in simple-root
/// coordinates, as the coweight with the same simple-coroot coordinates
/// (restricted roots of G_R become coroots of the dual group).
inline Coweight weight_as_coweight(const RootSystem& system, const Weight& w)
{
    if (!system.simply_laced())
        throw Error("weight_as_coweight: only simply-laced systems are supported");
    return Coweight{system.type(), system.root_coordinates(w)};
}

struct PairingSides {
    Rational rho_G;          // <lambda, rho_G>
    Rational n_X_rho_check;  // n_X <lambda, rho_X-check>
};

inline PairingSides pairing_sides(const RealFormFamily& fam, const RealWeight& lam)
{
    const RootSystem& sys = fam.dual_system();
    const Weight w = to_dual_weight(fam, lam).weight;
    return {pair(w, weight_as_coweight(sys, restricted_rho(fam))), Rational(fam.n_X()) * pair(w, sys.rho_check())};
}

/// <lambda, rho_G> == n_X <lambda, rho_X-check>, exactly.
inline bool check_pairing_identity(const RealFormFamily& fam, const RealWeight& lam)
{
    const auto s = pairing_sides(fam, lam);
    return s.rho_G == s.n_X_rho_check;
}

/// n_X <lambda, rho_X-check> for a dual weight; integral in both families.
inline long half_orbit_dim(const RealFormFamily& fam, const Weight& dual)
{
    const Rational v = Rational(fam.n_X()) * pair(dual, fam.dual_system().rho_check());
    if (!is_integer(v))
        throw InconsistencyError("n_X <lambda, rho-check> = " + v.str() + " is not an integer");
    return to_long(numerator(v));
}

/// Real dimension 2 n_X <lambda, rho_X-check> of the spherical orbit.
inline long orbit_dim(const RealFormFamily& fam, const RealWeight& lam)
{
    const Rational v = Rational(2 * fam.n_X()) * pair(to_dual_weight(fam, lam).weight, fam.dual_system().rho_check());
    if (!is_integer(v))
        throw InconsistencyError("orbit dimension " + v.str() + " is not an integer for " + lam.str());
    return to_long(numerator(v));
}

inline RealWeight minuscule_coweight(const RealFormFamily& fam)
{
    return fam.kind() == FamilyKind::Lorentz ? RealWeight{{1}} : RealWeight{{1, 0}};
}

/// Cell dimensions of the affine paving of the minuscule orbit: one cell per
/// W_X-translate w(omega), of real dimension n_X <omega - w(omega), rho-check>.
inline std::vector<long> minuscule_paving(const RealFormFamily& fam)
{
    const RootSystem& sys = fam.dual_system();
    const Weight omega = to_dual_weight(fam, minuscule_coweight(fam)).weight;
    const Coweight rc = sys.rho_check();
    std::vector<long> dims;
    for (const auto& w : weyl_orbit(sys, omega)) {
        const Rational d = Rational(fam.n_X()) * pair(omega - w, rc);
        dims.push_back(to_long(to_integer(d)));
    }
    std::sort(dims.begin(), dims.end());
    return dims;
}

/// |W| by closure when the group is small enough, otherwise the classical formula.
inline Integer weyl_order(const CartanType& type)
{
    if (type.has_roots() && type.weyl_order_formula() <= kMaxWeylEnumeration)
        return weyl_order_by_closure(type);
    return type.weyl_order_formula();
}

/// |W_K| == |W_M| * |W_X|.
inline bool weyl_factorization_check(const RealFormFamily& fam)
{
    const auto& inv = fam.inventory();
    return weyl_order(inv.K.type) == weyl_order(inv.M.type) * weyl_order(inv.G_X_dual.type);
}

inline nlohmann::json family_to_json(const RealFormFamily& fam)
{
    if (fam.kind() == FamilyKind::Lorentz)
        return {{"family", "lorentz"}, {"n", fam.n()}};
    return {{"family", "octonionic"}};
}

inline RealFormFamily family_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw Error("family descriptor must be an object with a string 'family'");
    const std::string f = j["family"];
    if (f == "lorentz") {
        if (!j.contains("n") || !j["n"].is_number_integer())
            throw Error("lorentz family descriptor requires an integer 'n'");
        return RealFormFamily::lorentz(j["n"].get<int>());
    }
    if (f == "octonionic")
        return RealFormFamily::octonionic();
    throw Error("unknown family '" + f + "'");
}

/// JSON number when the value fits in 64 bits, decimal string otherwise.
inline nlohmann::json integer_json(const Integer& z)
{
    if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
        return z.convert_to<long long>();
    return z.str();
}

inline nlohmann::json real_weight_to_json(const RealWeight& lam)
{
    if (lam.coords.size() == 1)
        return lam.coords[0];
    return lam.coords;
}

} // namespace satake
