#pragma once

// The verification suite behind `verify-all`: independent-algorithm
// cross-checks for the q-analogs, and the per-family identity checks.
// Every check is deterministic for a given seed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satake/centralizer.hpp"
#include "satake/graded.hpp"
#include "satake/stalks.hpp"
#include "satake/tableau.hpp"
#include "satake/tensor.hpp"

namespace satake {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifySettings {
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    long lorentz_box = 12;
    long octonionic_box = 6;
};

/// Charge-statistic Kostka polynomials against Lusztig's alternating sum:
/// two-row shapes of size <= max_two, three-row shapes of size <= max_three.
inline CheckResult check_charge_vs_lusztig(long max_two = 12, long max_three = 9)
{
    long pairs = 0;
    for (int rows : {2, 3}) {
        const RootSystem sys({Family::A, rows - 1});
        const long max_n = rows == 2 ? max_two : max_three;
        for (long n = 0; n <= max_n; ++n) {
            const auto parts = partitions_of(n, rows);
            for (const auto& shape : parts)
                for (const auto& content : parts) {
                    const QPolynomial charge = kostka_charge(shape, content);
                    const QPolynomial lusztig
                        = kostka_foulkes(sys, partition_to_weight(sys, shape), partition_to_weight(sys, content));
                    ++pairs;
                    if (!(charge == lusztig))
                        return {"kostka.charge_vs_lusztig", false,
                                "shape " + format_coords(shape) + " content " + format_coords(content) + ": charge "
                                    + charge.str() + " vs " + lusztig.str()};
                }
        }
    }
    return {"kostka.charge_vs_lusztig", true, std::to_string(pairs) + " pairs"};
}

/// K_{lambda,mu}(1) equals the Freudenthal multiplicity.
inline CheckResult check_q_equals_one(long a1_max = 20, long a2_height = 6)
{
    long pairs = 0;
    auto run = [&](const RootSystem& sys, const Weight& lam) -> std::optional<std::string> {
        for (const auto& mu : dominant_weights_below(sys, lam)) {
            ++pairs;
            const Integer k = kostka_foulkes(sys, lam, mu).at_one();
            const Integer f = freudenthal_multiplicity(sys, lam, mu);
            if (k != f)
                return lam.str() + "," + mu.str() + ": K(1)=" + k.str() + " mult=" + f.str();
        }
        return std::nullopt;
    };
    const RootSystem a1({Family::A, 1});
    for (long m = 0; m <= a1_max; ++m)
        if (auto bad = run(a1, a1.weight({m})))
            return {"kostka.q_equals_one", false, *bad};
    const RootSystem a2({Family::A, 2});
    for (long a = 0; a <= a2_height; ++a)
        for (long b = 0; a + b <= a2_height; ++b)
            if (auto bad = run(a2, a2.weight({a, b})))
                return {"kostka.q_equals_one", false, *bad};
    return {"kostka.q_equals_one", true, std::to_string(pairs) + " pairs"};
}

/// K_{(m),(k)}(q) = q^{(m-k)/2} in type A1.
inline CheckResult check_a1_closed_form(long max_m = 40)
{
    const RootSystem a1({Family::A, 1});
    for (long m = 0; m <= max_m; ++m)
        for (long k = m % 2; k <= m; k += 2) {
            const QPolynomial got = kostka_foulkes(a1, a1.weight({m}), a1.weight({k}));
            if (!(got == QPolynomial::monomial(static_cast<unsigned>((m - k) / 2))))
                return {"kostka.a1_closed_form", false, std::to_string(m) + "," + std::to_string(k) + ": " + got.str()};
        }
    return {"kostka.a1_closed_form", true, "m <= " + std::to_string(max_m)};
}

/// Brauer-Klimyk decompositions have total dimension dim V_lambda * dim V_mu.
inline CheckResult check_tensor_dimensions(long box = 4)
{
    for (int r : {1, 2}) {
        const RootSystem sys({Family::A, r});
        std::vector<Weight> ws;
        for (long a = 0; a <= box; ++a) {
            if (r == 1)
                ws.push_back(sys.weight({a}));
            else
                for (long b = 0; a + b <= box; ++b)
                    ws.push_back(sys.weight({a, b}));
        }
        for (const auto& l : ws)
            for (const auto& m : ws) {
                Integer total = 0;
                for (const auto& [nu, mult] : tensor_decompose(sys, l, m))
                    total += mult * weyl_dimension(sys, nu);
                if (total != weyl_dimension(sys, l) * weyl_dimension(sys, m))
                    return {"tensor.dimensions", false, l.str() + " x " + m.str()};
            }
    }
    return {"tensor.dimensions", true, ""};
}

/// Degree tables against Molien series (A1, A2, B1-B4, D2-D4, G2, F4) and the
/// Shephard-Todd identities for E6.
inline CheckResult check_molien_oracle()
{
    std::vector<CartanType> molien{{Family::A, 1}, {Family::A, 2}, {Family::G, 2}, {Family::F, 4}};
    for (int k = 1; k <= 4; ++k)
        molien.push_back({Family::B, k});
    for (int k = 2; k <= 4; ++k)
        molien.push_back({Family::D, k});
    for (const auto& t : molien)
        if (!(molien_series(t) == invariant_degrees(t).hilbert_series()))
            return {"graded.molien_oracle", false, t.name()};
    if (!shephard_todd_check({Family::E, 6}))
        return {"graded.molien_oracle", false, "E6"};
    return {"graded.molien_oracle", true, ""};
}

inline long default_box(const RealFormFamily& fam, const VerifySettings& s)
{
    return fam.kind() == FamilyKind::Lorentz ? s.lorentz_box : s.octonionic_box;
}

inline CheckResult check_pairing(const RealFormFamily& fam)
{
    const std::string name = "pairing." + fam.name();
    long count = 0;
    if (fam.kind() == FamilyKind::Lorentz) {
        for (long m = 0; m <= 40; ++m, ++count)
            if (!check_pairing_identity(fam, {{m}}))
                return {name, false, "m=" + std::to_string(m)};
    } else {
        for (long a = 0; a <= 12; ++a)
            for (long b = 0; b <= a; ++b, ++count)
                if (!check_pairing_identity(fam, {{a, b}}))
                    return {name, false, RealWeight{{a, b}}.str()};
    }
    return {name, true, std::to_string(count) + " weights"};
}

inline CheckResult check_paving(const RealFormFamily& fam)
{
    const auto cells = minuscule_paving(fam);
    std::vector<long> expected
        = fam.kind() == FamilyKind::Lorentz ? std::vector<long>{0, fam.n_X()} : std::vector<long>{0, 8, 16};
    bool ok = cells == expected;
    for (long c : cells)
        ok = ok && c % fam.n_X() == 0;
    std::string detail;
    for (long c : cells)
        detail += (detail.empty() ? "" : ",") + std::to_string(c);
    return {"paving." + fam.name(), ok, "[" + detail + "]"};
}

inline std::vector<CheckResult> family_checks(const RealFormFamily& fam, const VerifySettings& s)
{
    const std::string f = fam.name();
    std::vector<CheckResult> out;
    out.push_back(check_pairing(fam));

    const DegreeMultisetReport l = degree_multiset_check(fam);
    out.push_back({"graded.part1_K." + f, l.part1_K, l.cohomology_K.str()});
    out.push_back({"graded.part1_M." + f, l.part1_M, l.cohomology_M.str()});
    out.push_back({"graded.part2_M." + f, l.part2_M, l.cohomology_M.str() + " vs " + l.dual_side_M.str()});
    out.push_back({"graded.part2_K." + f, l.part2_K, l.cohomology_K.str() + " vs " + l.dual_side_K.str()});
    const GradedDegrees ext = ext_algebra_degrees(fam);
    out.push_back({"graded.ext_hilbert." + f, ext_fiberproduct_hilbert_check(fam, ext), ext.str()});
    out.push_back({"weyl.factorization." + f, weyl_factorization_check(fam), ""});

    const long box = default_box(fam, s);
    const StalkTable table = stalk_table(fam, box);
    const std::string sz = std::to_string(table.entries().size()) + " pairs, box " + std::to_string(box);
    out.push_back({"stalks.parity." + f, parity_check(table), sz});
    out.push_back({"stalks.support_window." + f, support_window_check(table), sz});
    out.push_back({"stalks.degree_span." + f, degree_span_check(table), sz});
    out.push_back({"stalks.substitution." + f, substitution_check(table), sz});
    out.push_back(check_paving(fam));

    const CentralizerReport c = centralizer_suite(fam, s.samples, s.seed);
    out.push_back({"centralizer.regularity." + f, c.regularity.passed(),
                   std::to_string(c.regularity.samples) + " samples, "
                       + std::to_string(c.regularity.failures.size()) + " failures"});
    out.push_back({"centralizer.equivariance." + f, c.equivariance, "20x20 grid"});
    out.push_back({"centralizer.equivariance_symbolic." + f, c.equivariance_symbolic, ""});
    out.push_back({"centralizer.nu_char_poly." + f, c.nu_char_poly, "50 samples"});
    return out;
}

inline std::vector<CheckResult> oracle_checks()
{
    return {check_charge_vs_lusztig(), check_q_equals_one(), check_a1_closed_form(), check_tensor_dimensions(),
            check_molien_oracle()};
}

/// Lorentz(2..12) and the octonionic family.
inline std::vector<RealFormFamily> all_families()
{
    std::vector<RealFormFamily> out;
    for (int n = 2; n <= 12; ++n)
        out.push_back(RealFormFamily::lorentz(n));
    out.push_back(RealFormFamily::octonionic());
    return out;
}

/// Oracle checks followed by the family checks of `family`, or of every
/// family when none is given.
inline std::vector<CheckResult> verify_all(const std::optional<RealFormFamily>& family, const VerifySettings& s)
{
    std::vector<CheckResult> out = oracle_checks();
    const auto families = family ? std::vector<RealFormFamily>{*family} : all_families();
    for (const auto& fam : families)
        for (auto& r : family_checks(fam, s))
            out.push_back(std::move(r));
    return out;
}

} // namespace satake
