#pragma once

// V_lambda (x) V_mu by the Brauer-Klimyk rule: add the weights of V_mu to
// lambda + rho, reflect into the dominant chamber, drop walls.

#include <map>
#include <utility>
#include <vector>

#include "satake/qanalog.hpp"
#include "satake/representation.hpp"

namespace satake {

using WeightMultiset = std::vector<std::pair<Weight, Integer>>;

inline WeightMultiset tensor_decompose(const RootSystem& system, const Weight& lambda, const Weight& mu)
{
    if (!is_rank_one_or_two_type_a(system.type()))
        throw Error("tensor_decompose: unsupported system " + system.type().name());
    system.check(lambda);
    system.check(mu);
    if (!lambda.is_dominant() || !mu.is_dominant())
        throw Error("tensor_decompose: weights must be dominant");

    const Weight rho = system.rho();
    std::map<Weight, Integer> acc;
    for (const auto& [nu, mult] : character(system, mu)) {
        auto [dom, steps] = system.to_dominant(lambda + nu + rho);
        bool on_wall = false;
        for (long c : dom.coords)
            on_wall = on_wall || c == 0;
        if (on_wall)
            continue;
        const Integer signed_mult = (steps % 2 == 0) ? mult : Integer(-mult);
        acc[dom - rho] += signed_mult;
    }
    WeightMultiset out;
    for (const auto& [w, m] : acc) {
        if (m < 0)
            throw InconsistencyError("tensor_decompose: negative multiplicity at " + w.str());
        if (m != 0)
            out.emplace_back(w, m);
    }
    return out;
}

} // namespace satake
