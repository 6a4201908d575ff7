#pragma once

#include <map>
#include <vector>

#include "satake/root_system.hpp"

namespace satake {

/// dim V_lambda by the Weyl dimension formula.
inline Integer weyl_dimension(const RootSystem& system, const Weight& lambda)
{
    system.check(lambda);
    if (!lambda.is_dominant())
        throw Error("weyl_dimension: " + lambda.str() + " is not dominant");
    const Weight shifted = lambda + system.rho();
    const Weight rho = system.rho();
    Rational dim = 1;
    for (const auto& beta : system.positive_roots()) {
        const RationalVector cb = system.coroot(beta);
        const Coweight c{system.type(), cb};
        dim *= pair(shifted, c) / pair(rho, c);
    }
    return to_integer(dim);
}

namespace detail {

class FreudenthalSolver {
public:
    FreudenthalSolver(const RootSystem& system, const Weight& lambda)
        : system_(system), lambda_(lambda)
    {
        const Weight lr = lambda + system.rho();
        norm_lambda_rho_ = system.inner_product(lr, lr);
    }

    Integer multiplicity(const Weight& mu)
    {
        const Weight dom = system_.to_dominant(mu).first;
        if (!system_.dominates(lambda_, dom))
            return 0;
        if (dom == lambda_)
            return 1;
        if (auto it = memo_.find(dom); it != memo_.end())
            return it->second;

        Rational sum = 0;
        for (const auto& beta : system_.positive_roots()) {
            const Weight alpha = system_.root_to_weight(beta);
            Weight shifted = dom + alpha;
            while (system_.dominates(lambda_, system_.to_dominant(shifted).first)) {
                const Integer m = multiplicity(shifted);
                if (m != 0)
                    sum += Rational(m) * system_.inner_product(shifted, alpha);
                shifted = shifted + alpha;
            }
        }
        const Weight mr = dom + system_.rho();
        const Rational denom = norm_lambda_rho_ - system_.inner_product(mr, mr);
        const Integer result = to_integer(2 * sum / denom);
        memo_.emplace(dom, result);
        return result;
    }

private:
    const RootSystem& system_;
    Weight lambda_;
    Rational norm_lambda_rho_;
    std::map<Weight, Integer> memo_;
};

} // namespace detail

/// Dimension of the mu-weight space of V_lambda (Freudenthal recursion).
inline Integer freudenthal_multiplicity(const RootSystem& system, const Weight& lambda, const Weight& mu)
{
    system.check(lambda);
    system.check(mu);
    if (!lambda.is_dominant())
        throw Error("freudenthal_multiplicity: " + lambda.str() + " is not dominant");
    detail::FreudenthalSolver solver(system, lambda);
    return solver.multiplicity(mu);
}

/// Full character of V_lambda: every weight with its multiplicity.
inline std::map<Weight, Integer> character(const RootSystem& system, const Weight& lambda)
{
    detail::FreudenthalSolver solver(system, lambda);
    std::map<Weight, Integer> out;
    for (const auto& nu : dominant_weights_below(system, lambda)) {
        const Integer m = solver.multiplicity(nu);
        if (m == 0)
            continue;
        for (const auto& w : weyl_orbit(system, nu))
            out.emplace(w, m);
    }
    return out;
}

} // namespace satake
