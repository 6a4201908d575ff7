#pragma once

// Hilbert series as exact rational functions whose denominators are products
// of cyclotomic polynomials. Every series met here (free graded algebras,
// Molien series of finite reflection groups) has that shape, so reduction to
// lowest terms is trial division by the denominator's cyclotomic factors.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "satake/polynomial.hpp"

namespace satake {

inline constexpr int kMaxCyclotomicIndex = 128;

/// Phi_k for 1 <= k <= kMaxCyclotomicIndex.
inline const IntPolynomial& cyclotomic(int k)
{
    static const std::vector<IntPolynomial> table = [] {
        std::vector<IntPolynomial> t(kMaxCyclotomicIndex + 1);
        for (int n = 1; n <= kMaxCyclotomicIndex; ++n) {
            IntPolynomial p = IntPolynomial::monomial(n) - IntPolynomial(Integer(1));
            for (int d = 1; d < n; ++d)
                if (n % d == 0)
                    p = p.divmod(t[d]).first;
            t[n] = p;
        }
        return t;
    }();
    if (k < 1 || k > kMaxCyclotomicIndex)
        throw Error("cyclotomic index out of range: " + std::to_string(k));
    return table[k];
}

using CyclotomicExponents = std::map<int, int>;  // k -> multiplicity of Phi_k

/// Splits p = cofactor * prod Phi_k^{e_k}, removing every cyclotomic factor.
inline std::pair<CyclotomicExponents, RatPolynomial> factor_cyclotomic(RatPolynomial p)
{
    if (p.is_zero())
        throw Error("factor_cyclotomic: zero polynomial");
    CyclotomicExponents exps;
    for (int k = 1; k <= kMaxCyclotomicIndex && p.degree() > 0; ++k) {
        const auto& phi = cyclotomic(k);
        if (phi.degree() > p.degree())
            continue;
        const RatPolynomial phir(std::vector<Rational>(phi.coeffs().begin(), phi.coeffs().end()));
        for (;;) {
            auto [q, r] = p.divmod(phir);
            if (!r.is_zero())
                break;
            p = std::move(q);
            ++exps[k];
        }
    }
    return {exps, p};
}

inline RatPolynomial cyclotomic_product(const CyclotomicExponents& exps)
{
    RatPolynomial p(Rational(1));
    for (const auto& [k, e] : exps) {
        const auto& phi = cyclotomic(k);
        const RatPolynomial phir(std::vector<Rational>(phi.coeffs().begin(), phi.coeffs().end()));
        for (int i = 0; i < e; ++i)
            p = p * phir;
    }
    return p;
}

class HilbertSeries {
public:
    HilbertSeries() : num_(Rational(1)) {}

    /// num / prod Phi_k^{e_k}.
    HilbertSeries(RatPolynomial num, CyclotomicExponents den) : num_(std::move(num)), den_(std::move(den))
    {
        reduce();
    }

    /// prod_d 1 / (1 - t^d).
    static HilbertSeries free_algebra(const std::vector<int>& degrees)
    {
        HilbertSeries h;
        for (int d : degrees) {
            if (d <= 0)
                throw Error("generator degrees must be positive");
            // 1 - t^d = -prod_{k | d} Phi_k
            h.num_ *= Rational(-1);
            for (int k = 1; k <= d; ++k)
                if (d % k == 0)
                    ++h.den_[k];
        }
        h.reduce();
        return h;
    }

    /// num / den where den is, up to a constant, a product of cyclotomic polynomials.
    static HilbertSeries fraction(const RatPolynomial& num, const RatPolynomial& den)
    {
        auto [exps, rest] = factor_cyclotomic(den);
        if (rest.degree() != 0)
            throw Error("HilbertSeries: denominator is not a product of cyclotomic polynomials");
        return HilbertSeries(num * (Rational(1) / rest[0]), std::move(exps));
    }

    const RatPolynomial& reduced_numerator() const { return num_; }
    const CyclotomicExponents& denominator_factors() const { return den_; }

    /// Integer numerator and denominator of the reduced fraction,
    /// normalized so that the denominator has constant term 1 up to content.
    std::pair<IntPolynomial, IntPolynomial> integer_fraction() const
    {
        const Integer l = lcm_of_denominators(num_.coeffs());
        RatPolynomial den = cyclotomic_product(den_) * Rational(l);
        RatPolynomial num = num_ * Rational(l);
        if (den[0] < 0) {
            den *= Rational(-1);
            num *= Rational(-1);
        }
        auto to_int = [](const RatPolynomial& p) {
            std::vector<Integer> c;
            for (const auto& x : p.coeffs())
                c.push_back(to_integer(x));
            return IntPolynomial(std::move(c));
        };
        return {to_int(num), to_int(den)};
    }

    IntPolynomial numerator() const { return integer_fraction().first; }
    IntPolynomial denominator() const { return integer_fraction().second; }

    /// Power-series coefficients of t^0 .. t^order.
    std::vector<Rational> expand(std::size_t order) const
    {
        const RatPolynomial den = cyclotomic_product(den_);
        std::vector<Rational> s(order + 1, Rational(0));
        const Rational d0 = den[0];
        for (std::size_t k = 0; k <= order; ++k) {
            Rational acc = num_[k];
            for (std::size_t j = 1; j <= k && static_cast<long>(j) <= den.degree(); ++j)
                acc -= den[j] * s[k - j];
            s[k] = acc / d0;
        }
        return s;
    }

    friend HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b)
    {
        CyclotomicExponents den = a.den_;
        for (const auto& [k, e] : b.den_)
            den[k] += e;
        return HilbertSeries(a.num_ * b.num_, std::move(den));
    }

    friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b)
    {
        CyclotomicExponents den = a.den_;
        for (const auto& [k, e] : b.den_)
            den[k] = std::max(den[k], e);
        auto lift = [&](const HilbertSeries& h) {
            CyclotomicExponents missing;
            for (const auto& [k, e] : den) {
                auto it = h.den_.find(k);
                const int have = it == h.den_.end() ? 0 : it->second;
                if (e > have)
                    missing[k] = e - have;
            }
            return h.num_ * cyclotomic_product(missing);
        };
        RatPolynomial num = lift(a) + lift(b);
        return HilbertSeries(std::move(num), std::move(den));
    }

    friend HilbertSeries operator*(const HilbertSeries& a, const Rational& s)
    {
        return HilbertSeries(a.num_ * s, a.den_);
    }

    /// Division; the divisor's numerator must itself factor into cyclotomics.
    friend HilbertSeries operator/(const HilbertSeries& a, const HilbertSeries& b)
    {
        if (b.num_.is_zero())
            throw Error("HilbertSeries: division by zero");
        auto [exps, rest] = factor_cyclotomic(b.num_);
        if (rest.degree() != 0)
            throw Error("HilbertSeries: divisor numerator is not a product of cyclotomic polynomials");
        CyclotomicExponents den = a.den_;
        for (const auto& [k, e] : exps)
            den[k] += e;
        const RatPolynomial num = a.num_ * cyclotomic_product(b.den_) * (Rational(1) / rest[0]);
        return HilbertSeries(num, std::move(den));
    }

    friend bool operator==(const HilbertSeries& a, const HilbertSeries& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const
    {
        const auto [n, d] = integer_fraction();
        return "(" + n.str() + ") / (" + d.str() + ")";
    }

private:
    void reduce()
    {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            const auto& phi = cyclotomic(it->first);
            const RatPolynomial phir(std::vector<Rational>(phi.coeffs().begin(), phi.coeffs().end()));
            while (it->second > 0) {
                auto [q, r] = num_.divmod(phir);
                if (!r.is_zero())
                    break;
                num_ = std::move(q);
                --it->second;
            }
            it = it->second == 0 ? den_.erase(it) : std::next(it);
        }
    }

    RatPolynomial num_;
    CyclotomicExponents den_;
};

} // namespace satake
