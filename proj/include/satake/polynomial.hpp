#pragma once

// Dense univariate polynomials over an exact coefficient ring.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "satake/numeric.hpp"

namespace satake {

template <typename Coeff>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Coeff c) : c_{std::move(c)} { trim(); }
    explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// c * t^k.
    static Polynomial monomial(std::size_t k, Coeff c = Coeff(1))
    {
        std::vector<Coeff> v(k + 1, Coeff(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    const std::vector<Coeff>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Coeff operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }
    const Coeff& leading() const { return c_.back(); }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Coeff& s)
    {
        for (auto& x : c_)
            x *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Quotient and remainder by a divisor whose leading coefficient is a unit
    /// for Coeff (always true over the rationals; +-1 over the integers).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const
    {
        if (d.is_zero())
            throw Error("polynomial division by zero");
        std::vector<Coeff> rem = c_;
        if (rem.size() < d.c_.size())
            return {Polynomial(), *this};
        std::vector<Coeff> quo(rem.size() - d.c_.size() + 1, Coeff(0));
        for (std::size_t k = quo.size(); k-- > 0;) {
            const Coeff& top = rem[k + d.c_.size() - 1];
            if (top == 0)
                continue;
            Coeff f = top / d.leading();
            if (f * d.leading() != top)
                throw Error("polynomial division is not exact over this coefficient ring");
            quo[k] = f;
            for (std::size_t j = 0; j < d.c_.size(); ++j)
                rem[k + j] -= f * d.c_[j];
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    Coeff evaluate(const Coeff& x) const
    {
        Coeff r = 0;
        for (std::size_t i = c_.size(); i-- > 0;)
            r = r * x + c_[i];
        return r;
    }

    std::string str(const std::string& var = "t") const
    {
        if (c_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0)
                continue;
            const bool neg = c_[k] < 0;
            const Coeff mag = neg ? Coeff(-c_[k]) : c_[k];
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            if (k == 0 || mag != 1)
                os << mag;
            if (k >= 1)
                os << var;
            if (k >= 2)
                os << '^' << k;
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// 1 - t^d.
template <typename Coeff>
Polynomial<Coeff> one_minus_t_power(std::size_t d)
{
    return Polynomial<Coeff>(Coeff(1)) - Polynomial<Coeff>::monomial(d);
}

} // namespace satake
