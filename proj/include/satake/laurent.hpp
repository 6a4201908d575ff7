#pragma once

// Laurent polynomials in one variable x with rational coefficients.

#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "satake/numeric.hpp"

namespace satake {

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(const Rational& c) { add_term(0, c); }
    LaurentPolynomial(int c) : LaurentPolynomial(Rational(c)) {}
    LaurentPolynomial(long c) : LaurentPolynomial(Rational(c)) {}

    /// c * x^k.
    static LaurentPolynomial monomial(long k, const Rational& c = Rational(1))
    {
        LaurentPolynomial p;
        p.add_term(k, c);
        return p;
    }

    const std::map<long, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(long k, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, fresh] = t_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                t_.erase(it);
        }
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b)
    {
        for (const auto& [k, c] : b.t_)
            a.add_term(k, c);
        return a;
    }

    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b)
    {
        for (const auto& [k, c] : b.t_)
            a.add_term(k, -c);
        return a;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        LaurentPolynomial r;
        for (const auto& [i, x] : a.t_)
            for (const auto& [j, y] : b.t_)
                r.add_term(i + j, x * y);
        return r;
    }

    /// Division by a nonzero constant or a single monomial.
    friend LaurentPolynomial operator/(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        if (b.t_.size() != 1)
            throw Error("LaurentPolynomial: only division by a monomial is supported");
        const auto& [k, c] = *b.t_.begin();
        LaurentPolynomial r;
        for (const auto& [i, x] : a.t_)
            r.add_term(i - k, x / c);
        return r;
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.t_ == b.t_; }
    friend bool operator==(const LaurentPolynomial& a, int c) { return a == LaurentPolynomial(c); }

    Rational evaluate(const Rational& x) const
    {
        Rational s = 0;
        for (const auto& [k, c] : t_)
            s += c * ipow(x, k);
        return s;
    }

    std::string str(const std::string& var = "x") const
    {
        if (t_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : t_) {
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            if (k == 0 || mag != 1)
                os << mag;
            if (k != 0)
                os << var;
            if (k != 0 && k != 1)
                os << '^' << k;
        }
        return os.str();
    }

private:
    std::map<long, Rational> t_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.str(); }

} // namespace satake
