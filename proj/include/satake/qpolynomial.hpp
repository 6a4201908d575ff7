#pragma once

#include <map>
#include <sstream>
#include <string>

#include "satake/numeric.hpp"

namespace satake {

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class QPolynomial {
public:
    using Terms = std::map<unsigned, Integer>;

    QPolynomial() = default;
    QPolynomial(Integer constant) { add_term(0, std::move(constant)); }

    static QPolynomial monomial(unsigned exponent, Integer coefficient = 1)
    {
        QPolynomial p;
        p.add_term(exponent, std::move(coefficient));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Integer coefficient(unsigned exponent) const
    {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first); }
    long lowest_exponent() const { return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first); }

    void add_term(unsigned exponent, const Integer& coefficient)
    {
        if (coefficient == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Integer at_one() const
    {
        Integer s = 0;
        for (const auto& [e, c] : terms_)
            s += c;
        return s;
    }

    bool nonnegative() const
    {
        for (const auto& [e, c] : terms_)
            if (c < 0)
                return false;
        return true;
    }

    /// p(q^k).
    QPolynomial substitute_power(unsigned k) const
    {
        QPolynomial r;
        for (const auto& [e, c] : terms_)
            r.add_term(e * k, c);
        return r;
    }

    QPolynomial& operator+=(const QPolynomial& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    QPolynomial& operator-=(const QPolynomial& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b)
    {
        QPolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

    /// Ascending order with explicit q^k tokens, e.g. "1 + 2q^3", "q + q^2".
    std::string str(const std::string& var = "q") const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            if (e == 0) {
                os << mag;
                continue;
            }
            if (mag != 1)
                os << mag;
            os << var;
            if (e != 1)
                os << '^' << e;
        }
        return os.str();
    }

private:
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.str(); }

} // namespace satake
