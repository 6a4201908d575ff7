#pragma once

// Exact scalar types shared by every module.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace satake {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a precondition on the input is violated.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when two computations that must agree do not (a broken identity).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer to_integer(const Rational& r)
{
    if (!is_integer(r))
        throw InconsistencyError("expected an integer, got " + r.str());
    return numerator(r);
}

inline long to_long(const Integer& z) { return z.convert_to<long>(); }

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

/// x^e for rational x and any integer exponent (x must be nonzero when e < 0).
inline Rational ipow(const Rational& x, long e)
{
    if (e < 0) {
        if (x == 0)
            throw Error("ipow: zero to a negative power");
        return ipow(Rational(1) / x, -e);
    }
    Rational result = 1;
    Rational base = x;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

inline Integer lcm_of_denominators(const std::vector<Rational>& xs)
{
    Integer l = 1;
    for (const auto& x : xs) {
        const Integer d = denominator(x);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    return l;
}

} // namespace satake
