#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "czeta/dd.hpp"

namespace czeta {

// Exact rational arithmetic. cpp_rational keeps gcd(num, den) = 1 and
// den > 0 as type invariants, which is exactly the contract we need for
// the Bernoulli/Euler tables and the expansion coefficients.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

// Integer power with negative exponents allowed (q must be nonzero then).
inline Rational rational_pow(const Rational& q, long e) {
    Rational base = e < 0 ? Rational(denominator(q), numerator(q)) : q;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Rational r = 1;
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

// Split a big integer into hi+lo doubles. Exact for |x| < 2^106, which
// covers every coefficient this library promotes to double-double.
inline dd to_dd(const BigInt& x) {
    double hi = x.convert_to<double>();
    BigInt rem = x - BigInt(hi);
    return dd_add(hi, rem.convert_to<double>());
}

inline dd to_dd(const Rational& q) {
    return to_dd(BigInt(numerator(q))) / to_dd(BigInt(denominator(q)));
}

} // namespace czeta
