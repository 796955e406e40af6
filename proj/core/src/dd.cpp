#include "czeta/dd.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace czeta {

namespace {

// ln 2 split into two doubles (hi is the correctly rounded double).
const dd kLn2{6.931471805599452862e-01, 2.319046813846299558e-17};
const dd kLog10{2.302585092994045901e+00, -2.170756223382249351e-16};

} // namespace

dd dd_sqrt(const dd& a) {
    if (a.hi == 0.0 && a.lo == 0.0) return dd(0.0);
    if (a.hi < 0.0) throw std::domain_error("dd_sqrt: negative argument");
    // One Newton step on x = sqrt(a) starting from the double estimate,
    // written division-free: x + (a - x^2) / (2x).
    double x0 = std::sqrt(a.hi);
    dd x(x0);
    dd r = (a - x * x) / dd(2.0 * x0);
    return x + r;
}

dd dd_exp(const dd& a) {
    // Range-reduce by ln 2, then a Taylor series on |r| <= ln2/2 where 28
    // terms leave the remainder below the dd resolution.
    if (a.hi > 709.0) throw std::overflow_error("dd_exp: overflow");
    if (a.hi < -745.0) return dd(0.0);
    double m = std::nearbyint(a.hi / kLn2.hi);
    dd r = a - dd(m) * kLn2;
    dd sum(1.0);
    dd term(1.0);
    for (int k = 1; k <= 28; ++k) {
        term = term * r / dd(static_cast<double>(k));
        sum += term;
        if (std::abs(term.hi) < 1e-35 * std::abs(sum.hi)) break;
    }
    int e = static_cast<int>(m);
    return {std::ldexp(sum.hi, e), std::ldexp(sum.lo, e)};
}

dd dd_log(const dd& a) {
    if (a.hi <= 0.0) throw std::domain_error("dd_log: nonpositive argument");
    // One Newton step y' = y + a*exp(-y) - 1 doubles the double-precision
    // seed to full dd accuracy.
    dd y(std::log(a.hi));
    y = y + a * dd_exp(-y) - dd(1.0);
    return y;
}

dd dd_pow(const dd& a, const dd& b) {
    return dd_exp(b * dd_log(a));
}

std::string dd_to_string(const dd& a, int digits) {
    if (digits < 1) digits = 1;
    if (digits > 31) digits = 31;
    dd x = a;
    std::string out;
    if (x.hi < 0.0 || (x.hi == 0.0 && x.lo < 0.0)) {
        out += '-';
        x = -x;
    }
    if (x.hi == 0.0) return out + "0";
    int e10 = static_cast<int>(std::floor(std::log10(x.hi)));
    // Normalize the mantissa into [1, 10) with a dd-accurate power of ten.
    dd scale = dd_exp(dd(static_cast<double>(-e10)) * kLog10);
    dd m = x * scale;
    if (m.hi >= 10.0) {
        m = m / dd(10.0);
        ++e10;
    } else if (m.hi < 1.0) {
        m = m * dd(10.0);
        --e10;
    }
    std::string mant;
    for (int i = 0; i < digits; ++i) {
        int d = static_cast<int>(m.hi);
        if (d < 0) d = 0;
        if (d > 9) d = 9;
        mant += static_cast<char>('0' + d);
        m = (m - dd(static_cast<double>(d))) * dd(10.0);
    }
    // Round from the first dropped digit and propagate carries.
    if (m.hi >= 5.0) {
        int i = static_cast<int>(mant.size()) - 1;
        while (i >= 0) {
            if (mant[i] != '9') {
                ++mant[i];
                break;
            }
            mant[i] = '0';
            --i;
        }
        if (i < 0) {
            mant.insert(mant.begin(), '1');
            mant.pop_back();
            ++e10;
        }
    }
    // Fixed notation for moderate exponents (same window as printf %g),
    // scientific otherwise.
    if (e10 >= 0 && e10 < digits) {
        out += mant.substr(0, static_cast<size_t>(e10) + 1);
        if (static_cast<size_t>(e10) + 1 < mant.size())
            out += "." + mant.substr(static_cast<size_t>(e10) + 1);
    } else if (e10 < 0 && e10 >= -4) {
        out += "0." + std::string(static_cast<size_t>(-e10) - 1, '0') + mant;
    } else {
        out += mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        char buf[16];
        std::snprintf(buf, sizeof buf, "e%+03d", e10);
        out += buf;
    }
    return out;
}

} // namespace czeta
