#include "czeta/expansion.hpp"

#include <cmath>
#include <mutex>

#include "czeta/errors.hpp"
#include "czeta/gamma.hpp"
#include "czeta/hurwitz.hpp"
#include "czeta/special.hpp"

namespace czeta {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kEulerGamma = 0.57721566490153286061;

} // namespace

Rational coeff_a(int n) {
    if (n < 1)
        throw domain_error("coeff_a: index must be positive");
    if (n == 1)
        return Rational(7, 4);
    if (n % 2 == 1) {
        int m = (n - 1) / 2;
        Rational num = Rational(8) - euler_number(2 * m);
        return num / rational_pow(Rational(2), 2 * m + 2);
    }
    int m = n / 2;
    Rational factor = Rational(1) - rational_pow(Rational(2), 1 - 2 * m);
    return factor * bernoulli_number(2 * m) / (4 * m);
}

Rational bernoulli_at_5_4(int n) {
    if (n < 0)
        throw domain_error("bernoulli_at_5_4: index must be nonnegative");
    if (n % 2 == 1) {
        int k = (n - 1) / 2;
        Rational num = Rational(2 * k + 1) * (Rational(4) - euler_number(2 * k));
        return num / rational_pow(Rational(2), 4 * k + 2);
    }
    int k = n / 2;
    Rational num = Rational(8 * k) -
                   (rational_pow(Rational(2), 2 * k) - 2) * bernoulli_number(2 * k);
    return num / rational_pow(Rational(2), 4 * k);
}

Rational expansion_tail_coeff(int n) {
    if (n < 1)
        throw domain_error("expansion_tail_coeff: index must be positive");
    return -coeff_a(n + 1) / n;
}

double constant_A() {
    static const double value = [] {
        // xi(1/2) = -(1/8) pi^{-1/4} Gamma(1/4) zeta(1/2), a positive number.
        double zeta_half = hurwitz_zeta(cdouble(0.5, 0.0), 1.0).real();
        double gamma_quarter = gamma_fn(cdouble(0.25, 0.0)).real();
        double xi_half = -0.125 * std::pow(kPi, -0.25) * gamma_quarter * zeta_half;
        return 0.25 * std::log(kPi / 2.0) - std::log(xi_half);
    }();
    return value;
}

cdouble expansion_log(cdouble z, int N, double constant) {
    if (!(z.real() > 0.0))
        throw domain_error("expansion_log: argument must have positive real part");
    if (N < 0)
        throw domain_error("expansion_log: truncation order must be nonnegative");
    cdouble lz = std::log(z);
    cdouble value = 0.5 * z * (lz - std::log(kTwoPi)) - 0.5 * z + 1.75 * lz + constant;
    // Horner evaluation of sum_{n=1}^{N} t_n u^n with u = 1/z and
    // t_n = -a_{n+1}/n.
    if (N > 0) {
        cdouble u = 1.0 / z;
        cdouble tail = 0.0;
        for (int n = N; n >= 1; --n)
            tail = (tail + to_double(expansion_tail_coeff(n))) * u;
        value += tail;
    }
    return value;
}

cdouble expansion_main(cdouble z, int N) {
    if (!(z.real() > 0.0))
        throw domain_error("expansion_main: argument must have positive real part");
    if (N < 0)
        throw domain_error("expansion_main: truncation order must be nonnegative");
    cdouble value = 0.5 * (std::log(z) - std::log(kTwoPi));
    if (N > 0) {
        cdouble u = 1.0 / z;
        cdouble tail = 0.0;
        for (int n = N; n >= 1; --n)
            tail = (tail + to_double(coeff_a(n))) * u;
        value += tail;
    }
    return value;
}

double expansion_smallx(double x, int N) {
    if (!(x > 0.0))
        throw domain_error("expansion_smallx: argument must be positive");
    if (N < 0)
        throw domain_error("expansion_smallx: truncation order must be nonnegative");
    double log_arg = std::exp(-kEulerGamma) / (16.0 * kPi * kPi * x);
    double value = std::log(log_arg) / (4.0 * std::sqrt(kPi * x));
    double sx = std::sqrt(x);
    double xpow = 1.0;
    for (int n = 0; n <= N; ++n) {
        value += to_double(coeff_a(n + 1)) / std::tgamma(1.0 + 0.5 * n) * xpow;
        xpow *= sx;
    }
    return value;
}

} // namespace czeta
