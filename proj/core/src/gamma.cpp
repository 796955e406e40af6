#include "czeta/gamma.hpp"

#include <cmath>

#include "czeta/errors.hpp"

namespace czeta {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos approximation, g = 7, 9 terms. Valid on Re s >= 1/2 after the
// shift z = s - 1; accuracy ~1e-15 relative there.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool near_nonpositive_integer(cdouble s, double tol = 1e-12) {
    if (std::abs(s.imag()) > tol) return false;
    double r = s.real();
    return r < 0.5 && std::abs(r - std::round(r)) < tol;
}

// Requires Re s >= 1/2.
cdouble lanczos_log(cdouble s) {
    cdouble z = s - 1.0;
    cdouble acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
    cdouble t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

// Bernoulli numbers B_2 .. B_20 as doubles for the digamma asymptotic tail.
constexpr double kBern2k[10] = {
    1.0 / 6.0,    -1.0 / 30.0,   1.0 / 42.0,     -1.0 / 30.0,    5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0,
};

} // namespace

cdouble log_gamma(cdouble s) {
    if (near_nonpositive_integer(s))
        throw pole_error("log_gamma: pole at nonpositive integer");
    if (s.real() >= 0.5) return lanczos_log(s);
    // Continue left with log Gamma(s) = log Gamma(s+m) - sum log(s+k).
    // Off the real axis each factor keeps a constant sign of Im, so the
    // principal logs already telescope to the analytic continuation; on the
    // real axis this realizes the limit from above.
    int m = static_cast<int>(std::ceil(0.5 - s.real()));
    cdouble shifted = lanczos_log(s + static_cast<double>(m));
    cdouble acc = 0.0;
    for (int k = 0; k < m; ++k) {
        cdouble f = s + static_cast<double>(k);
        if (f.imag() == 0.0 && f.real() < 0.0)
            acc += cdouble(std::log(-f.real()), kPi); // limit from Im -> 0+
        else
            acc += std::log(f);
    }
    return shifted - acc;
}

cdouble gamma_fn(cdouble s) {
    if (near_nonpositive_integer(s))
        throw pole_error("gamma_fn: pole at nonpositive integer");
    if (s.real() >= 0.5) return std::exp(lanczos_log(s));
    // Reflection keeps real inputs exactly real (up to rounding) and avoids
    // branch bookkeeping entirely since it works with values.
    // sin(pi s) computed from the reduced real part for accuracy at large s.
    double x = s.real(), y = s.imag();
    double xr = x - std::round(x);
    cdouble sin_pis;
    if (y == 0.0) {
        sin_pis = std::cos(kPi * std::round(x)) * std::sin(kPi * xr);
    } else {
        sin_pis = std::sin(kPi * cdouble(x, y));
    }
    return kPi / (sin_pis * std::exp(lanczos_log(1.0 - s)));
}

cdouble digamma(cdouble s) {
    if (near_nonpositive_integer(s))
        throw pole_error("digamma: pole at nonpositive integer");
    // March the argument right until the asymptotic series converges fast,
    // then psi(z) ~ log z - 1/2z - sum B_2k / (2k z^2k).
    cdouble acc = 0.0;
    cdouble z = s;
    while (z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    cdouble inv = 1.0 / z;
    cdouble inv2 = inv * inv;
    cdouble tail = 0.0;
    cdouble p = inv2;
    for (int k = 1; k <= 10; ++k) {
        tail += kBern2k[k - 1] / (2.0 * k) * p;
        p *= inv2;
    }
    return acc + std::log(z) - 0.5 * inv - tail;
}

} // namespace czeta
