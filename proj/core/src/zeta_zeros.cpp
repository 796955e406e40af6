#include "czeta/zeta_zeros.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <mutex>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "czeta/errors.hpp"
#include "czeta/gamma.hpp"
#include "czeta/hurwitz.hpp"

namespace czeta {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

std::mutex table_mutex;
std::vector<double> log_table;   // log(k+1)
std::vector<double> rsqrt_table; // (k+1)^{-1/2}

void ensure_tables(int count) {
    while (static_cast<int>(log_table.size()) < count) {
        double k1 = static_cast<double>(log_table.size()) + 1.0;
        log_table.push_back(std::log(k1));
        rsqrt_table.push_back(1.0 / std::sqrt(k1));
    }
}

} // namespace

double theta_fn(double t) {
    if (t < 0.0) return -theta_fn(-t);
    if (t < 30.0)
        return log_gamma(cdouble(0.25, 0.5 * t)).imag() -
               0.5 * t * std::log(kPi);
    double t2 = t * t;
    return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - 0.125 * kPi +
           1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t2) +
           31.0 / (80640.0 * t * t2 * t2);
}

double hardy_z(double t) {
    t = std::abs(t);
    if (t > 2e4)
        throw domain_error("hardy_z: |t| exceeds the supported range 2e4");
    cdouble s(0.5, t);
    // Same cutoff policy as the double-precision Hurwitz engine.
    int cutoff = hurwitz_detail::em_cutoff(std::abs(s), 1.0, 24, 2.83);

    double cr = 0.0, ci = 0.0;
    {
        std::scoped_lock lock(table_mutex);
        ensure_tables(cutoff);
        for (int k = 0; k < cutoff; ++k) {
            double ph = t * log_table[static_cast<size_t>(k)];
            double r = rsqrt_table[static_cast<size_t>(k)];
            cr += r * std::cos(ph);
            ci -= r * std::sin(ph);
        }
    }
    cdouble acc(cr, ci);

    const auto& w = hurwitz_detail::bernoulli_factorial_weights(24);
    double base = cutoff + 1.0;
    double lb = std::log(base);
    cdouble pw = std::exp(cdouble(-0.5 * lb, -t * lb));
    acc += pw * base / (s - 1.0);
    acc += 0.5 * pw;
    cdouble poch = s;
    cdouble kp = pw / base;
    double inv2 = 1.0 / (base * base);
    for (int j = 1; j <= 24; ++j) {
        acc += w[static_cast<size_t>(j - 1)] * poch * kp;
        poch *= (s + static_cast<double>(2 * j - 1)) *
                (s + static_cast<double>(2 * j));
        kp *= inv2;
    }

    double th = theta_fn(t);
    return (std::exp(cdouble(0.0, th)) * acc).real();
}

double gram_point(long n) {
    if (n < -1)
        throw domain_error("gram_point: requires n >= -1");
    // Solve y (log y - 1) = n + 1/8 for y = t / 2pi, then polish with Newton
    // on the full theta.
    double m = static_cast<double>(n) + 0.125;
    double y = (m > 3.0) ? m : 1.5;
    for (int i = 0; i < 64; ++i) {
        double ny = (m + y) / std::log(y);
        if (std::abs(ny - y) < 1e-12 * y) {
            y = ny;
            break;
        }
        y = ny;
    }
    double t = kTwoPi * y;
    double target = static_cast<double>(n) * kPi;
    for (int i = 0; i < 60; ++i) {
        double f = theta_fn(t) - target;
        double df = 0.5 * std::log(t / kTwoPi);
        double step = f / df;
        t -= step;
        if (std::abs(step) < 1e-12 * (1.0 + std::abs(t)))
            return t;
    }
    throw convergence_error("gram_point: Newton iteration did not converge");
}

namespace {

bool gram_good(long n, double g, double& z_out) {
    double z = hardy_z(g);
    z_out = z;
    if (std::abs(z) < 1e-8) return false;
    bool odd = (n % 2 != 0);
    return odd ? z < 0.0 : z > 0.0;
}

double refine_bracket(double a, double b, double fa, double fb) {
    boost::math::tools::eps_tolerance<double> tol(46);
    std::uintmax_t iters = 120;
    auto r = boost::math::tools::toms748_solve(
        [](double t) { return hardy_z(t); }, a, b, fa, fb, tol, iters);
    return 0.5 * (r.first + r.second);
}

} // namespace

std::vector<double> generate_ordinates(int count) {
    if (count < 1)
        throw domain_error("generate_ordinates: count must be positive");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(count));

    long n = -1;
    double ga = gram_point(n);
    double za;
    if (!gram_good(n, ga, za))
        throw construction_error("generate_ordinates: g_{-1} is not a good Gram point");

    while (static_cast<int>(out.size()) < count) {
        // Advance to the next good Gram point; the block between consecutive
        // good points g_n, g_m contains exactly m - n zeros in this range
        // (Rosser's rule, valid far beyond the supported heights).
        long m = n + 1;
        double gb, zb;
        while (!gram_good(m, gb = gram_point(m), zb)) ++m;
        int need = static_cast<int>(m - n);

        for (int res = 2;; res *= 2) {
            if (res > (1 << 15))
                throw convergence_error(
                    "generate_ordinates: sign changes unresolved in the Gram "
                    "block near t = " + std::to_string(ga));
            int samples = need * res;
            std::vector<double> bra, brb, bfa, bfb;
            double tprev = ga, fprev = za;
            for (int i = 1; i <= samples; ++i) {
                double ti = (i == samples)
                                ? gb
                                : ga + (gb - ga) * (static_cast<double>(i) /
                                                    samples);
                double fi = (i == samples) ? zb : hardy_z(ti);
                if ((fprev < 0.0 && fi > 0.0) || (fprev > 0.0 && fi < 0.0)) {
                    bra.push_back(tprev);
                    brb.push_back(ti);
                    bfa.push_back(fprev);
                    bfb.push_back(fi);
                }
                tprev = ti;
                fprev = fi;
            }
            if (static_cast<int>(bra.size()) == need) {
                for (size_t i = 0; i < bra.size(); ++i)
                    out.push_back(refine_bracket(bra[i], brb[i], bfa[i], bfb[i]));
                break;
            }
            if (static_cast<int>(bra.size()) > need)
                throw convergence_error(
                    "generate_ordinates: more sign changes than the Gram "
                    "block allows near t = " + std::to_string(ga));
        }
        n = m;
        ga = gb;
        za = zb;
    }
    out.resize(static_cast<size_t>(count));
    return out;
}

} // namespace czeta
