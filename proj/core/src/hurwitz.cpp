#include "czeta/hurwitz.hpp"

#include <cmath>
#include <mutex>

#include "czeta/errors.hpp"
#include "czeta/gamma.hpp"
#include "czeta/special.hpp"

namespace czeta {

namespace hurwitz_detail {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

// Standard double policy: 24 correction terms with the cutoff divisor 2.83,
// tuned so the worst relative error over |s| <= 120 stays below ~1e-13.
// The left-half-plane fallback (irrational shifts only) uses divisor 3.97:
// fewer explicit terms keep the cancellation loss down, and accuracy
// degrades gracefully with -Re s. Extended precision runs 40 corrections
// with divisor 2.39.
constexpr int kOrder = 24;
constexpr double kDivisor = 2.83;
constexpr double kDivisorLeft = 3.97;

std::mutex weights_mutex;

} // namespace

int em_cutoff(double smag, double a, int correction_order, double divisor) {
    double k = (smag + 2.0 * correction_order + 1.0) / divisor - a;
    int kk = static_cast<int>(std::ceil(k)) + 1;
    return kk < 16 ? 16 : kk;
}

const std::vector<double>& bernoulli_factorial_weights(int count) {
    static std::vector<double> table;
    std::scoped_lock lock(weights_mutex);
    while (static_cast<int>(table.size()) < count) {
        int j = static_cast<int>(table.size()) + 1;
        Rational w = bernoulli_number(2 * j);
        for (int i = 2; i <= 2 * j; ++i) w /= i;
        table.push_back(to_double(w));
    }
    return table;
}

const std::vector<dd>& bernoulli_factorial_weights_dd(int count) {
    static std::vector<dd> table;
    std::scoped_lock lock(weights_mutex);
    while (static_cast<int>(table.size()) < count) {
        int j = static_cast<int>(table.size()) + 1;
        Rational w = bernoulli_number(2 * j);
        for (int i = 2; i <= 2 * j; ++i) w /= i;
        table.push_back(to_dd(w));
    }
    return table;
}

cdouble em_direct(cdouble s, double a, int cutoff, int correction_order) {
    const auto& w = bernoulli_factorial_weights(correction_order);
    cdouble acc = 0.0;
    for (int k = 0; k < cutoff; ++k) {
        double lg = std::log(k + a);
        acc += std::exp(cdouble(-s.real() * lg, -s.imag() * lg));
    }
    double base = cutoff + a;
    double lb = std::log(base);
    cdouble pw = std::exp(cdouble(-s.real() * lb, -s.imag() * lb)); // base^{-s}
    acc += pw * base / (s - 1.0);  // (K+a)^{1-s}/(s-1)
    acc += 0.5 * pw;
    // Correction sum: B_2j/(2j)! * (s)_{2j-1} * (K+a)^{-s-2j+1}.
    cdouble poch = s;
    cdouble kp = pw / base;
    double inv2 = 1.0 / (base * base);
    for (int j = 1; j <= correction_order; ++j) {
        acc += w[j - 1] * poch * kp;
        poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        kp *= inv2;
    }
    return acc;
}

std::pair<cdouble, cdouble> em_direct_ds(cdouble s, double a, int cutoff,
                                         int correction_order) {
    const auto& w = bernoulli_factorial_weights(correction_order);
    cdouble acc = 0.0, dacc = 0.0;
    for (int k = 0; k < cutoff; ++k) {
        double lg = std::log(k + a);
        cdouble t = std::exp(cdouble(-s.real() * lg, -s.imag() * lg));
        acc += t;
        dacc -= lg * t;
    }
    double base = cutoff + a;
    double lb = std::log(base);
    cdouble pw = std::exp(cdouble(-s.real() * lb, -s.imag() * lb));
    cdouble sm1 = s - 1.0;
    cdouble tail = pw * base / sm1;
    acc += tail;
    dacc += tail * (-lb - 1.0 / sm1);
    acc += 0.5 * pw;
    dacc += -lb * 0.5 * pw;
    cdouble poch = s;
    cdouble hsum = 1.0 / s; // d/ds log (s)_{2j-1}
    cdouble kp = pw / base;
    double inv2 = 1.0 / (base * base);
    for (int j = 1; j <= correction_order; ++j) {
        cdouble term = w[j - 1] * poch * kp;
        acc += term;
        dacc += term * (hsum - lb);
        cdouble f1 = s + static_cast<double>(2 * j - 1);
        cdouble f2 = s + static_cast<double>(2 * j);
        poch *= f1 * f2;
        hsum += 1.0 / f1 + 1.0 / f2;
        kp *= inv2;
    }
    return {acc, dacc};
}

bool rationalize_shift(double a, long qmax, long* p, long* q) {
    // Continued fraction expansion of a, accepted only when the convergent
    // reproduces the double to ~4 ulp (i.e. the caller really stored p/q).
    double x = a;
    long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(x)), q1 = 1;
    x -= std::floor(x);
    for (int it = 0; it < 40 && q1 <= qmax; ++it) {
        if (std::abs(a - static_cast<double>(p1) / static_cast<double>(q1)) <=
            4.0 * 2.22e-16 * std::abs(a)) {
            *p = p1;
            *q = q1;
            return true;
        }
        if (x < 1e-18) break;
        x = 1.0 / x;
        double fl = std::floor(x);
        if (fl > 1e15) break;
        long ai = static_cast<long>(fl);
        x -= fl;
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    return false;
}

namespace {

// Right-half-plane evaluation with the standard policy (no dispatch).
cdouble eval_right(cdouble s, double a) {
    int k = em_cutoff(std::abs(s), a, kOrder, kDivisor);
    return em_direct(s, a, k, kOrder);
}

std::pair<cdouble, cdouble> eval_right_ds(cdouble s, double a) {
    int k = em_cutoff(std::abs(s), a, kOrder, kDivisor);
    return em_direct_ds(s, a, k, kOrder);
}

cdouble cos_complex(double x, double y) {
    // cos(x + iy) without the cancellation std::cos(complex) can hit for
    // large |y| (and with explicit overflow control by the caller).
    return {std::cos(x) * std::cosh(y), -std::sin(x) * std::sinh(y)};
}

cdouble sin_complex(double x, double y) {
    return {std::sin(x) * std::cosh(y), std::cos(x) * std::sinh(y)};
}

} // namespace

ReflectTable build_reflect_table(cdouble s, long q, bool with_ds) {
    if (std::abs(s.imag()) > 430.0)
        throw domain_error("hurwitz_zeta: |Im s| too large for the reflected branch");
    ReflectTable t;
    t.s = s;
    t.w = 1.0 - s;
    t.q = q;
    t.with_ds = with_ds;
    t.log_gamma_w = log_gamma(t.w);
    if (with_ds) t.digamma_w = digamma(t.w);
    t.vals.resize(static_cast<size_t>(q));
    if (with_ds) t.dvals.resize(static_cast<size_t>(q));
    for (long r = 1; r <= q; ++r) {
        double shift = static_cast<double>(r) / static_cast<double>(q);
        if (with_ds) {
            auto vd = eval_right_ds(t.w, shift);
            t.vals[static_cast<size_t>(r - 1)] = vd.first;
            t.dvals[static_cast<size_t>(r - 1)] = vd.second;
        } else {
            t.vals[static_cast<size_t>(r - 1)] = eval_right(t.w, shift);
        }
    }
    return t;
}

cdouble reflect_eval(const ReflectTable& table, long p, long qsub) {
    // zeta(1-w, p/q) = 2 Gamma(w) (2 pi q)^{-w} sum_r cos(pi w/2 - 2 pi r p/q) zeta(w, r/q).
    long stride = table.q / qsub;
    cdouble sum = 0.0;
    double half_pi_re = 0.5 * kPi * table.w.real();
    double half_pi_im = 0.5 * kPi * table.w.imag();
    for (long r = 1; r <= qsub; ++r) {
        double phase = kTwoPi * static_cast<double>((r * p) % qsub) / static_cast<double>(qsub);
        sum += cos_complex(half_pi_re - phase, half_pi_im) *
               table.vals[static_cast<size_t>(r * stride - 1)];
    }
    cdouble expo = table.log_gamma_w - table.w * std::log(kTwoPi * static_cast<double>(qsub)) +
                   std::log(2.0);
    if (expo.real() > 700.0)
        throw domain_error("hurwitz_zeta: reflected prefactor overflows");
    return std::exp(expo) * sum;
}

std::pair<cdouble, cdouble> reflect_eval_ds(const ReflectTable& table, long p, long qsub) {
    long stride = table.q / qsub;
    cdouble sum = 0.0, dsum = 0.0;
    double half_pi_re = 0.5 * kPi * table.w.real();
    double half_pi_im = 0.5 * kPi * table.w.imag();
    for (long r = 1; r <= qsub; ++r) {
        double phase = kTwoPi * static_cast<double>((r * p) % qsub) / static_cast<double>(qsub);
        cdouble c = cos_complex(half_pi_re - phase, half_pi_im);
        cdouble sn = sin_complex(half_pi_re - phase, half_pi_im);
        cdouble z = table.vals[static_cast<size_t>(r * stride - 1)];
        cdouble dz = table.dvals[static_cast<size_t>(r * stride - 1)];
        sum += c * z;
        dsum += -0.5 * kPi * sn * z + c * dz; // d/dw of cos(pi w/2 - phase) zeta(w, .)
    }
    double lq = std::log(kTwoPi * static_cast<double>(qsub));
    cdouble expo = table.log_gamma_w - table.w * lq + std::log(2.0);
    if (expo.real() > 700.0)
        throw domain_error("hurwitz_zeta: reflected prefactor overflows");
    cdouble pref = std::exp(expo);
    cdouble value = pref * sum;
    cdouble dw = pref * ((table.digamma_w - lq) * sum + dsum);
    // d/ds = -d/dw.
    return {value, -dw};
}

} // namespace hurwitz_detail

namespace {

using namespace hurwitz_detail;

constexpr long kQMax = 360;

void check_domain(cdouble s, double a) {
    if (!(a > 0.0) || a > 1.0)
        throw domain_error("hurwitz_zeta: shift must lie in (0, 1]");
    if (s == cdouble(1.0, 0.0))
        throw pole_error("hurwitz_zeta: pole at s = 1");
    if (std::abs(s) > 2.0e4)
        throw domain_error("hurwitz_zeta: |s| out of the supported range");
}

} // namespace

cdouble hurwitz_zeta(cdouble s, double a) {
    check_domain(s, a);
    if (s.real() >= -0.5) {
        int k = em_cutoff(std::abs(s), a, kOrder, kDivisor);
        return em_direct(s, a, k, kOrder);
    }
    long p = 0, q = 0;
    if (rationalize_shift(a, kQMax, &p, &q)) {
        auto table = build_reflect_table(s, q, false);
        return reflect_eval(table, p, q);
    }
    int k = em_cutoff(std::abs(s), a, kOrder, kDivisorLeft);
    return em_direct(s, a, k, kOrder);
}

std::pair<cdouble, cdouble> hurwitz_zeta_ds(cdouble s, double a) {
    check_domain(s, a);
    if (s.real() >= -0.5) {
        int k = em_cutoff(std::abs(s), a, kOrder, kDivisor);
        return em_direct_ds(s, a, k, kOrder);
    }
    long p = 0, q = 0;
    if (rationalize_shift(a, kQMax, &p, &q)) {
        auto table = build_reflect_table(s, q, true);
        return reflect_eval_ds(table, p, q);
    }
    int k = em_cutoff(std::abs(s), a, kOrder, kDivisorLeft);
    return em_direct_ds(s, a, k, kOrder);
}

dd hurwitz_zeta_dd(const dd& s, const dd& a) {
    double ad = static_cast<double>(a);
    double sd = static_cast<double>(s);
    if (!(ad > 0.0) || ad > 1.0 + 1e-30)
        throw domain_error("hurwitz_zeta_dd: shift must lie in (0, 1]");
    if (sd == 1.0 && s.lo == 0.0)
        throw pole_error("hurwitz_zeta_dd: pole at s = 1");
    if (sd < -0.5)
        throw domain_error("hurwitz_zeta_dd: extended mode covers s > -1/2 only");
    const int order = 40;
    const auto& w = hurwitz_detail::bernoulli_factorial_weights_dd(order);
    int cutoff = hurwitz_detail::em_cutoff(std::abs(sd), ad, order, 2.39);
    if (cutoff < 24) cutoff = 24;
    dd acc(0.0);
    dd ms = -s;
    for (int k = 0; k < cutoff; ++k)
        acc += dd_exp(ms * dd_log(dd(static_cast<double>(k)) + a));
    dd base = dd(static_cast<double>(cutoff)) + a;
    dd lb = dd_log(base);
    dd pw = dd_exp(ms * lb);
    acc += pw * base / (s - dd(1.0));
    acc += dd(0.5) * pw;
    dd poch = s;
    dd kp = pw / base;
    dd inv2 = dd(1.0) / (base * base);
    for (int j = 1; j <= order; ++j) {
        acc += w[static_cast<size_t>(j - 1)] * poch * kp;
        poch *= (s + dd(2.0 * j - 1.0)) * (s + dd(2.0 * j));
        kp *= inv2;
    }
    return acc;
}

} // namespace czeta
