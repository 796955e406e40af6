#include "czeta/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "czeta/errors.hpp"
#include "czeta/expansion.hpp"
#include "czeta/gamma.hpp"
#include "czeta/hurwitz.hpp"
#include "czeta/special.hpp"

namespace czeta {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

template <typename T>
T simpson_rule(double h, T fa, T fm, T fb) {
    return (h / 6.0) * (fa + 4.0 * fm + fb);
}

template <typename T, typename F>
T adaptive_step(const F& f, double a, double b, T fa, T fm, T fb, T whole,
                double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    T flm = f(lm), frm = f(rm);
    T left = simpson_rule(m - a, fa, flm, fm);
    T right = simpson_rule(b - m, fm, frm, fb);
    T delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename T, typename F>
T adaptive_simpson(const F& f, double a, double b, double tol) {
    double m = 0.5 * (a + b);
    T fa = f(a), fm = f(m), fb = f(b);
    T whole = simpson_rule(b - a, fa, fm, fb);
    return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

// int_M^inf t^{-m} log(t/2pi) dt = M^{1-m} (log(M/2pi) + 1/(m-1)) / (m-1).
double tail_log_integral(double M, double m) {
    return std::pow(M, 1.0 - m) * (std::log(M / kTwoPi) + 1.0 / (m - 1.0)) /
           (m - 1.0);
}

void require_nonempty(const RiemannSequenceCandidate& seq, const char* who) {
    if (seq.terms.empty())
        throw domain_error(std::string(who) + ": empty sequence");
}

} // namespace

double tail_density(double t) {
    return std::log(t / kTwoPi) / kTwoPi;
}

RiemannSequenceCandidate sequence_from_ordinates(const std::vector<double>& ordinates) {
    if (ordinates.empty())
        throw domain_error("sequence_from_ordinates: empty ordinate list");
    RiemannSequenceCandidate seq;
    seq.source = "ordinates";
    double prev = 0.0;
    for (double t : ordinates) {
        if (!(t > 0.0))
            throw domain_error("sequence_from_ordinates: ordinates must be positive");
        if (!(t > prev))
            throw domain_error("sequence_from_ordinates: ordinates must be strictly ascending");
        seq.terms.emplace_back(t, 0.0);
        prev = t;
    }
    seq.tail.present = true;
    seq.tail.t_max = ordinates.back();
    return seq;
}

bool conjugate_closed(const std::vector<cdouble>& terms, double tol,
                      cdouble* witness) {
    std::vector<char> matched(terms.size(), 0);
    for (size_t i = 0; i < terms.size(); ++i) {
        if (matched[i] || std::abs(terms[i].imag()) <= 1e-9) continue;
        cdouble want = std::conj(terms[i]);
        double scale = tol * (1.0 + std::abs(terms[i]));
        size_t best = terms.size();
        double best_d = scale;
        for (size_t j = 0; j < terms.size(); ++j) {
            if (j == i || matched[j] || std::abs(terms[j].imag()) <= 1e-9)
                continue;
            double d = std::abs(terms[j] - want);
            if (d <= best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == terms.size()) {
            if (witness) *witness = terms[i];
            return false;
        }
        matched[i] = matched[best] = 1;
    }
    return true;
}

StructureReport check_structure(const RiemannSequenceCandidate& seq, double C) {
    require_nonempty(seq, "check_structure");
    if (!(C > 0.0))
        throw domain_error("check_structure: C must be positive");

    StructureReport rep;
    rep.re_alpha1 = seq.terms.front().real();
    rep.ordering = rep.re_alpha1 > 1.0;
    for (size_t i = 1; i < seq.terms.size(); ++i)
        if (seq.terms[i].real() < seq.terms[i - 1].real() - 1e-12)
            rep.ordering = false;

    rep.conjugate = conjugate_closed(seq.terms, 1e-8, &rep.unmatched);

    rep.sector = true;
    for (const cdouble& a : seq.terms) {
        double im = std::abs(a.imag());
        rep.max_im = std::max(rep.max_im, im);
        if (im > 1e-9) rep.is_complex = true;
        double ratio = a.real() > 0.0 ? im / a.real()
                                      : std::numeric_limits<double>::infinity();
        rep.max_ratio = std::max(rep.max_ratio, ratio);
        if (!(im < a.real())) rep.sector = false;
    }
    rep.im_bounded = rep.max_im < C;
    return rep;
}

cdouble zero_sum(const RiemannSequenceCandidate& seq, double x) {
    require_nonempty(seq, "zero_sum");
    if (!(x > 0.0))
        throw domain_error("zero_sum: x must be positive");
    double x2 = x * x;
    cdouble acc = 0.0;
    for (const cdouble& a : seq.terms) {
        cdouble d = x2 + a * a;
        if (std::abs(d) < 1e-12)
            throw domain_error("zero_sum: x^2 + alpha^2 is numerically singular");
        acc += 2.0 * x / d;
    }
    if (seq.tail.present) {
        double T = seq.tail.t_max;
        double M = 100.0 * T;
        auto f = [x, x2](double t) {
            return 2.0 * x / (x2 + t * t) * tail_density(t);
        };
        acc += adaptive_simpson<double>(f, T, M, 1e-12);
        // Geometric remainder of 1/(t^2+x^2) beyond M, integrated against the
        // density in closed form.
        double rem = 0.0;
        for (int k = 0; k < 4; ++k) {
            double term = std::pow(x, 2 * k + 1) * tail_log_integral(M, 2.0 * k + 2.0);
            rem += (k % 2 ? -term : term);
        }
        acc += rem / kPi;
    }
    return acc;
}

double zeta_zero_sum_oracle(double x) {
    if (x == 0.5)
        throw pole_error("zeta_zero_sum_oracle: pole at x = 1/2");
    if (x < 0.5)
        throw domain_error("zeta_zero_sum_oracle: requires x > 1/2");
    auto [z, dz] = hurwitz_zeta_ds(cdouble(0.5 + x, 0.0), 1.0);
    return (dz / z).real() - 0.5 * std::log(kPi) + 1.0 / (x - 0.5) +
           0.5 * digamma(cdouble(0.5 * x + 1.25, 0.0)).real();
}

BEstimate estimate_B(const RiemannSequenceCandidate& seq,
                     const std::vector<double>& x_grid, double tol) {
    require_nonempty(seq, "estimate_B");
    if (x_grid.size() < 2)
        throw domain_error("estimate_B: need at least two grid points");
    for (size_t i = 0; i < x_grid.size(); ++i) {
        if (!(x_grid[i] > 0.0))
            throw domain_error("estimate_B: grid points must be positive");
        if (i > 0 && !(x_grid[i] > x_grid[i - 1]))
            throw domain_error("estimate_B: grid must be ascending");
    }

    size_t n = x_grid.size();
    std::vector<double> q(n), h(n);
    double im_resid = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double x = x_grid[i], x2 = x * x;
        cdouble sum = 0.0;
        for (const cdouble& a : seq.terms)
            sum += std::log(1.0 + x2 / (a * a));
        im_resid = std::max(im_resid, std::abs(sum.imag()));
        double tail = 0.0;
        if (seq.tail.present) {
            double T = seq.tail.t_max;
            double M = 100.0 * T;
            auto f = [x2](double t) {
                return std::log1p(x2 / (t * t)) * tail_density(t);
            };
            tail = adaptive_simpson<double>(f, T, M, 1e-12);
            for (int k = 1; k <= 4; ++k) {
                double term = std::pow(x2, k) / k *
                              tail_log_integral(M, 2.0 * k) / kTwoPi;
                tail += (k % 2 ? term : -term);
            }
        }
        q[i] = sum.real() + tail - 0.5 * x * std::log(x / kTwoPi) + 0.5 * x -
               1.75 * std::log(x);
        h[i] = 1.0 / x;
    }

    // Neville extrapolation of q(h) to h = 0.
    std::vector<double> p = q;
    double prev_level = p[0];
    double spread = std::numeric_limits<double>::infinity();
    for (size_t j = 1; j < n; ++j) {
        for (size_t i = 0; i + j < n; ++i)
            p[i] = (h[i + j] * p[i] - h[i] * p[i + 1]) / (h[i + j] - h[i]);
        spread = std::abs(p[0] - prev_level);
        prev_level = p[0];
    }

    BEstimate est;
    est.value = p[0];
    est.spread = spread;
    est.stable = spread <= tol && im_resid <= 1e-9 * (1.0 + std::abs(p[0]));
    est.xi_alpha_0 = std::exp(0.25 * std::log(0.5 * kPi) - p[0]);
    return est;
}

ThetaSum theta_sum(const RiemannSequenceCandidate& seq, double x, double tol) {
    require_nonempty(seq, "theta_sum");
    if (!(x > 0.0))
        throw domain_error("theta_sum: x must be positive");
    ThetaSum out;
    for (const cdouble& a : seq.terms)
        out.value += std::exp(-a * a * x);
    if (seq.tail.present) {
        double T = seq.tail.t_max;
        if (T > kTwoPi)
            out.tail_bound = std::exp(-x * T * T) *
                             (std::log(T / kTwoPi) + 1.0) / (4.0 * kPi * T * x);
        else
            out.tail_bound = std::numeric_limits<double>::infinity();
    }
    if (out.tail_bound > tol)
        throw convergence_error(
            "theta_sum: truncation bound exceeds tolerance (stored range too "
            "short for this x)");
    return out;
}

double smallx_residual(const RiemannSequenceCandidate& seq, double x, int N) {
    if (N < 0)
        throw domain_error("smallx_residual: N must be nonnegative");
    double th = 2.0 * theta_sum(seq, x).value.real();
    // expansion_smallx(x, M) carries series terms through order x^{M/2}; the
    // N = 0 residual uses the expansion with no series terms at all.
    double ex = (N == 0) ? expansion_smallx(x, 0) - 1.75
                         : expansion_smallx(x, N - 1);
    return th - ex;
}

double laplace_residual(const RiemannSequenceCandidate& seq, cdouble t) {
    require_nonempty(seq, "laplace_residual");
    if (!(std::abs(std::arg(t)) < 0.25 * kPi))
        throw domain_error("laplace_residual: t must satisfy |arg t| < pi/4");
    cdouble t2 = t * t;
    cdouble rhs = 0.0;
    double decay = std::numeric_limits<double>::infinity();
    for (const cdouble& a : seq.terms) {
        rhs += 1.0 / (t2 + a * a);
        decay = std::min(decay, (a * a).real());
    }
    decay += t2.real();
    if (!(decay > 0.0))
        throw domain_error("laplace_residual: integrand does not decay (sector condition violated)");
    double xup = 40.0 / decay;
    auto integrand = [&seq, t2](double x) {
        cdouble f = 0.0;
        for (const cdouble& a : seq.terms)
            f += std::exp(-a * a * x);
        return f * std::exp(-t2 * x);
    };
    cdouble lhs = adaptive_simpson<cdouble>(integrand, 0.0, xup, 1e-11);
    return std::abs(lhs - rhs);
}

ZPartial z_partial(const RiemannSequenceCandidate& seq, cdouble s, int K) {
    require_nonempty(seq, "z_partial");
    if (!(s.real() > 1.0))
        throw domain_error("z_partial: requires Re s > 1");
    if (K < 1 || static_cast<size_t>(K) > seq.terms.size())
        throw domain_error("z_partial: K must be within the stored length");
    ZPartial out;
    for (int n = 0; n < K; ++n)
        out.value += std::pow(seq.terms[static_cast<size_t>(n)], -s);
    if (seq.tail.present) {
        double sigma = s.real();
        double T = std::max(seq.terms[static_cast<size_t>(K - 1)].real(),
                            kTwoPi * 1.0000001);
        out.tail_bound = std::exp(0.25 * kPi * std::abs(s.imag())) / kTwoPi *
                         tail_log_integral(T, sigma);
    }
    return out;
}

Rational z_special_value(int n) {
    if (n < 0)
        throw domain_error("z_special_value: n must be nonnegative");
    Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * (Rational(8) - euler_number(2 * n)) /
           rational_pow(Rational(2), 2 * n + 3);
}

Rational z_pole_main_part(int n) {
    if (n < 1)
        throw domain_error("z_pole_main_part: n must be positive");
    Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * coeff_a(2 * n);
}

CountingCheck counting_check(const RiemannSequenceCandidate& seq) {
    if (seq.terms.size() < 10)
        throw domain_error("counting_check: need at least 10 terms");
    std::vector<double> xs;
    xs.reserve(seq.terms.size());
    for (const cdouble& a : seq.terms) xs.push_back(a.real());
    std::sort(xs.begin(), xs.end());

    CountingCheck out;
    size_t n = xs.size();
    double first_half_max = 0.0, second_half_max = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double x = xs[i];
        if (!(x > 0.0))
            throw domain_error("counting_check: terms must have positive real part");
        // N(x) counts every term with Re alpha <= x.
        size_t count = static_cast<size_t>(
            std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
        double c = static_cast<double>(count) / (x * std::log(x + 1.0));
        out.fitted_C = std::max(out.fitted_C, c);
        if (i < n / 2)
            first_half_max = std::max(first_half_max, c);
        else
            second_half_max = std::max(second_half_max, c);
    }
    out.bounded = second_half_max <= 1.1 * first_half_max;
    return out;
}

} // namespace czeta
