#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "czeta/crystal.hpp"
#include "czeta/dd.hpp"
#include "czeta/rational.hpp"

namespace czeta {

using cdouble = std::complex<double>;

// Exact arithmetic in Q[sqrt(3)]: value = p + q*sqrt(3).
struct QuadExt {
    Rational p, q;

    QuadExt() : p(0), q(0) {}
    QuadExt(long v) : p(v), q(0) {}                          // NOLINT(google-explicit-constructor)
    QuadExt(Rational pp) : p(std::move(pp)), q(0) {}         // NOLINT(google-explicit-constructor)
    QuadExt(Rational pp, Rational qq) : p(std::move(pp)), q(std::move(qq)) {}

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        return {a.p + b.p, a.q + b.q};
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        return {a.p - b.p, a.q - b.q};
    }
    QuadExt operator-() const { return {-p, -q}; }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        return {a.p * b.p + 3 * a.q * b.q, a.p * b.q + a.q * b.p};
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b);
    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    double value() const;
    dd value_dd() const;
};

// One Hurwitz term w * b^{-s} zeta(s, shift).
struct HTerm {
    double weight = 0.0;
    Rational base;     // positive
    Rational shift;    // in (0, 1]
};

// F(s) = sum_j w_j b_j^{-s} zeta(s, a_j), with a simple pole at s = 1 of
// residue sum_j w_j / b_j.
struct HurwitzCombination {
    std::vector<HTerm> terms;
    double pole_residue = 0.0;
    // Exact weights over Q[sqrt(3)], parallel to terms; empty when the
    // combination was built from floating-point data.
    std::vector<QuadExt> exact_weights;

    cdouble eval(cdouble s) const;
    std::pair<cdouble, cdouble> eval_ds(cdouble s) const;
    // Least common multiple of the shift denominators (reflection modulus).
    long reflect_lcm() const;
};

struct DirichletEntry {
    Rational frequency;
    double coefficient = 0.0;
};
using DirichletSeries = std::vector<DirichletEntry>;

enum class ZetaVariant { riemann, combination, perturbed };

// A zeta-like function: the Riemann zeta itself, a finite Hurwitz
// combination, or zeta + delta * (combination).
struct ZetaLikeFunction {
    ZetaVariant variant = ZetaVariant::riemann;
    HurwitzCombination comb;   // combination / perturbed variants
    double delta = 0.0;        // perturbed variant
    std::string label = "zeta";
    // True when the completed function satisfies xi(s) = xi(1-s). For such
    // functions the continuation deep into the left half-plane is evaluated
    // through a combination-level reflection, which is well conditioned;
    // term-by-term reflection loses roughly b^{-sigma} relative digits to
    // cancellation across the support.
    bool self_dual = false;
    // Populated when the combination stems from a self-dual measure with no
    // atom at the origin. Such functions are tiny in the critical strip
    // (|g| ~ 1e-5 for the N = 5 example) while the individual Hurwitz terms
    // are O(1), so the term route loses five digits to cancellation there;
    // evaluation instead goes through the completed-function theta integral,
    // which involves no cancellation.
    std::vector<double> measure_c;
    int measure_n = 0;

    cdouble eval(cdouble s) const;
    std::pair<cdouble, cdouble> eval_ds(cdouble s) const;
    double pole_residue() const;

    // Completed function xi(s) = (s-1) pi^{-s/2} Gamma(s/2 + 1) F(s); the
    // poles at s = 0 and s = 1 cancel, so xi is entire.
    cdouble xi(cdouble s) const;
    // Xi(t) = xi(1/2 + it); real for real t when coefficients are real.
    cdouble Xi(double t) const;
};

ZetaLikeFunction riemann_zeta_function();

// The flagship concrete instance: generated from exact trigonometric
// support data over Q[sqrt(3)], cross-checked against its thirteen-term
// closed form. Throws construction_error if the generated weights disagree.
ZetaLikeFunction build_zeta_m();

// Dirichlet-series form of a measure: g(s) = N^{-s} sum_r c_r zeta(s, r/N^2).
HurwitzCombination combination_from_measure(const CrystallineMeasure& m);
ZetaLikeFunction zeta_like_from_measure(const CrystallineMeasure& m);

// zeta(s) + delta * g(s) for the measure's combination g.
ZetaLikeFunction perturbed_zeta(const CrystallineMeasure& m, double delta);

// All Dirichlet frequencies <= cutoff with coefficients accumulated across
// the combination's support families. Exact accumulation when exact weights
// are available.
DirichletSeries dirichlet_head(const HurwitzCombination& comb, const Rational& cutoff);
DirichletSeries dirichlet_head(const ZetaLikeFunction& f, const Rational& cutoff);

// Zero-free abscissa: root of the absolute-coefficient majorant equation
//   sum_j |w_j| b_j^{-sigma} zeta(sigma, a_j) = 1 + sum_{j: b_j a_j = 1} |w_j|,
// solved by bisection to tol. Requires the signed constant Dirichlet term
// to equal 1.
double sigma0(const ZetaLikeFunction& f, double tol);

// Extended-precision variant (double-double bisection on the same majorant,
// using exact weights when present).
dd sigma0_dd(const ZetaLikeFunction& f, double tol = 1e-18);

// Pole residue at s = 1: descriptor value cross-checked against a Richardson
// extrapolation of (s-1) F(s); throws construction_error on disagreement.
double residue_at_1(const ZetaLikeFunction& f);

// Perturbation bound delta_0 for zeta + delta g: below it, (i) the Dirichlet
// tail of the perturbed function stays short of 1 for sigma >= 2, and
// (ii) |delta g| < |zeta| on the boundary rectangle [1/2,2] x [-3/2,3/2]
// (grid-estimated extrema with a safety factor 1/2).
struct Delta0Report {
    double delta0 = 0.0;
    double series_bound = 0.0;   // (2 - zeta(2)) / sum_{n > NT} |c_n| (n/N)^{-2}
    double ratio_bound = 0.0;    // m_hat / (2 M_hat)
    double m_hat = 0.0;          // grid min of |(s-1) zeta(s)|
    double M_hat = 0.0;          // grid max of |(s-1) g(s)|
};
Delta0Report delta0_bound(const CrystallineMeasure& m);

} // namespace czeta
