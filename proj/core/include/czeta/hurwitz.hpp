#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "czeta/dd.hpp"

namespace czeta {

using cdouble = std::complex<double>;

// Hurwitz zeta zeta(s, a) = sum_{n>=0} (n+a)^{-s}, meromorphically
// continued. a must lie in (0, 1]; s != 1. Euler-Maclaurin with adaptive
// cutoff; for Re s < -1/2 shifts recognized as small rationals are routed
// through the cosine reflection formula (the direct sum loses digits to
// cancellation deep in the left half plane).
cdouble hurwitz_zeta(cdouble s, double a);

// Value and d/ds together (shared Euler-Maclaurin pass).
std::pair<cdouble, cdouble> hurwitz_zeta_ds(cdouble s, double a);

// Extended-precision real-axis evaluation (direct Euler-Maclaurin; meant
// for s real, right of the pole neighborhood, as in the zero-free-abscissa
// solver). Requires s > -0.5, s != 1, a in (0, 1].
dd hurwitz_zeta_dd(const dd& s, const dd& a);

namespace hurwitz_detail {

// Explicit-sum cutoff for a given |s|; divisor tuned so J correction terms
// land at the target accuracy (2.83 for the standard double policy).
int em_cutoff(double smag, double a, int correction_order, double divisor);

// B_{2j}/(2j)! as double / dd, j = 1..count, computed once from the exact
// rational tables.
const std::vector<double>& bernoulli_factorial_weights(int count);
const std::vector<dd>& bernoulli_factorial_weights_dd(int count);

// Direct Euler-Maclaurin evaluation with explicit parameters (no dispatch,
// no domain checks); exposed for tests and tuning.
cdouble em_direct(cdouble s, double a, int cutoff, int correction_order);
std::pair<cdouble, cdouble> em_direct_ds(cdouble s, double a, int cutoff,
                                         int correction_order);

// Recognize a double as p/q with q <= qmax (continued fractions); true on
// success. Rejects anything that is not a rational to ~4 ulp.
bool rationalize_shift(double a, long qmax, long* p, long* q);

// Precomputed right-half-plane data for reflected evaluation at s (with
// Re s < -1/2): zeta(w, r/q) for r = 1..q at w = 1-s, plus log Gamma(w).
// Shared across the terms of a Hurwitz combination via a common q = lcm.
struct ReflectTable {
    cdouble s;      // original (left half plane) argument
    cdouble w;      // 1 - s
    long q = 0;     // table modulus
    bool with_ds = false;
    cdouble log_gamma_w;
    cdouble digamma_w;                 // valid when with_ds
    std::vector<cdouble> vals;         // zeta(w, r/q), r = 1..q
    std::vector<cdouble> dvals;        // d/dw zeta(w, r/q) when with_ds
};

ReflectTable build_reflect_table(cdouble s, long q, bool with_ds);

// zeta(s, p/qsub) from a table whose modulus is a multiple of qsub.
cdouble reflect_eval(const ReflectTable& table, long p, long qsub);
std::pair<cdouble, cdouble> reflect_eval_ds(const ReflectTable& table, long p,
                                            long qsub);

} // namespace hurwitz_detail

} // namespace czeta
