#pragma once

#include <complex>
#include <string>
#include <vector>

#include "czeta/rational.hpp"

namespace czeta {

using cdouble = std::complex<double>;

// Smooth counting-density surrogate for sequence terms beyond the stored
// range: d(t) = log(t / 2pi) / 2pi, trusted above t_max.
struct TailModel {
    bool present = false;
    double t_max = 0.0;
};

double tail_density(double t);

// An ordered candidate sequence (multiplicities by repetition) with an
// optional tail model for truncation bounds.
struct RiemannSequenceCandidate {
    std::vector<cdouble> terms;
    std::string source;
    TailModel tail;
};

// Build a candidate from an ascending list of positive ordinates (terms are
// real); attaches the default tail model above the last ordinate.
RiemannSequenceCandidate sequence_from_ordinates(const std::vector<double>& ordinates);

// True when every non-real term has a conjugate partner of equal multiplicity
// within tol; on failure *witness (if given) receives an unmatched term.
bool conjugate_closed(const std::vector<cdouble>& terms, double tol,
                      cdouble* witness = nullptr);

// Structural certification: (a) ordering, (b) conjugate pairing, (c) bounded
// imaginary parts, (d) sector condition. Failures are verdicts, not errors.
struct StructureReport {
    bool ordering = false;   // (a) Re a_1 > 1 and Re non-decreasing
    bool conjugate = false;  // (b) conjugate multiplicity matching
    bool im_bounded = false; // (c) |Im a_n| < C
    bool sector = false;     // (d) |Im a_n| < Re a_n

    double re_alpha1 = 0.0;  // witness for (a)
    double max_im = 0.0;     // witness for (c)
    double max_ratio = 0.0;  // witness for (d): max |Im|/Re
    cdouble unmatched{0.0, 0.0}; // witness for (b) when it fails

    bool is_complex = false; // some |Im a_n| > 1e-9

    bool passed() const { return ordering && conjugate && im_bounded && sector; }
};

StructureReport check_structure(const RiemannSequenceCandidate& seq, double C);

// Sum of 2x / (x^2 + a_n^2) over stored terms plus, when a tail model is
// present, the integral of 2x/(x^2+t^2) against the counting density above
// t_max.
cdouble zero_sum(const RiemannSequenceCandidate& seq, double x);

// Ground truth for zero_sum on the sequence of zeta-zero ordinates:
//   (zeta'/zeta)(1/2 + x) - (1/2) log pi + 1/(x - 1/2) + (1/2) psi(x/2 + 5/4).
double zeta_zero_sum_oracle(double x);

// Limit estimate of the constant B:
//   B = lim_x [ sum log(1 + x^2/a_n^2) - (x/2) log(x/2pi) + x/2 - (7/4) log x ]
// evaluated on the grid with tail compensation and extrapolated in 1/x.
struct BEstimate {
    double value = 0.0;
    double spread = 0.0; // difference between the last two extrapolation levels
    bool stable = false; // spread within tolerance and imaginary residue small
    double xi_alpha_0 = 0.0; // exp((1/4) log(pi/2) - value)
};

BEstimate estimate_B(const RiemannSequenceCandidate& seq,
                     const std::vector<double>& x_grid, double tol = 1e-2);

// Theta sum f(x) = sum exp(-a_n^2 x) with a truncation bound from the tail
// model. Throws convergence_error when the bound exceeds tol (x too small for
// the stored range).
struct ThetaSum {
    cdouble value{0.0, 0.0};
    double tail_bound = 0.0;
};

ThetaSum theta_sum(const RiemannSequenceCandidate& seq, double x,
                   double tol = 1e-12);

// Remainder of the small-x expansion at truncation order N:
//   2 * theta_sum(x) - expansion_smallx(x, N - 1),
// which should scale like x^{N/2} as x -> 0+. N = 0 uses the expansion with
// no series terms.
double smallx_residual(const RiemannSequenceCandidate& seq, double x, int N);

// |quadrature of int_0^inf f(x) e^{-x t^2} dx  -  sum 1/(t^2 + a_n^2)|, both
// truncated to the stored terms. Requires |arg t| < pi/4.
double laplace_residual(const RiemannSequenceCandidate& seq, cdouble t);

// Partial sum of Z(s) = sum a_n^{-s} (principal branch) over the first K
// terms, with an integral tail bound from the counting model when present.
struct ZPartial {
    cdouble value{0.0, 0.0};
    double tail_bound = 0.0;
};

ZPartial z_partial(const RiemannSequenceCandidate& seq, cdouble s, int K);

// Closed-form consequences of the zero-sum expansion, independent of the
// particular sequence:
//   z_special_value(n)  = value at s = -2n:  (-1)^n (8 - E_{2n}) / 2^{2n+3}
//   z_pole_main_part(n) = residue/pi of the simple pole at s = 1-2n: (-1)^n a_{2n}
Rational z_special_value(int n);
Rational z_pole_main_part(int n);

// Empirical check of N(x) <= C x log(x+1) on the stored range.
struct CountingCheck {
    double fitted_C = 0.0; // smallest C satisfying the bound on the data
    bool bounded = false;  // no growth trend in N(x)/(x log(x+1))
};

CountingCheck counting_check(const RiemannSequenceCandidate& seq);

} // namespace czeta
