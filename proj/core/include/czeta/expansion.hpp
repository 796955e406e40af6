#pragma once

#include <complex>

#include "czeta/rational.hpp"

namespace czeta {

using cdouble = std::complex<double>;

// Exact expansion coefficients: a(1) = 7/4, a(2n+1) = (8 - E_{2n})/2^{2n+2},
// a(2n) = (1 - 2^{1-2n}) B_{2n} / (4n). Throws domain_error for n < 1.
Rational coeff_a(int n);

// Bernoulli polynomial evaluated at 5/4 through the closed forms
//   B_{2n+1}(5/4) = (2n+1)(4 - E_{2n}) / 2^{4n+2},
//   B_{2n}(5/4)   = (8n - (2^{2n} - 2) B_{2n}) / 2^{4n}.
// Throws domain_error for n < 0.
Rational bernoulli_at_5_4(int n);

// Coefficient of z^{-n} in the logarithmic expansion tail: -a(n+1)/n.
Rational expansion_tail_coeff(int n);

// The additive constant of the logarithmic expansion for the zeta zero
// sequence: (1/4) log(pi/2) - log xi(1/2), computed once from the library's
// own gamma and zeta evaluators and cached.
double constant_A();

// (z/2) log(z/2pi) - z/2 + (7/4) log z + constant - sum_{n=1}^{N} a_{n+1}/(n z^n).
// Requires Re z > 0.
cdouble expansion_log(cdouble z, int N, double constant);

// (1/2) log(z/2pi) + sum_{n=1}^{N} a_n / z^n. Requires Re z > 0.
cdouble expansion_main(cdouble z, int N);

// Small-argument heat-sum expansion:
//   (1/(4 sqrt(pi x))) log(e^{-C0}/(16 pi^2 x))
//     + sum_{n=0}^{N} (a_{n+1} / Gamma(1 + n/2)) x^{n/2}.
// Requires x > 0 and N >= 0.
double expansion_smallx(double x, int N);

} // namespace czeta
