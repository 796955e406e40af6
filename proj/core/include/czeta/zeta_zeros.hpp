#pragma once

#include <vector>

namespace czeta {

// Riemann-Siegel theta: the phase making e^{i theta(t)} zeta(1/2+it) real.
// Odd in t; log-gamma based below t = 30, asymptotic series above.
double theta_fn(double t);

// Hardy Z function: Z(t) = Re( e^{i theta(t)} zeta(1/2 + it) ). Even in t.
// Uses a cached critical-line Euler-Maclaurin sum. |t| <= 2e4.
double hardy_z(double t);

// Gram point g_n: the solution of theta(g_n) = n*pi, n >= -1.
double gram_point(long n);

// First `count` ordinates of the critical-line zeros of zeta (ascending,
// positive). Scans Gram blocks, brackets sign changes of Z, and refines each
// bracket with the TOMS 748 root finder.
std::vector<double> generate_ordinates(int count);

} // namespace czeta
