#pragma once

#include "czeta/rational.hpp"

namespace czeta {

// Exact binomial coefficient.
BigInt binomial(unsigned n, unsigned k);

// B_n from the exponential generating function t/(e^t - 1); B_1 = -1/2.
// Memoized; safe for concurrent callers.
Rational bernoulli_number(unsigned n);

// E_n from the exponential generating function 2 e^t/(e^{2t} + 1); odd
// indices are zero, even values are integers. Memoized.
Rational euler_number(unsigned n);

// B_n(x) = sum_k C(n,k) B_k x^{n-k}, exact.
Rational bernoulli_polynomial(unsigned n, const Rational& x);

} // namespace czeta
