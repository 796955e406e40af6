#pragma once

#include <complex>

namespace czeta {

using cdouble = std::complex<double>;

// log Gamma, principal determination: continuous on Re s >= 1/2, continued
// left by the recurrence (exact off the real axis); real arguments left of
// 1/2 use the limit from the upper half plane. Throws pole_error at
// nonpositive integers. Relative accuracy ~1e-14 for |s| <= 200.
cdouble log_gamma(cdouble s);

// Gamma value; uses reflection on Re s < 1/2 so real axis values stay real.
cdouble gamma_fn(cdouble s);

// psi(s) = Gamma'(s)/Gamma(s). Throws pole_error at nonpositive integers.
cdouble digamma(cdouble s);

} // namespace czeta
