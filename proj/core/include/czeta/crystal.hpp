#pragma once

#include <complex>
#include <vector>

namespace czeta {

using cdouble = std::complex<double>;

// A complex function on Z/MZ. Index k holds the value at residue k; the
// value at a negative residue -k is values[M - k].
struct CyclicFunction {
    int modulus = 0;
    std::vector<cdouble> values;
};

// Multiplicities of the eigenvalues 1, -1, -i, i of the unitary finite
// Fourier transform on Z/MZ.
struct EigenspaceDims {
    int d1 = 0;
    int dm1 = 0;
    int dmi = 0;
    int di = 0;
};

// Unitary finite Fourier transform: out(n) = M^{-1/2} sum_m f(m) e^{-2pi i mn/M}.
CyclicFunction finite_fourier(const CyclicFunction& f);

// Eigenvalue multiplicities computed from a dense eigendecomposition, with
// each eigenvalue rounded to the nearest fourth root of unity (tolerance
// 1e-6 in angle). Throws convergence_error on ambiguous rounding.
EigenspaceDims eigenspace_dimensions(int M);

// A nonzero real symmetric fixed point of the finite Fourier transform on
// Z/(N^2)Z vanishing on the window |n| <= N*T, normalized so the entry of
// largest magnitude equals +1. Requires N odd and N^2 > 4NT + 1.
CyclicFunction construct_selfdual(int N, int T);

// A measure supported on (1/N)Z with period N: atoms c_n at n/N, where the
// coefficient vector c (length N^2, indices mod N^2) is symmetric and fixed
// by the finite Fourier transform.
struct CrystallineMeasure {
    int N = 0;
    std::vector<double> c;

    // ||F c - c||_2 / ||c||_2 under the unitary finite Fourier transform.
    double self_duality_residual() const;
};

// Wrap a construct_selfdual output (modulus N^2) as a measure, validating
// realness, symmetry, and self-duality.
CrystallineMeasure measure_from_function(const CyclicFunction& f, int N);

} // namespace czeta
