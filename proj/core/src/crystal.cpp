#include "czeta/crystal.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "czeta/errors.hpp"

namespace czeta {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

std::vector<cdouble> fourier_roots(int M) {
    std::vector<cdouble> w(static_cast<size_t>(M));
    for (int j = 0; j < M; ++j) {
        double ang = -kTwoPi * j / M;
        w[static_cast<size_t>(j)] = cdouble(std::cos(ang), std::sin(ang));
    }
    return w;
}

} // namespace

CyclicFunction finite_fourier(const CyclicFunction& f) {
    int M = f.modulus;
    if (M < 1 || static_cast<int>(f.values.size()) != M)
        throw domain_error("finite_fourier: invalid cyclic function");
    auto w = fourier_roots(M);
    double scale = 1.0 / std::sqrt(static_cast<double>(M));
    CyclicFunction out;
    out.modulus = M;
    out.values.assign(static_cast<size_t>(M), cdouble(0.0));
    for (int n = 0; n < M; ++n) {
        cdouble acc = 0.0;
        for (int m = 0; m < M; ++m) {
            long long idx = (static_cast<long long>(n) * m) % M;
            acc += f.values[static_cast<size_t>(m)] * w[static_cast<size_t>(idx)];
        }
        out.values[static_cast<size_t>(n)] = acc * scale;
    }
    return out;
}

EigenspaceDims eigenspace_dimensions(int M) {
    if (M < 1)
        throw domain_error("eigenspace_dimensions: modulus must be positive");
    auto w = fourier_roots(M);
    double scale = 1.0 / std::sqrt(static_cast<double>(M));
    Eigen::MatrixXcd F(M, M);
    for (int n = 0; n < M; ++n)
        for (int m = 0; m < M; ++m)
            F(n, m) = w[static_cast<size_t>((static_cast<long long>(n) * m) % M)] * scale;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(F, false);
    if (solver.info() != Eigen::Success)
        throw convergence_error("eigenspace_dimensions: eigensolver failed");
    EigenspaceDims dims;
    for (int k = 0; k < M; ++k) {
        cdouble lambda = solver.eigenvalues()(k);
        double ang = std::arg(lambda);
        // Nearest multiple of pi/2, folded to {0, 1, 2, 3} ~ {1, i, -1, -i}.
        int quadrant = static_cast<int>(std::lround(ang / (kTwoPi / 4.0)));
        double nearest = quadrant * (kTwoPi / 4.0);
        if (std::abs(ang - nearest) > 1e-6)
            throw convergence_error(
                "eigenspace_dimensions: eigenvalue does not round to a fourth root of unity");
        switch ((quadrant % 4 + 4) % 4) {
            case 0: ++dims.d1; break;
            case 1: ++dims.di; break;
            case 2: ++dims.dm1; break;
            default: ++dims.dmi; break;
        }
    }
    return dims;
}

CyclicFunction construct_selfdual(int N, int T) {
    if (N < 1 || N % 2 == 0)
        throw domain_error("construct_selfdual: N must be odd and positive");
    if (T < 1)
        throw domain_error("construct_selfdual: T must be positive");
    long long M_ll = static_cast<long long>(N) * N;
    if (M_ll > 1 << 14)
        throw domain_error("construct_selfdual: modulus too large");
    int M = static_cast<int>(M_ll);
    if (!(M > 4 * N * T + 1))
        throw domain_error("construct_selfdual: window too wide (need N^2 > 4NT + 1)");

    int half = (M - 1) / 2;
    int lo = N * T + 1;             // first index outside the window
    int W = half - N * T;           // number of symmetric pair-vectors
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    // Column j of B is the unit vector (e_{lo+j} + e_{M-lo-j}) / sqrt(2).
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(M, W);
    for (int j = 0; j < W; ++j) {
        B(lo + j, j) = inv_sqrt2;
        B(M - lo - j, j) = inv_sqrt2;
    }

    // Real action of the transform on symmetric vectors (cosine form).
    auto w = fourier_roots(M);
    double scale = 1.0 / std::sqrt(static_cast<double>(M));
    Eigen::MatrixXd FB = Eigen::MatrixXd::Zero(M, W);
    for (int j = 0; j < W; ++j) {
        int a = lo + j;
        for (int n = 0; n < M; ++n) {
            double ca = w[static_cast<size_t>((static_cast<long long>(n) * a) % M)].real();
            FB(n, j) = 2.0 * inv_sqrt2 * ca * scale;
        }
    }

    Eigen::MatrixXd A = 0.5 * (B - FB);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();

    std::vector<int> kernel;
    for (int j = 0; j < sv.size(); ++j)
        if (sv(j) < 1e-10)
            kernel.push_back(j);
    if (kernel.empty())
        throw construction_error("construct_selfdual: numerical kernel is empty");

    // Singular values are sorted descending, so the smallest is last; if
    // several are indistinguishable, break the tie lexicographically on the
    // rounded, sign-normalized coefficient vectors.
    double smallest = sv(kernel.back());
    std::vector<int> tied;
    for (int j : kernel)
        if (sv(j) <= smallest * (1.0 + 1e-12) + 1e-300)
            tied.push_back(j);
    auto rounded_canonical = [&](int col) {
        Eigen::VectorXd v = svd.matrixV().col(col);
        int imax = 0;
        for (int i = 1; i < v.size(); ++i)
            if (std::abs(v(i)) > std::abs(v(imax))) imax = i;
        if (v(imax) < 0) v = -v;
        std::vector<long long> key(static_cast<size_t>(v.size()));
        for (int i = 0; i < v.size(); ++i)
            key[static_cast<size_t>(i)] = std::llround(v(i) * 1e9);
        return key;
    };
    int chosen = tied.front();
    if (tied.size() > 1) {
        auto best = rounded_canonical(chosen);
        for (size_t k = 1; k < tied.size(); ++k) {
            auto cand = rounded_canonical(tied[k]);
            if (cand < best) {
                best = cand;
                chosen = tied[k];
            }
        }
    }

    Eigen::VectorXd fvec = B * svd.matrixV().col(chosen);
    int imax = 0;
    for (int i = 1; i < M; ++i)
        if (std::abs(fvec(i)) > std::abs(fvec(imax))) imax = i;
    if (fvec(imax) == 0.0)
        throw construction_error("construct_selfdual: kernel vector vanished");
    fvec /= fvec(imax);

    CyclicFunction f;
    f.modulus = M;
    f.values.resize(static_cast<size_t>(M));
    for (int i = 0; i < M; ++i)
        f.values[static_cast<size_t>(i)] = cdouble(fvec(i), 0.0);

    // Verify the advertised postcondition before handing the vector out.
    CyclicFunction Ff = finite_fourier(f);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < M; ++i) {
        num += std::norm(Ff.values[static_cast<size_t>(i)] - f.values[static_cast<size_t>(i)]);
        den += std::norm(f.values[static_cast<size_t>(i)]);
    }
    if (!(std::sqrt(num) <= 1e-10 * std::sqrt(den)))
        throw construction_error("construct_selfdual: self-duality residual too large");
    return f;
}

double CrystallineMeasure::self_duality_residual() const {
    CyclicFunction f;
    f.modulus = N * N;
    f.values.reserve(c.size());
    for (double v : c) f.values.emplace_back(v, 0.0);
    CyclicFunction Ff = finite_fourier(f);
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < c.size(); ++i) {
        num += std::norm(Ff.values[i] - f.values[i]);
        den += c[i] * c[i];
    }
    return den == 0.0 ? 0.0 : std::sqrt(num) / std::sqrt(den);
}

CrystallineMeasure measure_from_function(const CyclicFunction& f, int N) {
    if (N < 1 || N % 2 == 0)
        throw domain_error("measure_from_function: N must be odd and positive");
    int M = N * N;
    if (f.modulus != M || static_cast<int>(f.values.size()) != M)
        throw construction_error("measure_from_function: modulus must equal N^2");
    CrystallineMeasure m;
    m.N = N;
    m.c.resize(static_cast<size_t>(M));
    double maxabs = 0.0;
    for (int i = 0; i < M; ++i) {
        const cdouble& v = f.values[static_cast<size_t>(i)];
        if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
            throw construction_error("measure_from_function: coefficients must be real");
        m.c[static_cast<size_t>(i)] = v.real();
        maxabs = std::max(maxabs, std::abs(v.real()));
    }
    if (maxabs == 0.0)
        throw construction_error("measure_from_function: zero coefficient vector");
    for (int i = 1; i < M; ++i)
        if (std::abs(m.c[static_cast<size_t>(i)] - m.c[static_cast<size_t>(M - i)]) >
            1e-12 * maxabs)
            throw construction_error("measure_from_function: coefficients must be symmetric");
    if (m.self_duality_residual() > 1e-10)
        throw construction_error("measure_from_function: self-duality residual too large");
    return m;
}

} // namespace czeta
