#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "czeta/sequence.hpp"

namespace czeta {

using cdouble = std::complex<double>;

struct ZetaLikeFunction;

// Axis-aligned closed rectangle in the complex plane.
struct Rectangle {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;

    double width() const { return sigma_max - sigma_min; }
    double height() const { return t_max - t_min; }
    cdouble center() const {
        return {0.5 * (sigma_min + sigma_max), 0.5 * (t_min + t_max)};
    }
    bool contains(cdouble z) const {
        return z.real() >= sigma_min && z.real() <= sigma_max &&
               z.imag() >= t_min && z.imag() <= t_max;
    }
};

// A zero located by the argument principle plus Newton refinement.
struct ZeroRecord {
    cdouble location;
    int multiplicity = 1;
    // |f| at the reported location.
    double residual = 0.0;
    // Radius of the disc used to certify the multiplicity; the located zero
    // is the only one inside it.
    double isolation_radius = 0.0;
};

// What the scanner needs to know about a function: values, derivatives, and
// the declared simple poles (counted when converting boundary winding into a
// zero count).
struct AnalyticTarget {
    std::function<cdouble(cdouble)> f;
    std::function<std::pair<cdouble, cdouble>(cdouble)> f_ds;
    std::vector<cdouble> poles;
};

// Wrap a zeta-like function; declares the pole at s = 1 when the residue is
// nonzero.
AnalyticTarget make_target(const ZetaLikeFunction& f);

// Boundary winding number of f around the rectangle (zeros minus poles
// inside, counted with multiplicity). The boundary is traversed
// counterclockwise with adaptive argument tracking.
//
// Throws boundary_error if the argument variation cannot be resolved (a zero
// or pole on or numerically indistinguishable from the boundary).
int winding_count(const AnalyticTarget& target, const Rectangle& rect);
int winding_count(const ZetaLikeFunction& f, const Rectangle& rect);

// Find all zeros of the target inside the rectangle. Subdivides until each
// piece holds at most one zero, refines by Newton iteration, and certifies
// each multiplicity by a small-circle winding count. Results are sorted by
// (imaginary part, real part).
//
// Throws boundary_error if the outer boundary cannot be resolved, and
// convergence_error if isolation fails within max_depth subdivision levels.
std::vector<ZeroRecord> isolate_zeros(const AnalyticTarget& target,
                                      const Rectangle& rect,
                                      double tol = 1e-10, int max_depth = 32);
std::vector<ZeroRecord> isolate_zeros(const ZetaLikeFunction& f,
                                      const Rectangle& rect,
                                      double tol = 1e-10, int max_depth = 32);

// Map a zero list (assumed closed under conjugation and s <-> 1 - conj(s))
// into a candidate sequence: each zero s = beta + i*gamma with gamma > 0
// yields alpha = gamma + i(1/2 - beta), repeated per multiplicity, sorted by
// (Re, |Im|, Im) so conjugate partners sit adjacent.
//
// Throws construction_error when a non-real alpha lacks its conjugate
// partner.
RiemannSequenceCandidate zeros_to_sequence(const std::vector<ZeroRecord>& zeros);

} // namespace czeta
