#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "czeta/errors.hpp"
#include "czeta/zerofind.hpp"
#include "czeta/zetafun.hpp"
#include "testutil.hpp"

using czeta::AnalyticTarget;
using czeta::cdouble;
using czeta::Rectangle;
using czeta::ZeroRecord;

namespace {

AnalyticTarget identity_target() {
    AnalyticTarget t;
    t.f = [](cdouble s) { return s; };
    t.f_ds = [](cdouble s) { return std::make_pair(s, cdouble(1.0, 0.0)); };
    return t;
}

AnalyticTarget double_zero_target(cdouble c) {
    AnalyticTarget t;
    t.f = [c](cdouble s) { return (s - c) * (s - c); };
    t.f_ds = [c](cdouble s) {
        return std::make_pair((s - c) * (s - c), 2.0 * (s - c));
    };
    return t;
}

bool has_zero_near(const std::vector<ZeroRecord>& zeros, cdouble where, double tol) {
    for (const ZeroRecord& z : zeros)
        if (std::abs(z.location - where) <= tol) return true;
    return false;
}

} // namespace

TEST_SUITE("zerofind") {

TEST_CASE("winding and isolation for the identity function") {
    Rectangle rect{-1.0, 1.25, -1.5, 1.0};
    AnalyticTarget t = identity_target();
    CHECK(czeta::winding_count(t, rect) == 1);

    std::vector<ZeroRecord> zeros = czeta::isolate_zeros(t, rect);
    REQUIRE(zeros.size() == 1);
    CHECK(std::abs(zeros[0].location) < 1e-10);
    CHECK(zeros[0].multiplicity == 1);
    CHECK(zeros[0].residual <= 1e-10);
    CHECK(zeros[0].isolation_radius > 0.0);
}

TEST_CASE("double zeros are certified with multiplicity two") {
    cdouble c(0.3, 0.4);
    Rectangle rect{-1.0, 1.0, -1.0, 1.0};
    AnalyticTarget t = double_zero_target(c);
    CHECK(czeta::winding_count(t, rect) == 2);

    std::vector<ZeroRecord> zeros = czeta::isolate_zeros(t, rect);
    REQUIRE(zeros.size() == 1);
    CHECK(zeros[0].multiplicity == 2);
    CHECK(std::abs(zeros[0].location - c) < 1e-6);
}

TEST_CASE("a zero on the boundary is reported, not silently resolved") {
    Rectangle rect{0.0, 1.0, -1.0, 1.0}; // the zero of f(s) = s sits on the edge
    CHECK_THROWS_AS(czeta::winding_count(identity_target(), rect),
                    czeta::boundary_error);
}

TEST_CASE("pole accounting for the Riemann function") {
    czeta::ZetaLikeFunction zr = czeta::riemann_zeta_function();
    // No zeros here, but the pole at s = 1 is inside: winding -1.
    Rectangle rect{-1.5, 2.0, -3.0, 3.0};
    CHECK(czeta::winding_count(zr, rect) == -1);
    std::vector<ZeroRecord> zeros = czeta::isolate_zeros(zr, rect);
    CHECK(zeros.empty());
}

TEST_CASE("trivial zeros of the Riemann function") {
    czeta::ZetaLikeFunction zr = czeta::riemann_zeta_function();
    Rectangle rect{-9.0, -1.0, -1.0, 1.0};
    std::vector<ZeroRecord> zeros = czeta::isolate_zeros(zr, rect);
    REQUIRE(zeros.size() == 4);
    for (double want : {-2.0, -4.0, -6.0, -8.0})
        CHECK(has_zero_near(zeros, {want, 0.0}, 1e-8));
}

TEST_CASE("first zero of the Riemann function on the critical line") {
    czeta::ZetaLikeFunction zr = czeta::riemann_zeta_function();
    Rectangle rect{0.0, 1.0, 1.0, 20.0};
    CHECK(czeta::winding_count(zr, rect) == 1);
    std::vector<ZeroRecord> zeros = czeta::isolate_zeros(zr, rect);
    REQUIRE(zeros.size() == 1);
    CHECK(std::abs(zeros[0].location - cdouble(0.5, 14.13472514173469379046)) < 1e-8);
}

TEST_CASE("example function: first strip zero") {
    czeta::ZetaLikeFunction f = czeta::build_zeta_m();
    Rectangle rect{0.0, 1.0, 1.0, 10.0};
    std::vector<ZeroRecord> zeros = czeta::isolate_zeros(f, rect);
    REQUIRE(zeros.size() == 1);
    CHECK(zeros[0].multiplicity == 1);
    CHECK(std::abs(zeros[0].location - cdouble(0.5, 4.7753735547)) < 1e-8);
}

TEST_CASE("example function: the four off-line zeros near t = 28..30") {
    czeta::ZetaLikeFunction f = czeta::build_zeta_m();
    Rectangle rect{-10.0, 11.0, 27.0, 31.0};
    std::vector<ZeroRecord> zeros = czeta::isolate_zeros(f, rect);
    REQUIRE(zeros.size() == 4);
    const cdouble expected[] = {
        {-6.3939983623, 28.0995236414},
        {7.3939983623, 28.0995236414},
        {-2.7891403465, 29.7107114647},
        {3.7891403465, 29.7107114647},
    };
    for (cdouble want : expected) {
        CAPTURE(want.real());
        CHECK(has_zero_near(zeros, want, 1e-8));
    }

    SUBCASE("winding is additive over a quadrisection") {
        int total = czeta::winding_count(f, rect);
        CHECK(total == 4);
        double sm = 0.5, tm = 29.0; // splitting lines avoid all four zeros
        int sum = czeta::winding_count(f, {rect.sigma_min, sm, rect.t_min, tm}) +
                  czeta::winding_count(f, {sm, rect.sigma_max, rect.t_min, tm}) +
                  czeta::winding_count(f, {rect.sigma_min, sm, tm, rect.t_max}) +
                  czeta::winding_count(f, {sm, rect.sigma_max, tm, rect.t_max});
        CHECK(sum == total);
    }

    SUBCASE("zero set respects the functional-equation symmetry") {
        for (const ZeroRecord& z : zeros) {
            cdouble partner = 1.0 - std::conj(z.location);
            CHECK(has_zero_near(zeros, partner, 1e-8));
        }
    }

    SUBCASE("mapping zeros to sequence terms") {
        czeta::RiemannSequenceCandidate seq = czeta::zeros_to_sequence(zeros);
        REQUIRE(seq.terms.size() == 4);
        // alpha = gamma + i(1/2 - beta); sorted by (Re, |Im|, Im).
        CHECK(std::abs(seq.terms[0] - cdouble(28.0995236414, -6.8939983623)) < 1e-8);
        CHECK(std::abs(seq.terms[1] - cdouble(28.0995236414, 6.8939983623)) < 1e-8);
        CHECK(std::abs(seq.terms[2] - cdouble(29.7107114647, -3.2891403465)) < 1e-8);
        CHECK(std::abs(seq.terms[3] - cdouble(29.7107114647, 3.2891403465)) < 1e-8);

        // Dropping one zero leaves an unmatched conjugate.
        std::vector<ZeroRecord> broken(zeros.begin(), zeros.end());
        broken.pop_back();
        CHECK_THROWS_AS(czeta::zeros_to_sequence(broken), czeta::construction_error);
    }
}

TEST_CASE("critical-line zeros map to real sequence terms") {
    ZeroRecord rec;
    rec.location = {0.5, 4.7753735547};
    czeta::RiemannSequenceCandidate seq = czeta::zeros_to_sequence({rec});
    REQUIRE(seq.terms.size() == 1);
    CHECK(seq.terms[0].real() == doctest::Approx(4.7753735547));
    CHECK(seq.terms[0].imag() == 0.0);
}

} // TEST_SUITE
