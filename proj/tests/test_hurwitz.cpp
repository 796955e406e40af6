#include "doctest.h"

#include <cmath>
#include <complex>

#include "czeta/dd.hpp"
#include "czeta/errors.hpp"
#include "czeta/hurwitz.hpp"
#include "czeta/special.hpp"
#include "testutil.hpp"

using czeta::cdouble;
using czeta::dd;
using testutil::rel_err;

namespace {
constexpr double kZeta2 = 1.644934066848226436472415;
constexpr double kZeta3 = 1.202056903159594285399738;
} // namespace

TEST_SUITE("hurwitz") {

TEST_CASE("classical exact values") {
    CHECK(rel_err(czeta::hurwitz_zeta({2.0, 0.0}, 1.0), {kZeta2, 0.0}) < 1e-13);
    CHECK(rel_err(czeta::hurwitz_zeta({3.0, 0.0}, 0.5), {7.0 * kZeta3, 0.0}) < 1e-13);
    // zeta(0, a) = 1/2 - a.
    CHECK(std::abs(czeta::hurwitz_zeta({0.0, 0.0}, 0.25) - cdouble(0.25, 0.0)) < 1e-13);
    CHECK(std::abs(czeta::hurwitz_zeta({0.0, 0.0}, 0.37) - cdouble(0.13, 0.0)) < 1e-13);
    // zeta(1/2, 1) is the classical zeta(1/2).
    CHECK(rel_err(czeta::hurwitz_zeta({0.5, 0.0}, 1.0),
                  {-1.460354508809586812889499, 0.0}) < 1e-13);
}

TEST_CASE("frozen reference values across the plane") {
    struct Case {
        cdouble s;
        double a;
        cdouble want;
    };
    const Case cases[] = {
        {{0.5, 119.0}, 0.5, {-0.7381677621357181307127714, 0.3349304354815857716306122}},
        {{3.25, 41.5}, 1.0 / 3.0, {-1.109000663106762605752422, 35.78235966145884655374279}},
        {{120.0, 0.0}, 0.9999, {1.012072896150119199322048, 0.0}},
        {{-0.5, 3.0}, 1.0, {0.3529138798192872527249093, 0.01212495441603698204867151}},
        {{1.5, 0.0}, 0.02, {356.126348312353406291336, 0.0}},
        {{-3.5, 22.0}, 5.0 / 12.0, {117.2893207252685242305592, -110.7270219368356565498047}},
        {{-20.5, 70.0}, 0.25, {-7.485060013452569207109e21, -1.079507768356363047576e22}},
        {{-58.2, -0.7}, 2.0 / 3.0, {5.907980100241801192082301e31, 6.559239399733931929881019e31}},
        {{-14.0, 0.0}, 0.28, {-0.1823785829309519028603152, 0.0}},
        {{0.3, 7.2}, 0.28, {-1.222906111438332550623867, -0.4052198694492428796127684}},
    };
    for (const Case& c : cases) {
        CAPTURE(c.s.real());
        CAPTURE(c.s.imag());
        CAPTURE(c.a);
        CHECK(rel_err(czeta::hurwitz_zeta(c.s, c.a), c.want) < 2e-12);
    }
}

TEST_CASE("frozen s-derivative values") {
    struct Case {
        cdouble s;
        double a;
        cdouble want;
    };
    const Case cases[] = {
        {{2.0, 0.0}, 0.25, {21.14827961753928914044521, 0.0}},
        {{0.5, 14.134725}, 0.5, {-1.750798849747324960704781, -0.6922790308368971034956538}},
        {{-2.5, 9.0}, 5.0 / 12.0, {-0.5660609936377431502651064, 1.667971259034417473999273}},
    };
    for (const Case& c : cases) {
        auto [value, ds] = czeta::hurwitz_zeta_ds(c.s, c.a);
        CHECK(rel_err(value, czeta::hurwitz_zeta(c.s, c.a)) < 1e-14);
        CHECK(rel_err(ds, c.want) < 2e-12);
    }
}

TEST_CASE("shift recurrence zeta(s,a) = a^-s + zeta(s,a+1)") {
    // a+1 > 1 is outside the public domain; use the raw Euler-Maclaurin
    // entry point for the shifted term.
    const cdouble ss[] = {{3.7, 0.0}, {0.5, 14.0}, {2.0, -35.0}, {6.3, 49.0}};
    const double as[] = {0.25, 1.0 / 3.0, 0.5, 0.9};
    for (cdouble s : ss) {
        for (double a : as) {
            int cutoff = czeta::hurwitz_detail::em_cutoff(std::abs(s), a + 1.0, 24, 2.83);
            cdouble shifted = czeta::hurwitz_detail::em_direct(s, a + 1.0, cutoff, 24);
            cdouble direct = czeta::hurwitz_zeta(s, a);
            cdouble recur = std::pow(cdouble(a, 0.0), -s) + shifted;
            CAPTURE(s.real());
            CAPTURE(s.imag());
            CAPTURE(a);
            CHECK(rel_err(direct, recur) < 1e-11);
        }
    }
}

TEST_CASE("half shift identity zeta(s,1/2) = (2^s - 1) zeta(s,1)") {
    const cdouble ss[] = {{2.5, 0.0}, {0.5, 21.0}, {-0.4, 3.0}, {8.0, -11.0}, {-6.5, 40.0}};
    for (cdouble s : ss) {
        cdouble lhs = czeta::hurwitz_zeta(s, 0.5);
        cdouble rhs = (std::pow(cdouble(2.0, 0.0), s) - 1.0) * czeta::hurwitz_zeta(s, 1.0);
        CAPTURE(s.real());
        CAPTURE(s.imag());
        CHECK(rel_err(lhs, rhs) < 1e-11);
    }
}

TEST_CASE("negative integer arguments hit Bernoulli polynomials") {
    // zeta(-n, a) = -B_{n+1}(a) / (n+1).
    const double as[] = {0.25, 1.0 / 3.0, 5.0 / 12.0, 0.5};
    for (int n = 0; n <= 3; ++n) {
        for (double a : as) {
            czeta::Rational ar(static_cast<long>(std::lround(a * 12.0)), 12);
            double want = -czeta::to_double(
                              czeta::bernoulli_polynomial(static_cast<unsigned>(n) + 1, ar)) /
                          (n + 1.0);
            double got = czeta::hurwitz_zeta({static_cast<double>(-n), 0.0}, a).real();
            CAPTURE(n);
            CAPTURE(a);
            CHECK(std::abs(got - want) < 1e-11 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("conjugate symmetry") {
    const cdouble ss[] = {{2.5, 9.0}, {-4.5, 17.0}, {0.3, 7.2}};
    for (cdouble s : ss) {
        cdouble v = czeta::hurwitz_zeta(s, 0.28);
        cdouble vc = czeta::hurwitz_zeta(std::conj(s), 0.28);
        CHECK(rel_err(vc, std::conj(v)) < 1e-13);
    }
}

TEST_CASE("extended precision agrees with double and sharpens it") {
    dd v = czeta::hurwitz_zeta_dd(dd(2.0), dd(1.0));
    // First 16 digits must match the double evaluation ...
    CHECK(std::abs(static_cast<double>(v) - kZeta2) < 1e-15);
    // ... and the dd error against zeta(2) carried to 25 digits as an exact
    // rational is far below double resolution.
    dd ref = czeta::to_dd(czeta::Rational(czeta::BigInt("1644934066848226436472415"),
                                          czeta::BigInt("1000000000000000000000000")));
    CHECK(std::abs(static_cast<double>(v - ref)) < 1e-24);

    // Half-shift identity in extended precision.
    dd lhs = czeta::hurwitz_zeta_dd(dd(3.0), dd(0.5));
    dd rhs = (czeta::dd_pow(dd(2.0), dd(3.0)) - dd(1.0)) * czeta::hurwitz_zeta_dd(dd(3.0), dd(1.0));
    CHECK(std::abs(static_cast<double>(lhs - rhs)) < 1e-24);
}

TEST_CASE("domain and pole errors") {
    CHECK_THROWS_AS(czeta::hurwitz_zeta({2.0, 0.0}, 0.0), czeta::domain_error);
    CHECK_THROWS_AS(czeta::hurwitz_zeta({2.0, 0.0}, 1.5), czeta::domain_error);
    CHECK_THROWS_AS(czeta::hurwitz_zeta({1.0, 0.0}, 1.0), czeta::pole_error);
    // Reflection requires |Im s| within the guarded strip.
    CHECK_THROWS_AS(czeta::hurwitz_zeta({-5.0, 500.0}, 0.25), czeta::domain_error);
    // Extended precision is restricted to the real-axis policy.
    CHECK_THROWS_AS(czeta::hurwitz_zeta_dd(dd(-2.0), dd(1.0)), czeta::domain_error);
}

TEST_CASE("reflect table matches direct evaluation on both routes") {
    // The table is the combination-level workhorse: zeta(w, r/q) for a
    // common modulus; reflect_eval must reproduce the public dispatch.
    cdouble s(-3.5, 22.0);
    auto table = czeta::hurwitz_detail::build_reflect_table(s, 12, true);
    CHECK(table.q == 12);
    cdouble via_table = czeta::hurwitz_detail::reflect_eval(table, 5, 12);
    cdouble direct = czeta::hurwitz_zeta(s, 5.0 / 12.0);
    CHECK(rel_err(via_table, direct) < 1e-12);

    auto [v, ds] = czeta::hurwitz_detail::reflect_eval_ds(table, 1, 4);
    cdouble direct_v = czeta::hurwitz_zeta(s, 0.25);
    auto direct_pair = czeta::hurwitz_zeta_ds(s, 0.25);
    CHECK(rel_err(v, direct_v) < 1e-12);
    CHECK(rel_err(ds, direct_pair.second) < 1e-11);
}

TEST_CASE("rationalize_shift recognizes small rationals only") {
    long p = 0, q = 0;
    CHECK(czeta::hurwitz_detail::rationalize_shift(5.0 / 12.0, 360, &p, &q));
    CHECK(p == 5);
    CHECK(q == 12);
    CHECK(czeta::hurwitz_detail::rationalize_shift(1.0, 360, &p, &q));
    CHECK(p == q);
    CHECK_FALSE(czeta::hurwitz_detail::rationalize_shift(0.2885639123986, 360, &p, &q));
}

} // TEST_SUITE
