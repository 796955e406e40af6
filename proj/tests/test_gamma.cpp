#include "doctest.h"

#include <cmath>
#include <complex>

#include "czeta/errors.hpp"
#include "czeta/gamma.hpp"
#include "testutil.hpp"

using czeta::cdouble;
using testutil::rel_err;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.5772156649015328606065121;
} // namespace

TEST_SUITE("gamma") {

TEST_CASE("log_gamma frozen reference values") {
    struct Case {
        cdouble s;
        cdouble want;
    };
    const Case cases[] = {
        {{0.25, 0.0}, {1.28802252469807745737061, 0.0}},
        {{0.75, 0.0}, {0.203280951431295371481433, 0.0}},
        {{200.0, 0.0}, {857.9336698258574368182534, 0.0}},
        {{0.5, 200.0}, {-313.240326825774651104484, 859.6636816432444906711207}},
        {{-5.5, 0.5}, {-5.417025728331269415466576, -17.95252668303803423116338}},
        {{3.0, -140.0}, {-206.6383136215988451891605, -555.734907264925470772545}},
        {{0.001, 0.1}, {2.293772823241110510206173, -1.617956297424363850150636}},
    };
    for (const Case& c : cases) {
        CAPTURE(c.s.real());
        CAPTURE(c.s.imag());
        CHECK(std::abs(czeta::log_gamma(c.s) - c.want) <= 1e-13 * (1.0 + std::abs(c.want)));
    }
}

TEST_CASE("gamma_fn exact and frozen values") {
    CHECK(rel_err(czeta::gamma_fn(cdouble(5.0, 0.0)), cdouble(24.0, 0.0)) < 1e-14);
    CHECK(rel_err(czeta::gamma_fn(cdouble(0.5, 0.0)), cdouble(std::sqrt(kPi), 0.0)) < 1e-14);
    CHECK(rel_err(czeta::gamma_fn(cdouble(0.25, 0.0)),
                  cdouble(3.625609908221908311930685, 0.0)) < 1e-14);
    CHECK(czeta::gamma_fn(cdouble(3.5, 0.0)).imag() == 0.0);
}

TEST_CASE("recurrence: log_gamma(s+1) - log_gamma(s) = log s up to 2 pi i") {
    const cdouble pts[] = {{0.3, 0.0},   {2.5, 7.0},    {-3.3, 1.7},
                           {12.0, -40.0}, {0.5, 150.0}, {-20.2, 0.9}};
    for (cdouble s : pts) {
        cdouble r = czeta::log_gamma(s + 1.0) - czeta::log_gamma(s) - std::log(s);
        // Collapse the 2 pi i ambiguity of the principal branches.
        double turns = r.imag() / (2.0 * kPi);
        r -= cdouble(0.0, 2.0 * kPi * std::round(turns));
        CAPTURE(s.real());
        CAPTURE(s.imag());
        CHECK(std::abs(r) <= 1e-12);
    }
}

TEST_CASE("reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)") {
    const cdouble pts[] = {{0.3, 0.4}, {-1.2, 2.3}, {0.5, -6.0}};
    for (cdouble s : pts) {
        cdouble lhs = czeta::gamma_fn(s) * czeta::gamma_fn(1.0 - s);
        cdouble rhs = kPi / std::sin(kPi * s);
        CHECK(rel_err(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("log_gamma and digamma reject nonpositive integers") {
    CHECK_THROWS_AS(czeta::log_gamma(cdouble(0.0, 0.0)), czeta::pole_error);
    CHECK_THROWS_AS(czeta::log_gamma(cdouble(-3.0, 0.0)), czeta::pole_error);
    CHECK_THROWS_AS(czeta::digamma(cdouble(-1.0, 0.0)), czeta::pole_error);
}

TEST_CASE("digamma frozen reference values") {
    CHECK(rel_err(czeta::digamma(cdouble(1.0, 0.0)), cdouble(-kEulerGamma, 0.0)) < 1e-13);
    CHECK(rel_err(czeta::digamma(cdouble(2.0, 0.0)), cdouble(1.0 - kEulerGamma, 0.0)) < 1e-13);
    CHECK(rel_err(czeta::digamma(cdouble(0.5, 0.0)),
                  cdouble(-kEulerGamma - 2.0 * std::log(2.0), 0.0)) < 1e-13);
    struct Case {
        cdouble s;
        cdouble want;
    };
    const Case cases[] = {
        {{0.25, 0.0}, {-4.22745353337626540808953, 0.0}},
        {{5.25, 0.0}, {1.559977336407545552192018, 0.0}},
        {{2.75, 0.0}, {0.8189010249754325922778751, 0.0}},
        {{60.0, 0.0}, {4.085988081383538289915668, 0.0}},
        {{0.5, 30.0}, {3.401151076358521837887912, 1.570796326794896619231322}},
        {{-3.3, 1.7}, {1.427961358149725578511753, 2.722653493537359033893152}},
    };
    for (const Case& c : cases) {
        CAPTURE(c.s.real());
        CHECK(std::abs(czeta::digamma(c.s) - c.want) <= 1e-12 * (1.0 + std::abs(c.want)));
    }
}

TEST_CASE("digamma recurrence psi(s+1) = psi(s) + 1/s") {
    const cdouble pts[] = {{0.2, 0.0}, {1.5, 3.5}, {-2.7, 0.4}, {8.0, -25.0}};
    for (cdouble s : pts) {
        cdouble r = czeta::digamma(s + 1.0) - czeta::digamma(s) - 1.0 / s;
        CHECK(std::abs(r) <= 1e-12);
    }
}

} // TEST_SUITE
