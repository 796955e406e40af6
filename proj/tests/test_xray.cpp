#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "czeta/errors.hpp"
#include "czeta/xray.hpp"
#include "czeta/zerofind.hpp"
#include "czeta/zetafun.hpp"

using czeta::cdouble;
using czeta::Rectangle;

namespace {

// Extract the marker centers of one circle class and map them from pixel
// space back into the complex plane (20 px per unit, y axis flipped).
std::vector<cdouble> circle_centers(const std::string& svg, const std::string& cls,
                                    const Rectangle& rect) {
    std::vector<cdouble> out;
    const std::string needle = "<circle class=\"" + cls + "\" cx=\"";
    size_t pos = 0;
    while ((pos = svg.find(needle, pos)) != std::string::npos) {
        double cx = 0.0, cy = 0.0;
        if (std::sscanf(svg.c_str() + pos + needle.size(), "%lf\" cy=\"%lf",
                        &cx, &cy) == 2)
            out.emplace_back(rect.sigma_min + cx / 20.0, rect.t_max - cy / 20.0);
        pos += needle.size();
    }
    return out;
}

bool has_marker_near(const std::vector<cdouble>& markers, cdouble where,
                     double tol) {
    for (cdouble m : markers)
        if (std::abs(m - where) < tol) return true;
    return false;
}

} // namespace

TEST_SUITE("xray") {

TEST_CASE("a linear function gets exactly one zero marker at its root") {
    Rectangle rect{-1.0, 1.0, -1.0, 1.0};
    std::string svg = czeta::xray_svg([](cdouble s) { return s; }, rect, 64, 64);
    CHECK(svg.rfind("<svg xmlns", 0) == 0);
    CHECK(svg.find("</svg>\n") != std::string::npos);
    CHECK(svg.find("class=\"thick\"") != std::string::npos);
    CHECK(svg.find("class=\"thin\"") != std::string::npos);

    std::vector<cdouble> zeros = circle_centers(svg, "zero", rect);
    REQUIRE(zeros.size() == 1);
    CHECK(std::abs(zeros[0]) < 0.05);
    CHECK(circle_centers(svg, "pole", rect).empty());
}

TEST_CASE("marker placement respects the y axis orientation") {
    Rectangle rect{-1.0, 1.0, -1.0, 1.0};
    const cdouble root(0.3, 0.4);
    std::string svg = czeta::xray_svg([root](cdouble s) { return s - root; },
                                      rect, 64, 64);
    std::vector<cdouble> zeros = circle_centers(svg, "zero", rect);
    REQUIRE(zeros.size() == 1);
    CHECK(std::abs(zeros[0] - root) < 0.05);
}

TEST_CASE("rendering is deterministic") {
    Rectangle rect{-1.0, 1.0, -1.0, 1.0};
    auto f = [](cdouble s) { return s * s - cdouble(0.25, 0.1); };
    CHECK(czeta::xray_svg(f, rect, 48, 48) == czeta::xray_svg(f, rect, 48, 48));
}

TEST_CASE("declared poles are punctured and marked") {
    czeta::ZetaLikeFunction zeta = czeta::riemann_zeta_function();
    Rectangle rect{-0.5, 2.5, -1.2, 1.2};
    std::string svg = czeta::xray_svg(zeta, rect, 64, 64);

    std::vector<cdouble> poles = circle_centers(svg, "pole", rect);
    REQUIRE(poles.size() == 1);
    CHECK(std::abs(poles[0] - cdouble(1.0, 0.0)) < 0.01);

    size_t cpos = svg.find("punctured cells: ");
    REQUIRE(cpos != std::string::npos);
    long punctured = std::strtol(svg.c_str() + cpos + 17, nullptr, 10);
    CHECK(punctured > 0);

    // No zero marker inside the puncture.
    std::vector<cdouble> zeros = circle_centers(svg, "zero", rect);
    CHECK_FALSE(has_marker_near(zeros, cdouble(1.0, 0.0), 0.05));
}

TEST_CASE("resolution and rectangle validation") {
    Rectangle rect{-1.0, 1.0, -1.0, 1.0};
    auto f = [](cdouble s) { return s; };
    CHECK_THROWS_AS(czeta::xray_svg(f, rect, 16, 64), czeta::domain_error);
    CHECK_THROWS_AS(czeta::xray_svg(f, rect, 64, 16), czeta::domain_error);
    Rectangle degenerate{1.0, 1.0, -1.0, 1.0};
    CHECK_THROWS_AS(czeta::xray_svg(f, degenerate, 64, 64), czeta::domain_error);
    Rectangle inverted{1.0, -1.0, -1.0, 1.0};
    CHECK_THROWS_AS(czeta::xray_svg(f, inverted, 64, 64), czeta::domain_error);
}

} // TEST_SUITE

TEST_SUITE("xray-heavy") {

TEST_CASE("full-window render marks every zero found by isolation") {
    czeta::ZetaLikeFunction f = czeta::build_zeta_m();
    Rectangle rect{-21.0, 22.0, -10.0, 80.0};

    czeta::AnalyticTarget target = czeta::make_target(f);
    std::vector<czeta::ZeroRecord> zeros = czeta::isolate_zeros(target, rect, 1e-10);
    REQUIRE(zeros.size() >= 18);

    std::string svg = czeta::xray_svg(f, rect, 512, 1024);
    std::vector<cdouble> markers = circle_centers(svg, "zero", rect);
    CHECK(markers.size() >= zeros.size());

    // Grid cells are 43/511 x 90/1023 units; markers should land within
    // about 1.5 cells of the refined zeros.
    for (const czeta::ZeroRecord& rec : zeros) {
        CAPTURE(rec.location.real());
        CAPTURE(rec.location.imag());
        CHECK(has_marker_near(markers, rec.location, 0.15));
    }

    // The pole is marked and the puncture keeps zero markers away from it.
    std::vector<cdouble> poles = circle_centers(svg, "pole", rect);
    REQUIRE(poles.size() == 1);
    CHECK(std::abs(poles[0] - cdouble(1.0, 0.0)) < 0.01);
    CHECK_FALSE(has_marker_near(markers, cdouble(1.0, 0.0), 0.04));
}

} // TEST_SUITE
