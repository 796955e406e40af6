#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "czeta/zerofind.hpp"

namespace czeta {

struct ZetaLikeFunction;

// Render an x-ray of f over the rectangle: polylines where Im f = 0 (the
// function is real; stroke width 2) and where Re f = 0 (purely imaginary;
// stroke width 1), extracted by marching squares with linear interpolation
// on an nx-by-ny sample grid. Zero markers are placed at thick/thin
// intersections; declared poles get a marker and a puncture of radius 0.05
// around which samples are skipped. 20 px per unit, y axis pointing up.
//
// Requires nx, ny >= 32.
std::string xray_svg(const std::function<cdouble(cdouble)>& f,
                     const Rectangle& rect, int nx, int ny,
                     const std::vector<cdouble>& poles = {});

std::string xray_svg(const ZetaLikeFunction& f, const Rectangle& rect, int nx,
                     int ny);

} // namespace czeta
