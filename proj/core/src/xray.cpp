#include "czeta/xray.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <sstream>
#include <thread>

#include "czeta/errors.hpp"
#include "czeta/zetafun.hpp"

namespace czeta {

namespace {

constexpr double kScale = 20.0;    // pixels per unit
constexpr double kPuncture = 0.05; // skip radius around declared poles

struct P2 {
    double x, y;
};

struct Seg {
    P2 a, b;
};

std::string fmt2(double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.2f", v);
    return b;
}

double nudge(double v) {
    // An exact zero at a corner would make the sign test ambiguous.
    return v == 0.0 ? std::numeric_limits<double>::denorm_min() : v;
}

P2 lerp_edge(P2 pa, P2 pb, double va, double vb) {
    double t = va / (va - vb);
    return {pa.x + (pb.x - pa.x) * t, pa.y + (pb.y - pa.y) * t};
}

// Marching squares in one cell; corners ordered LL, LR, UR, UL. Crossings
// come one per sign-changing edge; a saddle (four crossings) is resolved by
// the sign of the center average.
void cell_segments(const P2* c, const double* v, std::vector<Seg>& out) {
    static const int E[4][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    P2 pts[4];
    int ncross = 0;
    for (int e = 0; e < 4; ++e) {
        double va = v[E[e][0]], vb = v[E[e][1]];
        if ((va > 0.0) != (vb > 0.0)) {
            pts[ncross] = lerp_edge(c[E[e][0]], c[E[e][1]], va, vb);
            ++ncross;
        }
    }
    if (ncross == 2) {
        out.push_back({pts[0], pts[1]});
    } else if (ncross == 4) {
        double center = nudge(0.25 * (v[0] + v[1] + v[2] + v[3]));
        if ((center > 0.0) == (v[0] > 0.0)) {
            out.push_back({pts[0], pts[1]});
            out.push_back({pts[2], pts[3]});
        } else {
            out.push_back({pts[3], pts[0]});
            out.push_back({pts[1], pts[2]});
        }
    }
}

bool seg_intersect(const Seg& s1, const Seg& s2, P2& out) {
    double d1x = s1.b.x - s1.a.x, d1y = s1.b.y - s1.a.y;
    double d2x = s2.b.x - s2.a.x, d2y = s2.b.y - s2.a.y;
    double den = d1x * d2y - d1y * d2x;
    if (std::abs(den) < 1e-30) return false;
    double ex = s2.a.x - s1.a.x, ey = s2.a.y - s1.a.y;
    double t = (ex * d2y - ey * d2x) / den;
    double u = (ex * d1y - ey * d1x) / den;
    if (t < 0.0 || t > 1.0 || u < 0.0 || u > 1.0) return false;
    out = {s1.a.x + t * d1x, s1.a.y + t * d1y};
    return true;
}

} // namespace

std::string xray_svg(const std::function<cdouble(cdouble)>& f,
                     const Rectangle& rect, int nx, int ny,
                     const std::vector<cdouble>& poles) {
    if (nx < 32 || ny < 32)
        throw domain_error("xray: resolution must be at least 32x32");
    if (!(rect.sigma_max > rect.sigma_min) || !(rect.t_max > rect.t_min))
        throw domain_error("xray: rectangle is degenerate");

    const double dx = rect.width() / (nx - 1);
    const double dy = rect.height() / (ny - 1);
    const double qnan = std::numeric_limits<double>::quiet_NaN();
    std::vector<cdouble> grid(static_cast<size_t>(nx) * static_cast<size_t>(ny));

    auto fill_rows = [&](int j0, int j1) {
        for (int j = j0; j < j1; ++j) {
            double t = rect.t_min + j * dy;
            for (int i = 0; i < nx; ++i) {
                cdouble s(rect.sigma_min + i * dx, t);
                cdouble v;
                bool punctured = false;
                for (cdouble p : poles)
                    if (std::abs(s - p) < kPuncture) {
                        punctured = true;
                        break;
                    }
                if (punctured) {
                    v = cdouble(qnan, qnan);
                } else {
                    try {
                        v = f(s);
                    } catch (const pole_error&) {
                        v = cdouble(qnan, qnan);
                    }
                    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                        v = cdouble(qnan, qnan);
                }
                grid[static_cast<size_t>(j) * nx + i] = v;
            }
        }
    };

    unsigned nthreads =
        std::min(16u, std::max(1u, std::thread::hardware_concurrency()));
    int rows_per = (ny + static_cast<int>(nthreads) - 1) / static_cast<int>(nthreads);
    std::vector<std::future<void>> futs;
    for (int j0 = 0; j0 < ny; j0 += rows_per)
        futs.push_back(std::async(std::launch::async, fill_rows, j0,
                                  std::min(ny, j0 + rows_per)));
    for (auto& fu : futs) fu.get();

    std::vector<Seg> thick, thin; // thick: Im f = 0; thin: Re f = 0
    std::vector<P2> markers;
    long punctured_cells = 0;
    for (int j = 0; j + 1 < ny; ++j) {
        for (int i = 0; i + 1 < nx; ++i) {
            const cdouble* g = grid.data();
            cdouble v00 = g[static_cast<size_t>(j) * nx + i];
            cdouble v10 = g[static_cast<size_t>(j) * nx + i + 1];
            cdouble v11 = g[static_cast<size_t>(j + 1) * nx + i + 1];
            cdouble v01 = g[static_cast<size_t>(j + 1) * nx + i];
            if (!std::isfinite(v00.real()) || !std::isfinite(v10.real()) ||
                !std::isfinite(v11.real()) || !std::isfinite(v01.real())) {
                ++punctured_cells;
                continue;
            }
            double x0 = rect.sigma_min + i * dx, x1 = x0 + dx;
            double y0 = rect.t_min + j * dy, y1 = y0 + dy;
            P2 c[4] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
            double im[4] = {nudge(v00.imag()), nudge(v10.imag()),
                            nudge(v11.imag()), nudge(v01.imag())};
            double re[4] = {nudge(v00.real()), nudge(v10.real()),
                            nudge(v11.real()), nudge(v01.real())};
            size_t k0 = thick.size(), n0 = thin.size();
            cell_segments(c, im, thick);
            cell_segments(c, re, thin);
            for (size_t a = k0; a < thick.size(); ++a)
                for (size_t b = n0; b < thin.size(); ++b) {
                    P2 m;
                    if (seg_intersect(thick[a], thin[b], m)) markers.push_back(m);
                }
        }
    }

    double W = rect.width() * kScale;
    double H = rect.height() * kScale;
    auto px = [&rect](P2 p) {
        return fmt2((p.x - rect.sigma_min) * kScale) + "," +
               fmt2((rect.t_max - p.y) * kScale);
    };
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(W)
        << "\" height=\"" << fmt2(H) << "\" viewBox=\"0 0 " << fmt2(W) << ' '
        << fmt2(H) << "\">\n";
    svg << "<!-- x-ray: thick = locus Im f = 0 (f real), thin = locus Re f = 0 "
           "(f purely imaginary); punctured cells: "
        << punctured_cells << " -->\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";

    auto emit_paths = [&svg, &px](const std::vector<Seg>& segs,
                                  const char* cls, int width) {
        const size_t chunk = 512;
        for (size_t i = 0; i < segs.size(); i += chunk) {
            svg << "<path class=\"" << cls << "\" stroke=\"#000\" stroke-width=\""
                << width << "\" fill=\"none\" d=\"";
            size_t end = std::min(segs.size(), i + chunk);
            for (size_t k = i; k < end; ++k)
                svg << "M" << px(segs[k].a) << " L" << px(segs[k].b) << ' ';
            svg << "\"/>\n";
        }
    };
    emit_paths(thin, "thin", 1);
    emit_paths(thick, "thick", 2);

    for (const P2& m : markers)
        svg << "<circle class=\"zero\" cx=\"" << fmt2((m.x - rect.sigma_min) * kScale)
            << "\" cy=\"" << fmt2((rect.t_max - m.y) * kScale)
            << "\" r=\"3\" fill=\"#000\"/>\n";
    for (cdouble p : poles)
        if (rect.contains(p))
            svg << "<circle class=\"pole\" cx=\""
                << fmt2((p.real() - rect.sigma_min) * kScale) << "\" cy=\""
                << fmt2((rect.t_max - p.imag()) * kScale)
                << "\" r=\"4\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string xray_svg(const ZetaLikeFunction& f, const Rectangle& rect, int nx,
                     int ny) {
    std::vector<cdouble> poles;
    if (std::abs(f.pole_residue()) > 1e-12)
        poles.push_back(cdouble(1.0, 0.0));
    return xray_svg([&f](cdouble s) { return f.eval(s); }, rect, nx, ny, poles);
}

} // namespace czeta
