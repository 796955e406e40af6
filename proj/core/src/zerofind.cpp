#include "czeta/zerofind.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <sstream>

#include "czeta/errors.hpp"
#include "czeta/zetafun.hpp"

namespace czeta {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

std::string describe(const Rectangle& r) {
    std::ostringstream os;
    os << "[" << r.sigma_min << ", " << r.sigma_max << "] x [" << r.t_min
       << ", " << r.t_max << "]";
    return os.str();
}

cdouble boundary_eval(const AnalyticTarget& target, cdouble z) {
    cdouble v;
    try {
        v = target.f(z);
    } catch (const pole_error&) {
        throw boundary_error("winding: pole on the contour");
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw boundary_error("winding: function not finite on the contour");
    if (std::abs(v) < 1e-300)
        throw boundary_error("winding: function vanishes on the contour");
    return v;
}

// Argument variation along [z1, z2] given endpoint values; bisects until each
// step turns by less than pi/2, which pins the continuous branch.
double arg_variation(const AnalyticTarget& target, cdouble z1, cdouble v1,
                     cdouble z2, cdouble v2, int depth) {
    double d = std::arg(v2 / v1);
    if (std::abs(d) < 0.5 * kPi) return d;
    if (depth >= 48)
        throw boundary_error(
            "winding: argument variation unresolved (zero or pole on or too close to the contour)");
    cdouble zm = 0.5 * (z1 + z2);
    cdouble vm = boundary_eval(target, zm);
    return arg_variation(target, z1, v1, zm, vm, depth + 1) +
           arg_variation(target, zm, vm, z2, v2, depth + 1);
}

double edge_variation(const AnalyticTarget& target, cdouble from, cdouble to) {
    double len = std::abs(to - from);
    int n = std::max(1, static_cast<int>(std::ceil(len / 0.25)));
    double total = 0.0;
    cdouble zprev = from;
    cdouble vprev = boundary_eval(target, from);
    for (int i = 1; i <= n; ++i) {
        cdouble z = (i == n) ? to
                             : from + (to - from) * (static_cast<double>(i) / n);
        cdouble v = boundary_eval(target, z);
        total += arg_variation(target, zprev, vprev, z, v, 0);
        zprev = z;
        vprev = v;
    }
    return total;
}

int poles_inside(const AnalyticTarget& target, const Rectangle& r) {
    int c = 0;
    for (cdouble p : target.poles)
        if (p.real() > r.sigma_min && p.real() < r.sigma_max &&
            p.imag() > r.t_min && p.imag() < r.t_max)
            ++c;
    return c;
}

// Number of zeros inside, with multiplicity.
int zero_count(const AnalyticTarget& target, const Rectangle& r) {
    int n = winding_count(target, r) + poles_inside(target, r);
    if (n < 0)
        throw convergence_error(
            "isolate_zeros: negative zero count in " + describe(r) +
            " (declared poles inconsistent with the function)");
    return n;
}

std::optional<cdouble> newton_refine(const AnalyticTarget& target,
                                     const Rectangle& r, double tol) {
    // Allow transient excursions slightly outside the rectangle.
    double mx = 0.5 * std::max(r.width(), r.height());
    Rectangle roam{r.sigma_min - mx, r.sigma_max + mx, r.t_min - mx,
                   r.t_max + mx};
    cdouble z = r.center();
    double thr = std::max(1e-13, 0.01 * tol);
    try {
        for (int it = 0; it < 200; ++it) {
            auto [v, dv] = target.f_ds(z);
            if (std::abs(dv) == 0.0) return std::nullopt;
            cdouble step = v / dv;
            z -= step;
            if (!roam.contains(z)) return std::nullopt;
            if (std::abs(step) < thr * (1.0 + std::abs(z))) {
                auto [v2, dv2] = target.f_ds(z);
                if (std::abs(dv2) != 0.0) z -= v2 / dv2;
                return z;
            }
        }
    } catch (const pole_error&) {
        return std::nullopt;
    }
    return std::nullopt;
}

int square_winding(const AnalyticTarget& target, cdouble z, double rho) {
    Rectangle sq{z.real() - rho, z.real() + rho, z.imag() - rho,
                 z.imag() + rho};
    return winding_count(target, sq);
}

// Certify the multiplicity at z by winding around a small square that stays
// inside the working rectangle and away from declared poles. A count above 1
// is re-checked on a much smaller square so that a tight cluster of distinct
// zeros is not mistaken for one multiple zero; -1 signals such a cluster.
int multiplicity_at(const AnalyticTarget& target, cdouble z,
                    const Rectangle& r, double& rho_out) {
    double border =
        std::min(std::min(z.real() - r.sigma_min, r.sigma_max - z.real()),
                 std::min(z.imag() - r.t_min, r.t_max - z.imag()));
    double rho = std::min(0.01, 0.45 * border);
    for (cdouble p : target.poles) rho = std::min(rho, 0.5 * std::abs(z - p));
    if (rho < 1e-13) rho = 1e-13;
    rho_out = rho;
    int m = winding_count(target, {z.real() - rho, z.real() + rho,
                                   z.imag() - rho, z.imag() + rho});
    if (m > 1) {
        double rho2 = std::max(1e-12, rho * 1e-3);
        if (square_winding(target, z, rho2) != m) return -1;
    }
    return m;
}

std::vector<ZeroRecord> isolate_rec(const AnalyticTarget& target, Rectangle r,
                                    int n, double tol, int depth,
                                    int max_depth) {
    if (n == 0) return {};

    if (auto z = newton_refine(target, r, tol); z && r.contains(*z)) {
        try {
            double rho = 0.0;
            int m = multiplicity_at(target, *z, r, rho);
            if (m == n && m >= 1) {
                ZeroRecord rec;
                rec.location = *z;
                rec.multiplicity = m;
                rec.residual = std::abs(target.f(*z));
                rec.isolation_radius = rho;
                return {rec};
            }
        } catch (const boundary_error&) {
            // fall through to subdivision
        }
    }

    if (depth >= max_depth)
        throw convergence_error("isolate_zeros: could not isolate " +
                                std::to_string(n) + " zero(s) in " +
                                describe(r) + " within the depth limit");

    for (int attempt = 0; attempt < 5; ++attempt) {
        double jx = attempt * 1e-3 * r.width() * (attempt % 2 ? 1.0 : -1.0);
        double jy = attempt * 1e-3 * r.height() * (attempt % 2 ? 1.0 : -1.0);
        double cx = 0.5 * (r.sigma_min + r.sigma_max) + jx;
        double cy = 0.5 * (r.t_min + r.t_max) + jy;
        for (cdouble p : target.poles) {
            if (std::abs(p.real() - cx) < 1e-3) cx += 2.5e-3 * r.width();
            if (std::abs(p.imag() - cy) < 1e-3) cy += 2.5e-3 * r.height();
        }
        Rectangle quads[4] = {
            {r.sigma_min, cx, r.t_min, cy},
            {cx, r.sigma_max, r.t_min, cy},
            {r.sigma_min, cx, cy, r.t_max},
            {cx, r.sigma_max, cy, r.t_max},
        };
        try {
            int counts[4];
            int sum = 0;
            for (int q = 0; q < 4; ++q) {
                counts[q] = zero_count(target, quads[q]);
                sum += counts[q];
            }
            if (sum != n) continue; // a zero sits on a split line; re-jitter

            std::vector<ZeroRecord> out;
            if (depth < 2) {
                std::vector<std::future<std::vector<ZeroRecord>>> futs;
                for (int q = 0; q < 4; ++q) {
                    if (counts[q] == 0) continue;
                    Rectangle sub = quads[q];
                    int cnt = counts[q];
                    futs.push_back(std::async(std::launch::async, [&target, sub, cnt, tol, depth, max_depth] {
                        return isolate_rec(target, sub, cnt, tol, depth + 1, max_depth);
                    }));
                }
                for (auto& fu : futs) {
                    auto part = fu.get();
                    out.insert(out.end(), part.begin(), part.end());
                }
            } else {
                for (int q = 0; q < 4; ++q) {
                    if (counts[q] == 0) continue;
                    auto part = isolate_rec(target, quads[q], counts[q], tol,
                                            depth + 1, max_depth);
                    out.insert(out.end(), part.begin(), part.end());
                }
            }
            return out;
        } catch (const boundary_error&) {
            continue;
        }
    }
    throw convergence_error(
        "isolate_zeros: repeated boundary failures while subdividing " +
        describe(r));
}

} // namespace

AnalyticTarget make_target(const ZetaLikeFunction& f) {
    AnalyticTarget t;
    t.f = [f](cdouble s) { return f.eval(s); };
    t.f_ds = [f](cdouble s) { return f.eval_ds(s); };
    if (std::abs(f.pole_residue()) > 1e-12)
        t.poles.push_back(cdouble(1.0, 0.0));
    return t;
}

int winding_count(const AnalyticTarget& target, const Rectangle& rect) {
    if (!(rect.sigma_max > rect.sigma_min) || !(rect.t_max > rect.t_min))
        throw domain_error("winding: rectangle is degenerate");
    cdouble bl(rect.sigma_min, rect.t_min), br(rect.sigma_max, rect.t_min);
    cdouble tr(rect.sigma_max, rect.t_max), tl(rect.sigma_min, rect.t_max);
    double total = edge_variation(target, bl, br) +
                   edge_variation(target, br, tr) +
                   edge_variation(target, tr, tl) +
                   edge_variation(target, tl, bl);
    double w = total / kTwoPi;
    long n = std::lround(w);
    if (std::abs(w - static_cast<double>(n)) > 0.25)
        throw boundary_error(
            "winding: argument sum is not close to an integer multiple of 2*pi");
    return static_cast<int>(n);
}

int winding_count(const ZetaLikeFunction& f, const Rectangle& rect) {
    return winding_count(make_target(f), rect);
}

std::vector<ZeroRecord> isolate_zeros(const AnalyticTarget& target,
                                      const Rectangle& rect, double tol,
                                      int max_depth) {
    if (!(rect.sigma_max > rect.sigma_min) || !(rect.t_max > rect.t_min))
        throw domain_error("isolate_zeros: rectangle is degenerate");
    if (!(tol > 0.0))
        throw domain_error("isolate_zeros: tolerance must be positive");
    tol = std::max(tol, 1e-14);
    if (max_depth < 1)
        throw domain_error("isolate_zeros: max_depth must be at least 1");

    int n = zero_count(target, rect);
    std::vector<ZeroRecord> out =
        isolate_rec(target, rect, n, tol, 0, max_depth);

    int total = 0;
    for (const auto& rec : out) total += rec.multiplicity;
    if (total != n)
        throw convergence_error(
            "isolate_zeros: multiplicities of located zeros do not add up to "
            "the boundary count");
    std::sort(out.begin(), out.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        if (a.location.imag() != b.location.imag())
            return a.location.imag() < b.location.imag();
        return a.location.real() < b.location.real();
    });
    return out;
}

std::vector<ZeroRecord> isolate_zeros(const ZetaLikeFunction& f,
                                      const Rectangle& rect, double tol,
                                      int max_depth) {
    return isolate_zeros(make_target(f), rect, tol, max_depth);
}

RiemannSequenceCandidate zeros_to_sequence(const std::vector<ZeroRecord>& zeros) {
    RiemannSequenceCandidate seq;
    seq.source = "zero-scan";
    for (const ZeroRecord& rec : zeros) {
        double beta = rec.location.real();
        double gamma = rec.location.imag();
        if (gamma <= 0.0) continue;
        cdouble alpha(gamma, 0.5 - beta);
        for (int i = 0; i < rec.multiplicity; ++i) seq.terms.push_back(alpha);
    }
    // Zeros are refined independently, so two terms that are conjugates of
    // each other carry ulp-level noise in their real parts. Snap matched
    // partners to exact conjugates before sorting; otherwise the comparator
    // would order such a pair by that noise instead of by imaginary part.
    {
        std::vector<char> paired(seq.terms.size(), 0);
        for (size_t i = 0; i < seq.terms.size(); ++i) {
            if (paired[i] || seq.terms[i].imag() <= 1e-9) continue;
            cdouble want = std::conj(seq.terms[i]);
            size_t best = seq.terms.size();
            double best_d = 1e-8 * (1.0 + std::abs(seq.terms[i]));
            for (size_t j = 0; j < seq.terms.size(); ++j) {
                if (paired[j] || seq.terms[j].imag() >= -1e-9) continue;
                double d = std::abs(seq.terms[j] - want);
                if (d <= best_d) {
                    best_d = d;
                    best = j;
                }
            }
            if (best == seq.terms.size()) continue;
            cdouble mean = 0.5 * (seq.terms[i] + std::conj(seq.terms[best]));
            seq.terms[i] = mean;
            seq.terms[best] = std::conj(mean);
            paired[i] = paired[best] = 1;
        }
    }
    std::sort(seq.terms.begin(), seq.terms.end(),
              [](const cdouble& a, const cdouble& b) {
                  if (a.real() != b.real()) return a.real() < b.real();
                  double ia = std::abs(a.imag()), ib = std::abs(b.imag());
                  if (ia != ib) return ia < ib;
                  return a.imag() < b.imag();
              });
    cdouble witness;
    if (!conjugate_closed(seq.terms, 1e-8, &witness)) {
        std::ostringstream os;
        os << "zeros_to_sequence: term " << witness.real();
        os << (witness.imag() < 0 ? " - " : " + ")
           << std::abs(witness.imag()) << "i lacks a conjugate partner";
        throw construction_error(os.str());
    }
    return seq;
}

} // namespace czeta
