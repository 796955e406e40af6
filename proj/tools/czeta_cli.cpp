// czeta: command-line surface for the zeta-like function toolkit.
//
// Subcommands construct self-dual measures, build and evaluate zeta-like
// functions, locate zeros by the argument principle, render x-ray plots,
// and certify candidate sequences built from zero lists.
//
// Exit codes: 0 success, 1 verdict/numerical failure, 2 usage or parse error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "czeta/crystal.hpp"
#include "czeta/dd.hpp"
#include "czeta/errors.hpp"
#include "czeta/expansion.hpp"
#include "czeta/hurwitz.hpp"
#include "czeta/io.hpp"
#include "czeta/sequence.hpp"
#include "czeta/xray.hpp"
#include "czeta/zerofind.hpp"
#include "czeta/zeta_zeros.hpp"
#include "czeta/zetafun.hpp"

namespace {

using czeta::cdouble;

std::string fmt17(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

// "RE,IM" or a bare real.
cdouble parse_complex(const std::string& text) {
    try {
        size_t comma = text.find(',');
        size_t used = 0;
        if (comma == std::string::npos) {
            double re = std::stod(text, &used);
            if (used != text.size()) throw czeta::parse_error("");
            return {re, 0.0};
        }
        double re = std::stod(text.substr(0, comma), &used);
        if (used != comma) throw czeta::parse_error("");
        std::string imtext = text.substr(comma + 1);
        double im = std::stod(imtext, &used);
        if (used != imtext.size()) throw czeta::parse_error("");
        return {re, im};
    } catch (const std::exception&) {
        throw czeta::parse_error("expected a complex number as RE,IM: '" + text + "'");
    }
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(text);
    try {
        while (std::getline(in, item, ',')) {
            size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw czeta::parse_error("");
        }
    } catch (const std::exception&) {
        throw czeta::parse_error(std::string("expected comma-separated reals for ") +
                                 what + ": '" + text + "'");
    }
    if (out.empty())
        throw czeta::parse_error(std::string("empty list for ") + what);
    return out;
}

czeta::Rectangle parse_rect(const std::string& text) {
    std::vector<double> v = parse_double_list(text, "--rect");
    if (v.size() != 4)
        throw czeta::parse_error("--rect needs four values sigma_min,sigma_max,t_min,t_max: '" +
                                 text + "'");
    czeta::Rectangle r{v[0], v[1], v[2], v[3]};
    if (!(r.sigma_min < r.sigma_max) || !(r.t_min < r.t_max))
        throw czeta::parse_error("--rect is degenerate: '" + text + "'");
    return r;
}

void parse_resolution(const std::string& text, int& nx, int& ny) {
    size_t sep = text.find_first_of("x,");
    try {
        size_t used = 0;
        if (sep == std::string::npos) {
            nx = ny = std::stoi(text, &used);
            if (used != text.size()) throw czeta::parse_error("");
        } else {
            nx = std::stoi(text.substr(0, sep), &used);
            if (used != sep) throw czeta::parse_error("");
            std::string rest = text.substr(sep + 1);
            ny = std::stoi(rest, &used);
            if (used != rest.size()) throw czeta::parse_error("");
        }
    } catch (const std::exception&) {
        throw czeta::parse_error("expected --resolution as NX x NY (e.g. 512x1024): '" +
                                 text + "'");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw czeta::parse_error("cannot open output file: " + out_path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw czeta::parse_error("failed to write output file: " + out_path);
}

// Shared function-selection flags: --function zeta|zeta-m, or --measure FILE
// (optionally with --delta to perturb zeta by the measure's Dirichlet series).
struct FunctionChoice {
    std::string name = "zeta-m";
    std::string measure_path;
    double delta = 0.0;
    CLI::Option* delta_opt = nullptr;
};

void add_function_flags(CLI::App* cmd, FunctionChoice& fc) {
    cmd->add_option("--function", fc.name, "built-in target: zeta | zeta-m")
        ->check(CLI::IsMember({"zeta", "zeta-m"}))
        ->default_str("zeta-m");
    CLI::Option* mopt = cmd->add_option(
        "--measure", fc.measure_path,
        "measure document (JSON); target its Dirichlet series g_N instead");
    fc.delta_opt = cmd->add_option("--delta", fc.delta,
                                   "with --measure: target zeta + delta * g_N")
                       ->needs(mopt);
}

czeta::ZetaLikeFunction make_function(const FunctionChoice& fc) {
    if (!fc.measure_path.empty()) {
        czeta::CrystallineMeasure m =
            czeta::from_document(czeta::load_measure(fc.measure_path));
        if (fc.delta_opt != nullptr && fc.delta_opt->count() > 0)
            return czeta::perturbed_zeta(m, fc.delta);
        return czeta::zeta_like_from_measure(m);
    }
    if (fc.name == "zeta") return czeta::riemann_zeta_function();
    return czeta::build_zeta_m();
}

bool extended_precision(const std::string& precision) { return precision == "extended"; }

void note_double_only(const std::string& precision, const char* cmd) {
    if (extended_precision(precision))
        std::fprintf(stderr,
                     "note: %s runs in double precision; --precision extended "
                     "applies to 'sigma0' and real-axis 'eval'\n",
                     cmd);
}

// Extended-precision evaluation (real axis, right of the reflection cut).
czeta::dd eval_extended_real(const czeta::ZetaLikeFunction& f, double s) {
    if (!(s > -0.5))
        throw czeta::domain_error("extended eval supports real s > -1/2 only");
    if (s == 1.0) throw czeta::pole_error("eval: pole at s = 1");
    czeta::dd sd(s);
    auto comb_dd = [&sd](const czeta::HurwitzCombination& c) {
        czeta::dd acc(0.0);
        for (size_t i = 0; i < c.terms.size(); ++i) {
            const czeta::HTerm& t = c.terms[i];
            czeta::dd w = c.exact_weights.empty() ? czeta::dd(t.weight)
                                                  : c.exact_weights[i].value_dd();
            acc += w * czeta::dd_pow(czeta::to_dd(t.base), -sd) *
                   czeta::hurwitz_zeta_dd(sd, czeta::to_dd(t.shift));
        }
        return acc;
    };
    switch (f.variant) {
    case czeta::ZetaVariant::riemann:
        return czeta::hurwitz_zeta_dd(sd, czeta::dd(1.0));
    case czeta::ZetaVariant::combination:
        return comb_dd(f.comb);
    case czeta::ZetaVariant::perturbed:
        return czeta::hurwitz_zeta_dd(sd, czeta::dd(1.0)) +
               czeta::dd(f.delta) * comb_dd(f.comb);
    }
    throw czeta::domain_error("eval: unknown function variant");
}

double slope_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return num / den;
}

int cmd_construct(int n, int t, const std::string& out) {
    czeta::CyclicFunction f = czeta::construct_selfdual(n, t);
    czeta::CrystallineMeasure m = czeta::measure_from_function(f, n);
    emit(czeta::serialize_measure(czeta::to_document(m)), out);
    return 0;
}

int cmd_zeta_m(const std::string& out) {
    czeta::ZetaLikeFunction f = czeta::build_zeta_m();
    const czeta::HurwitzCombination& c = f.comb;
    std::ostringstream os;
    os << "# Hurwitz combination \"" << f.label
       << "\": F(s) = sum_j w_j b_j^-s zeta(s, a_j)\n";
    os << "# columns: p q b a, meaning weight w = p + q*sqrt(3) (exact), base b, shift a\n";
    czeta::QuadExt residue, constant;
    for (size_t i = 0; i < c.terms.size(); ++i) {
        const czeta::HTerm& t = c.terms[i];
        const czeta::QuadExt& w = c.exact_weights[i];
        os << w.p << ' ' << w.q << ' ' << t.base << ' ' << t.shift << '\n';
        residue = residue + w / czeta::QuadExt(czeta::Rational(t.base));
        if (t.base * t.shift == 1) constant = constant + w;
    }
    os << "# constant Dirichlet term: " << constant.p << " + " << constant.q
       << "*sqrt(3) = " << fmt17(constant.value()) << '\n';
    os << "# residue at s = 1: " << residue.p << " + " << residue.q
       << "*sqrt(3) = " << fmt17(residue.value()) << '\n';
    emit(os.str(), out);
    return 0;
}

int cmd_eval(const FunctionChoice& fc, const std::string& s_text,
             const std::string& precision) {
    czeta::ZetaLikeFunction f = make_function(fc);
    cdouble s = parse_complex(s_text);
    if (extended_precision(precision)) {
        if (s.imag() != 0.0)
            throw czeta::domain_error(
                "extended eval supports the real axis only; drop --precision "
                "extended for complex s");
        czeta::dd v = eval_extended_real(f, s.real());
        std::printf("%s 0\n", czeta::dd_to_string(v, 30).c_str());
        return 0;
    }
    cdouble v = f.eval(s);
    std::printf("%s %s\n", fmt17(v.real()).c_str(), fmt17(v.imag()).c_str());
    return 0;
}

int cmd_sigma0(const FunctionChoice& fc, double tol, const std::string& precision) {
    czeta::ZetaLikeFunction f = make_function(fc);
    if (extended_precision(precision)) {
        czeta::dd v = czeta::sigma0_dd(f, tol > 0.0 ? tol : 1e-18);
        std::printf("%s\n", czeta::dd_to_string(v, 30).c_str());
    } else {
        std::printf("%s\n", fmt17(czeta::sigma0(f, tol > 0.0 ? tol : 1e-12)).c_str());
    }
    return 0;
}

int cmd_zeros(const FunctionChoice& fc, const std::string& rect_text, double tol,
              int max_depth, const std::string& out, const std::string& precision) {
    note_double_only(precision, "zeros");
    czeta::ZetaLikeFunction f = make_function(fc);
    czeta::Rectangle rect = parse_rect(rect_text);
    std::vector<czeta::ZeroRecord> zeros = czeta::isolate_zeros(f, rect, tol, max_depth);
    long with_mult = 0;
    for (const czeta::ZeroRecord& z : zeros) with_mult += z.multiplicity;
    std::ostringstream head;
    head << "# " << f.label << " on [" << fmt17(rect.sigma_min) << ", "
         << fmt17(rect.sigma_max) << "] x [" << fmt17(rect.t_min) << ", "
         << fmt17(rect.t_max) << "]: " << with_mult
         << " zeros (counted with multiplicity)\n";
    if (std::abs(f.pole_residue()) > 1e-12 && rect.contains(cdouble(1.0, 0.0)))
        head << "# pole at s = 1 (residue " << fmt17(f.pole_residue())
             << ") lies inside; poles are not listed below\n";
    emit(head.str() + czeta::serialize_zeros(zeros), out);
    return 0;
}

int cmd_xray(const FunctionChoice& fc, const std::string& rect_text,
             const std::string& res_text, const std::string& out,
             const std::string& precision) {
    note_double_only(precision, "xray");
    czeta::ZetaLikeFunction f = make_function(fc);
    czeta::Rectangle rect = parse_rect(rect_text);
    int nx = 0, ny = 0;
    parse_resolution(res_text, nx, ny);
    emit(czeta::xray_svg(f, rect, nx, ny), out);
    return 0;
}

int cmd_certify(const FunctionChoice& fc, const std::string& zeros_path, double c_in,
                bool c_given, const std::string& precision) {
    note_double_only(precision, "certify");
    std::vector<czeta::ZeroRecord> records = czeta::load_zeros(zeros_path);
    std::ostringstream os;
    os << "certification report\n";
    os << "  input: " << records.size() << " zero records from " << zeros_path << "\n";

    double C = c_in;
    if (!c_given) {
        czeta::ZetaLikeFunction f = make_function(fc);
        C = czeta::sigma0(f, 1e-12) - 0.5;
        os << "  C = " << fmt17(C) << "  (default: sigma0(" << f.label << ") - 1/2)\n";
    } else {
        os << "  C = " << fmt17(C) << "\n";
    }

    czeta::RiemannSequenceCandidate seq;
    try {
        seq = czeta::zeros_to_sequence(records);
    } catch (const czeta::construction_error& e) {
        os << "  (b) conjugate multiplicities              FAIL  " << e.what() << "\n";
        os << "verdict: FAIL\n";
        std::fputs(os.str().c_str(), stdout);
        return 1;
    }
    os << "  terms: " << seq.terms.size() << " (alpha = gamma + i(1/2 - beta))\n";

    czeta::StructureReport rep = czeta::check_structure(seq, C);
    auto line = [&os](const char* label, bool ok, const std::string& witness) {
        os << "  " << label << (ok ? "PASS" : "FAIL");
        if (!witness.empty()) os << "  " << witness;
        os << "\n";
    };
    line("(a) ordering (Re a_1 > 1, nondecreasing)  ", rep.ordering,
         "Re alpha_1 = " + fmt17(rep.re_alpha1));
    line("(b) conjugate multiplicities              ", rep.conjugate,
         rep.conjugate ? ""
                       : "unmatched " + fmt17(rep.unmatched.real()) + " + " +
                             fmt17(rep.unmatched.imag()) + "i");
    line("(c) imaginary parts bounded (|Im| < C)    ", rep.im_bounded,
         "max |Im alpha| = " + fmt17(rep.max_im));
    line("(d) sector (|Im alpha| < Re alpha)        ", rep.sector,
         "max |Im|/Re = " + fmt17(rep.max_ratio));
    os << "  complex terms present: " << (rep.is_complex ? "yes" : "no") << "\n";
    os << "verdict: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    std::fputs(os.str().c_str(), stdout);
    return rep.passed() ? 0 : 1;
}

int cmd_verify_asymptotics(const std::string& grid_text, int terms,
                           const std::string& precision) {
    note_double_only(precision, "verify-asymptotics");
    std::vector<double> grid = parse_double_list(grid_text, "--x-grid");
    if (grid.size() < 2)
        throw czeta::parse_error("--x-grid needs at least two points for a slope fit");
    if (terms < 0) throw czeta::parse_error("--terms must be >= 0");

    std::printf("# law check: r_N(x) = |oracle(x) - main_expansion(x, N)| * x^(N+1)\n");
    std::printf("# bounded verdict: |log-log slope| <= 0.3 on the grid\n");
    bool all_ok = true;
    for (int N = 0; N <= terms; ++N) {
        std::vector<double> lx, lr;
        std::printf("N=%d:", N);
        for (double x : grid) {
            double r = std::abs(czeta::zeta_zero_sum_oracle(x) -
                                czeta::expansion_main(cdouble(x, 0.0), N).real()) *
                       std::pow(x, N + 1);
            std::printf("  r(%s) = %.3e", fmt17(x).c_str(), r);
            lx.push_back(std::log(x));
            lr.push_back(std::log(std::max(r, 1e-300)));
        }
        double slope = slope_fit(lx, lr);
        bool ok = std::abs(slope) <= 0.3;
        all_ok = all_ok && ok;
        std::printf("  slope = %+.3f  %s\n", slope, ok ? "PASS" : "FAIL");
    }
    std::printf("verdict: %s\n", all_ok ? "PASS" : "FAIL");
    return all_ok ? 0 : 1;
}

int cmd_theta(const std::string& ordinates_path, double x, double tol,
              const std::string& precision) {
    note_double_only(precision, "theta");
    czeta::RiemannSequenceCandidate seq = czeta::load_ordinates(ordinates_path);
    czeta::ThetaSum t = czeta::theta_sum(seq, x, tol);
    std::printf("theta(%s) = %s  (truncation bound %.3e, %zu terms)\n",
                fmt17(x).c_str(), fmt17(t.value.real()).c_str(), t.tail_bound,
                seq.terms.size());
    return 0;
}

int cmd_gen_ordinates(int count, const std::string& out, const std::string& precision) {
    note_double_only(precision, "gen-ordinates");
    emit(czeta::serialize_ordinates(czeta::generate_ordinates(count)), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "czeta: crystalline measures, zeta-like Dirichlet series, zero scans,\n"
        "x-ray plots, and certification of candidate zero sequences"};
    app.require_subcommand(1);

    std::string precision = "double";
    app.add_option("--precision", precision,
                   "arithmetic for sigma0 and real-axis eval: double | extended")
        ->check(CLI::IsMember({"double", "extended"}));

    // construct
    auto* c_construct = app.add_subcommand(
        "construct", "build a self-dual measure and emit its document (JSON)");
    c_construct->fallthrough();
    int construct_n = 0, construct_t = 0;
    std::string construct_out;
    c_construct->add_option("--n", construct_n, "modulus parameter N (support on (1/N)Z)")
        ->required();
    c_construct->add_option("--t", construct_t, "window half-width T (c_r = 0 for |r| <= NT)")
        ->required();
    c_construct->add_option("--out", construct_out, "output path (default stdout)");

    // zeta-m
    auto* c_zeta_m = app.add_subcommand(
        "zeta-m", "emit the thirteen-term Hurwitz combination with exact weights");
    c_zeta_m->fallthrough();
    std::string zeta_m_out;
    c_zeta_m->add_option("--out", zeta_m_out, "output path (default stdout)");

    // eval
    auto* c_eval = app.add_subcommand("eval", "evaluate the target function at s");
    c_eval->fallthrough();
    FunctionChoice eval_fc;
    std::string eval_s;
    c_eval->add_option("--s", eval_s, "evaluation point RE,IM (or a bare real)")
        ->required();
    add_function_flags(c_eval, eval_fc);

    // sigma0
    auto* c_sigma0 = app.add_subcommand(
        "sigma0", "zero-free abscissa from the absolute-coefficient majorant");
    c_sigma0->fallthrough();
    FunctionChoice sigma0_fc;
    double sigma0_tol = 0.0;
    c_sigma0->add_option("--tol", sigma0_tol,
                         "bisection tolerance (default 1e-12 double, 1e-18 extended)");
    add_function_flags(c_sigma0, sigma0_fc);

    // zeros
    auto* c_zeros = app.add_subcommand(
        "zeros", "isolate all zeros in a rectangle and emit a zero document");
    c_zeros->fallthrough();
    FunctionChoice zeros_fc;
    std::string zeros_rect, zeros_out;
    double zeros_tol = 1e-10;
    int zeros_depth = 32;
    c_zeros->add_option("--rect", zeros_rect, "sigma_min,sigma_max,t_min,t_max")->required();
    c_zeros->add_option("--tol", zeros_tol, "zero location tolerance (default 1e-10)");
    c_zeros->add_option("--max-depth", zeros_depth,
                        "maximum subdivision depth (default 32)");
    c_zeros->add_option("--out", zeros_out, "output path (default stdout)");
    add_function_flags(c_zeros, zeros_fc);

    // xray
    auto* c_xray = app.add_subcommand(
        "xray", "render the x-ray (Im f = 0 thick, Re f = 0 thin) as SVG");
    c_xray->fallthrough();
    FunctionChoice xray_fc;
    std::string xray_rect, xray_res = "512x512", xray_out;
    c_xray->add_option("--rect", xray_rect, "sigma_min,sigma_max,t_min,t_max")->required();
    c_xray->add_option("--resolution", xray_res, "grid resolution NXxNY (default 512x512)");
    c_xray->add_option("--out", xray_out, "output SVG path")->required();
    add_function_flags(c_xray, xray_fc);

    // certify
    auto* c_certify = app.add_subcommand(
        "certify", "check the structure conditions on a zero document");
    c_certify->fallthrough();
    FunctionChoice certify_fc;
    std::string certify_zeros;
    double certify_c = 0.0;
    c_certify->add_option("--zeros", certify_zeros, "zero document to certify")->required();
    CLI::Option* certify_c_opt = c_certify->add_option(
        "--c", certify_c, "bound C for condition (c) (default sigma0 - 1/2)");
    add_function_flags(c_certify, certify_fc);

    // verify-asymptotics
    auto* c_verify = app.add_subcommand(
        "verify-asymptotics",
        "scaled-residual boundedness of the zero-sum expansion against the oracle");
    c_verify->fallthrough();
    std::string verify_grid = "10,20,40,80";
    int verify_terms = 4;
    c_verify->add_option("--x-grid", verify_grid,
                         "comma-separated evaluation points (default 10,20,40,80)");
    c_verify->add_option("--terms", verify_terms,
                         "check truncation orders N = 0..terms (default 4)");

    // theta
    auto* c_theta = app.add_subcommand(
        "theta", "heat sum sum_n exp(-a_n^2 x) over an ingested ordinate list");
    c_theta->fallthrough();
    std::string theta_ordinates;
    double theta_x = 0.0, theta_tol = 1e-12;
    c_theta->add_option("--x", theta_x, "argument x > 0")->required();
    c_theta->add_option("--ordinates", theta_ordinates, "ordinate list file")->required();
    c_theta->add_option("--tol", theta_tol,
                        "maximum acceptable truncation bound (default 1e-12)");

    // gen-ordinates
    auto* c_gen = app.add_subcommand(
        "gen-ordinates", "generate the first N zeta-zero ordinates (ascending)");
    c_gen->fallthrough();
    int gen_count = 0;
    std::string gen_out;
    c_gen->add_option("--count", gen_count, "how many ordinates")->required();
    c_gen->add_option("--out", gen_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_construct->parsed())
            return cmd_construct(construct_n, construct_t, construct_out);
        if (c_zeta_m->parsed()) return cmd_zeta_m(zeta_m_out);
        if (c_eval->parsed()) return cmd_eval(eval_fc, eval_s, precision);
        if (c_sigma0->parsed()) return cmd_sigma0(sigma0_fc, sigma0_tol, precision);
        if (c_zeros->parsed())
            return cmd_zeros(zeros_fc, zeros_rect, zeros_tol, zeros_depth, zeros_out,
                             precision);
        if (c_xray->parsed())
            return cmd_xray(xray_fc, xray_rect, xray_res, xray_out, precision);
        if (c_certify->parsed())
            return cmd_certify(certify_fc, certify_zeros, certify_c,
                               certify_c_opt->count() > 0, precision);
        if (c_verify->parsed())
            return cmd_verify_asymptotics(verify_grid, verify_terms, precision);
        if (c_theta->parsed())
            return cmd_theta(theta_ordinates, theta_x, theta_tol, precision);
        if (c_gen->parsed()) return cmd_gen_ordinates(gen_count, gen_out, precision);
        std::fprintf(stderr, "error: no subcommand selected\n");
        return 2;
    } catch (const czeta::parse_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const czeta::domain_error& e) { // includes pole_error
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
