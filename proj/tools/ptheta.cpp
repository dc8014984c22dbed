// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
//
// ptheta -- certified evaluation, zero-free certification, zero atlas and
// constant-reproduction bench for the partial theta function.
//
// Exit codes: 0 success / certified, 1 certification or bench or audit
// failure, 2 usage error, 3 numeric failure.

#include <chrono>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ptheta/ptheta.hpp"

namespace {

using namespace ptheta;

struct GlobalOpts {
    long precision_bits = kDefaultPrecision;
    int threads = hardware_threads();
};

// "a+bi" / "a-bi" / "a" / "bi" / "i" -> decimal component strings
std::pair<std::string, std::string> split_complex(const std::string& s)
{
    std::string t = s;
    if (t.empty()) throw CLI::ValidationError("--x", "empty complex literal");
    if (t.back() == 'i') {
        t.pop_back();
        // find the split between real and imaginary parts
        for (size_t i = t.size(); i-- > 1;) {
            if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
                std::string re = t.substr(0, i);
                std::string im = t.substr(i);
                if (im == "+" || im == "-") im += "1";
                return {re, im};
            }
        }
        if (t.empty() || t == "+") return {"0", "1"};
        if (t == "-") return {"0", "-1"};
        return {"0", t};
    }
    return {t, "0"};
}

// "r:Tpi" -> (radius string, angle-in-pi-units string)
std::pair<std::string, std::string> split_polar(const std::string& s)
{
    auto colon = s.find(':');
    if (colon == std::string::npos || s.size() < colon + 3 ||
        s.substr(s.size() - 2) != "pi") {
        throw CLI::ValidationError("--x-polar", "expected r:ANGLEpi");
    }
    return {s.substr(0, colon), s.substr(colon + 1, s.size() - colon - 3)};
}

std::string fmt_plusminus(const RealInterval& v)
{
    BigFloat mid = v.midpoint();
    BigFloat rad;
    mpfr_sub(rad.raw(), v.hi().raw(), mid.raw(), MPFR_RNDU);
    BigFloat rad2;
    mpfr_sub(rad2.raw(), mid.raw(), v.lo().raw(), MPFR_RNDU);
    if (rad2 > rad) rad = rad2;
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "%.20Rg %s %.3Rg", mid.raw(), "±", rad.raw());
    return buf;
}

std::string fmt_bracket(const RealInterval& v)
{
    return "[" + v.lo_str25() + "," + v.hi_str25() + "]";
}

int run_eval(const GlobalOpts& g, const std::string& q_str,
             const std::optional<std::string>& x_str,
             const std::optional<std::string>& x_polar, double target, long terms,
             bool abs_only, bool json, const std::string& out_path)
{
    PrecisionGuard prec(static_cast<mpfr_prec_t>(g.precision_bits));
    RealInterval q = RealInterval::from_decimal(q_str);
    ComplexRect x;
    if (x_polar) {
        auto [r, a] = split_polar(*x_polar);
        x = ComplexRect::from_polar_pi(RealInterval::from_decimal(r),
                                       RealInterval::from_decimal(a));
    } else if (x_str) {
        auto [re, im] = split_complex(*x_str);
        x = ComplexRect(RealInterval::from_decimal(re), RealInterval::from_decimal(im));
    } else {
        throw CLI::ValidationError("eval", "need --x or --x-polar");
    }
    EvalResult r = theta(q, x, SeriesTarget{target, terms, 1000000});

    std::ostringstream os;
    if (json) {
        os << "{\"re\":" << fmt_bracket(r.enclosure.re())
           << ",\"im\":" << fmt_bracket(r.enclosure.im())
           << ",\"abs\":" << fmt_bracket(r.enclosure.abs_bounds())
           << ",\"terms\":" << r.terms_used << ",\"tail\":\"" << r.tail_bound.hi_str25()
           << "\"}\n";
    } else if (abs_only) {
        os << fmt_plusminus(r.enclosure.abs_bounds()) << "\n";
        os << "terms " << r.terms_used << ", tail <= " << r.tail_bound.hi().str(6) << "\n";
    } else {
        if (r.enclosure.im().lo().is_zero() && r.enclosure.im().hi().is_zero()) {
            os << fmt_plusminus(r.enclosure.re()) << "\n";
        } else {
            os << "(" << fmt_plusminus(r.enclosure.re()) << ") + ("
               << fmt_plusminus(r.enclosure.im()) << ")i\n";
        }
        os << "terms " << r.terms_used << ", tail <= " << r.tail_bound.hi().str(6) << "\n";
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << os.str();
    }
    return 0;
}

std::pair<double, double> parse_range(const std::string& s, const char* what)
{
    auto colon = s.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError(what, "expected lo:hi");
    return {std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
}

int run_certify(const GlobalOpts& g, const std::string& region, const std::string& q_range,
                const std::string& out_path, int depth, int grid_splits, long max_cells,
                bool positive)
{
    auto [qlo, qhi] = parse_range(q_range, "--q");
    if (!(0.0 < qlo && qlo < qhi && qhi < 1.0)) {
        throw CLI::ValidationError("--q", "need 0 < lo < hi < 1");
    }
    CertConfig cfg;
    cfg.precision_bits = static_cast<mpfr_prec_t>(g.precision_bits);
    cfg.depth_cap = depth;
    cfg.initial_splits = grid_splits;
    cfg.max_cells = max_cells;
    cfg.threads = g.threads;

    auto t0 = std::chrono::steady_clock::now();
    Certificate cert;
    if (positive) {
        BoundaryPath path = BoundaryPath::from_region(region);
        if (path.pieces.size() != 1 || !path.pieces[0].real_segment) {
            throw CLI::ValidationError("--positive", "only real segments support theta > 0");
        }
        double a = path.pieces[0].p0.re().mid_d();
        double b = path.pieces[0].p1.re().mid_d();
        cert = certify_positive_on_segment(a, b, RealInterval(qlo, qhi), cfg);
    } else {
        cert = certify_no_zeros(BoundaryPath::from_region(region), RealInterval(qlo, qhi), cfg);
    }
    auto t1 = std::chrono::steady_clock::now();

    if (out_path.empty()) {
        std::cout << cert.to_json() << "\n";
    } else if (!cert.write_file(out_path)) {
        std::cerr << "cannot write " << out_path << "\n";
        return 3;
    }
    std::cerr << "region " << cert.region << ": "
              << (cert.certified ? "certified" : "FAILED") << ", " << cert.cells.size()
              << " cells, " << cert.failures.size() << " failures, "
              << std::chrono::duration<double>(t1 - t0).count() << " s\n";
    return cert.certified ? 0 : 1;
}

int run_zeros(const GlobalOpts& g, double q, const std::string& box_str, long trunc_n,
              bool list, bool rigorous, bool json)
{
    (void)g;
    std::ostringstream os;
    if (trunc_n >= 0) {
        TruncZeros tz = trunc_zeros(q, trunc_n);
        if (json) {
            os << "{\"degenerate\":" << (tz.degenerate ? "true" : "false") << ",\"roots\":[";
            for (size_t i = 0; i < tz.roots.size(); i++) {
                if (i) os << ",";
                os << "[" << tz.roots[i].re.str(17) << "," << tz.roots[i].im.str(17) << "]";
            }
            os << "]}\n";
        } else {
            if (tz.degenerate) os << "degenerate: truncation is the constant 1\n";
            for (const auto& r : tz.roots) {
                os << r.re.str(17) << " " << r.im.str(17) << "\n";
            }
        }
        std::cout << os.str();
        return 0;
    }

    std::vector<double> parts;
    {
        std::string rest = box_str;
        for (int i = 0; i < 3; i++) {
            auto c = rest.find(':');
            if (c == std::string::npos) throw CLI::ValidationError("--box", "expected a:b:c:d");
            parts.push_back(std::stod(rest.substr(0, c)));
            rest = rest.substr(c + 1);
        }
        parts.push_back(std::stod(rest));
    }
    Box box{parts[0], parts[1], parts[2], parts[3]};
    int n = count_zeros(q, box);

    std::vector<ZeroFix> located;
    if (list && n > 0) {
        double r = std::max({std::fabs(box.re_lo), std::fabs(box.re_hi),
                             std::fabs(box.im_lo), std::fabs(box.im_hi)});
        long N = 10;
        while (N < 400) {
            double logterm = 0.5 * static_cast<double>(N) * static_cast<double>(N + 1) *
                                 std::log(std::fabs(q)) +
                             static_cast<double>(N) * std::log(r + 1.0);
            if (logterm < std::log(1e-30)) break;
            N += 10;
        }
        TruncZeros tz = trunc_zeros(q, N);
        for (const auto& root : tz.roots) {
            std::complex<double> seed = root.to_complex();
            if (!(seed.real() > box.re_lo && seed.real() < box.re_hi &&
                  seed.imag() > box.im_lo && seed.imag() < box.im_hi)) {
                continue;
            }
            try {
                ZeroFix zf = find_zero(q, seed);
                bool dup = false;
                for (const auto& other : located) {
                    if (std::abs(other.z - zf.z) < 1e-8 * (1.0 + std::abs(zf.z))) dup = true;
                }
                if (!dup) located.push_back(zf);
            } catch (const NoConvergence&) {
            }
        }
        if (rigorous) {
            for (const auto& zf : located) {
                double eps = 1e-4 * (1.0 + std::abs(zf.z));
                Box tiny{zf.z.real() - eps, zf.z.real() + eps, zf.z.imag() - eps,
                         zf.z.imag() + eps};
                if (count_zeros(q, tiny) < 1) {
                    std::cerr << "rigorous recheck failed near " << zf.z.real() << "+"
                              << zf.z.imag() << "i\n";
                    return 3;
                }
            }
        }
    }

    if (json) {
        os << "{\"count\":" << n << ",\"zeros\":[";
        for (size_t i = 0; i < located.size(); i++) {
            if (i) os << ",";
            char buf[160];
            std::snprintf(buf, sizeof buf, "{\"re\":%.17g,\"im\":%.17g,\"residual\":%.17g}",
                          located[i].z.real(), located[i].z.imag(), located[i].residual);
            os << buf;
        }
        os << "]}\n";
    } else {
        os << "count " << n << "\n";
        for (const auto& zf : located) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "zero %.17g %.17g residual %.3g\n", zf.z.real(),
                          zf.z.imag(), zf.residual);
            os << buf;
        }
    }
    std::cout << os.str();
    return 0;
}

int run_trace(const GlobalOpts& g, double q_from, double q_to, const std::string& seed_str,
              double dq_init, const std::string& out_path)
{
    (void)g;
    auto [re, im] = split_complex(seed_str);
    std::complex<double> seed(std::stod(re), std::stod(im));
    StepConfig cfg;
    if (dq_init > 0) cfg.dq_init = dq_init;
    ZeroTrajectory traj = trace_branch(q_from, q_to, seed, cfg);
    if (traj.step_underflow) {
        std::cerr << "step underflow at q = " << traj.samples.back().q
                  << " (branch collision)\n";
    }
    if (out_path.empty()) {
        std::cout << traj.to_csv();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << traj.to_csv();
    }
    return 0;
}

int run_spectral(const GlobalOpts& g, int count, double q_from, double q_to,
                 const std::string& out_path)
{
    (void)g;
    std::vector<SpectralValue> sv = spectral_scan(count, q_from, q_to);
    std::ostringstream os;
    for (const auto& s : sv) os << s.to_json() << "\n";
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << os.str();
    }
    if (static_cast<int>(sv.size()) < count) {
        std::cerr << "found only " << sv.size() << " of " << count << " spectral values\n";
        return 3;
    }
    return 0;
}

int run_bench(const GlobalOpts& g, const std::string& out_path)
{
    auto items = bench_run_all(static_cast<mpfr_prec_t>(g.precision_bits), g.threads);
    std::string tsv = bench_to_tsv(items);
    if (out_path.empty()) {
        std::cout << tsv;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << tsv;
    }
    long failed = 0;
    for (const auto& it : items) failed += it.pass ? 0 : 1;
    std::cerr << items.size() << " items, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"certified partial theta function toolkit"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--precision-bits", g.precision_bits, "working precision (mantissa bits)")
        ->envname("THETA_PRECISION_BITS")
        ->check(CLI::Range(64L, 100000L));
    app.add_option("--threads", g.threads, "worker threads");

    // eval
    auto* eval = app.add_subcommand("eval", "certified enclosure of theta(q, x)");
    std::string q_str, out_path;
    std::optional<std::string> x_str, x_polar;
    double target = 1e-12;
    long terms = -1;
    bool abs_only = false, json = false;
    eval->add_option("--q", q_str, "q as a decimal (converted outward)")->required();
    eval->add_option("--x", x_str, "x as a+bi");
    eval->add_option("--x-polar", x_polar, "x as r:Tpi (angle T in units of pi)");
    eval->add_option("--target", target, "absolute tail target");
    eval->add_option("--terms", terms, "fixed truncation index");
    eval->add_flag("--abs", abs_only, "print |theta| bounds");
    eval->add_flag("--json", json, "machine-readable output");
    eval->add_option("--out", out_path, "write output to file");

    // certify
    auto* certify = app.add_subcommand("certify", "certify zero-freeness over a q-range");
    std::string region = "D", q_range = "0.02:0.98", cert_out;
    int depth = 40, grid_splits = 3;
    long max_cells = 300000;
    bool positive = false;
    certify->add_option("--region", region, "D | Delta | segment:a:b")->required();
    certify->add_option("--q", q_range, "q range lo:hi");
    certify->add_option("--out", cert_out, "certificate file (stdout otherwise)");
    certify->add_option("--depth", depth, "bisection depth cap per dimension");
    certify->add_option("--grid", grid_splits, "initial grid = 2^n x 2^n per piece");
    certify->add_option("--max-cells", max_cells, "processed-cell budget");
    certify->add_flag("--positive", positive, "certify theta > 0 (real segments)");

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "re-validate a certificate file");
    std::string audit_path;
    audit_cmd->add_option("file", audit_path, "certificate JSON")->required();

    // zeros
    auto* zeros = app.add_subcommand("zeros", "count/list zeros in a box");
    double zq = 0.5;
    std::string box_str;
    long trunc_n = -1;
    bool list = false, rigorous = false, zjson = false;
    zeros->add_option("--q", zq, "parameter q")->required();
    zeros->add_option("--box", box_str, "relo:rehi:imlo:imhi");
    zeros->add_option("--trunc", trunc_n, "print all roots of the degree-N truncation");
    zeros->add_flag("--list", list, "locate zeros inside the box");
    zeros->add_flag("--rigorous", rigorous, "re-verify located zeros by counting");
    zeros->add_flag("--json", zjson, "machine-readable output");

    // trace
    auto* trace = app.add_subcommand("trace", "continue a zero branch in q");
    double q_from = 0.0, q_to = 0.0, dq_init = -1.0;
    std::string seed_str, trace_out;
    trace->add_option("--q-from", q_from)->required();
    trace->add_option("--q-to", q_to)->required();
    trace->add_option("--seed", seed_str, "starting zero estimate a+bi")->required();
    trace->add_option("--step", dq_init, "initial q step");
    trace->add_option("--out", trace_out, "CSV output file (stdout otherwise)");

    // spectral
    auto* spectral = app.add_subcommand("spectral", "locate spectral values");
    int count = 6;
    double sq_from = 0.26, sq_to = 0.92;
    std::string spec_out;
    spectral->add_option("--count", count, "how many to locate");
    spectral->add_option("--q-from", sq_from);
    spectral->add_option("--q-to", sq_to);
    spectral->add_option("--out", spec_out, "JSON-lines output file (stdout otherwise)");

    // bench
    auto* bench = app.add_subcommand("bench", "reproduce the published constants");
    std::string bench_out;
    bench->add_option("--out", bench_out, "TSV output file (stdout otherwise)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) return run_eval(g, q_str, x_str, x_polar, target, terms, abs_only, json,
                                   out_path);
        if (*certify) return run_certify(g, region, q_range, cert_out, depth, grid_splits,
                                         max_cells, positive);
        if (*audit_cmd) {
            bool ok = audit_file(audit_path);
            std::cerr << "audit: " << (ok ? "ok" : "FAILED") << "\n";
            return ok ? 0 : 1;
        }
        if (*zeros) return run_zeros(g, zq, box_str, trunc_n, list, rigorous, zjson);
        if (*trace) return run_trace(g, q_from, q_to, seed_str, dq_init, trace_out);
        if (*spectral) return run_spectral(g, count, sq_from, sq_to, spec_out);
        if (*bench) return run_bench(g, bench_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
