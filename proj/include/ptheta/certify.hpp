// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
//
// Adaptive-subdivision certification that theta(q, x) is nonzero (or, on real
// segments, positive) uniformly over a q-range and a boundary path. Two sound
// lower-bound methods per cell:
//
//   DIRECT: abs_lo of the certified theta enclosure,
//   SPLIT : abs_lo(G) - abs_hi(Theta*), via theta = Theta* - G, for |x| > 1.
//
// A Certified result is a gap-free tiling of (q-range x parameter range) into
// cells each carrying a positive, machine-recomputable lower bound.

#ifndef PTHETA_CERTIFY_HPP
#define PTHETA_CERTIFY_HPP

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ptheta/boundary.hpp"
#include "ptheta/parallel.hpp"
#include "ptheta/product.hpp"
#include "ptheta/series.hpp"

namespace ptheta {

struct CertConfig {
    mpfr_prec_t precision_bits = 128;
    int initial_splits = 3;     ///< initial grid = 2^n x 2^n cells per piece
    int depth_cap = 40;         ///< bisections per dimension past the grid
    long max_cells = 300000;    ///< processed-cell budget per run
    double eval_tol = 1e-10;    ///< absolute series tail target
    double product_tol = 1e-3;  ///< Theta* multiplier slack (log scale)
    int threads = 1;
    bool positive = false;      ///< certify theta > 0 instead of theta != 0
};

struct CertCell {
    std::string piece;
    RealInterval q_box;
    RealInterval s_box;
    std::string method; // "direct" | "split"
    BigFloat lb;
};

struct FailCell {
    std::string piece;
    RealInterval q_box;
    RealInterval s_box;
    std::string reason; // "depth" | "budget"
};

struct Certificate {
    std::string region;
    RealInterval q_range;
    mpfr_prec_t precision_bits = 128;
    bool certified = false;
    std::vector<CertCell> cells;
    std::vector<FailCell> failures;
    CertConfig config;

    std::string to_json() const;
    bool write_file(const std::string& path) const;
};

namespace detail {

struct MethodOutcome {
    bool ok = false;
    const char* method = "";
    BigFloat lb;
};

// Positive lower bound for |theta| (or for theta itself in positive mode)
// over q_box x cover(s_box), or failure.
inline MethodOutcome try_cell(const PathPiece& piece, const RealInterval& q_box,
                              const RealInterval& s_box, const CertConfig& cfg)
{
    MethodOutcome out;
    RealInterval sb = s_box.is_point() ? s_box.widened_ulp() : s_box;
    ComplexRect x = piece.cover(sb);
    SeriesTarget st{cfg.eval_tol, -1, 5000};
    ProductTarget pt{cfg.product_tol, 10000};

    BigFloat xlo = x.abs_lo();
    bool split_possible = mpfr_cmp_ui(xlo.raw(), 1) > 0 && !x.contains_zero();
    bool direct_first = mpfr_cmp_d(xlo.raw(), 1.2) <= 0 ||
                        mpfr_cmp_d(q_box.hi().raw(), 0.6) <= 0;

    auto direct = [&]() -> bool {
        try {
            EvalResult th = theta(q_box, x, st);
            BigFloat lb;
            if (cfg.positive && piece.real_segment) {
                lb = th.enclosure.re().lo();
            } else if (piece.real_segment) {
                lb = th.enclosure.re().mig();
            } else {
                lb = th.enclosure.abs_lo();
            }
            if (lb.sign() > 0) {
                out = {true, "direct", lb};
                return true;
            }
        } catch (const TailStall&) {
        } catch (const NonConvergence&) {
        }
        return false;
    };
    auto split = [&]() -> bool {
        if (!split_possible) return false;
        try {
            EvalResult g = laurent_G(q_box, x, st);
            ProductResult ts = theta_star(q_box, x, pt);
            BigFloat lb, th_hi = ts.enclosure.abs_hi();
            if (cfg.positive && piece.real_segment) {
                // theta = Theta* - G >= (-G).lo - |Theta*|
                BigFloat negg_lo;
                mpfr_neg(negg_lo.raw(), g.enclosure.re().hi().raw(), MPFR_RNDD);
                mpfr_sub(lb.raw(), negg_lo.raw(), th_hi.raw(), MPFR_RNDD);
            } else {
                BigFloat g_lo = g.enclosure.abs_lo();
                mpfr_sub(lb.raw(), g_lo.raw(), th_hi.raw(), MPFR_RNDD);
            }
            if (lb.sign() > 0) {
                out = {true, "split", lb};
                return true;
            }
        } catch (const TailStall&) {
        } catch (const DomainError&) {
        }
        return false;
    };

    if (direct_first) {
        if (!direct()) split();
    } else {
        if (!split()) direct();
    }
    return out;
}

struct WorkCell {
    int piece_index;
    RealInterval q_box;
    RealInterval s_box;
    int depth_q = 0, depth_s = 0;
};

} // namespace detail

/// Certify that theta has no zeros on `path` for every q in `q_range`
/// (theta > 0 instead when cfg.positive is set and the path is a real
/// segment). Never returns a false Certified: cells that cannot be resolved
/// within the depth cap and cell budget are reported as failures.
inline Certificate certify_no_zeros(const BoundaryPath& path, const RealInterval& q_range,
                                    const CertConfig& cfg = {})
{
    PrecisionGuard prec(cfg.precision_bits);
    Certificate cert;
    cert.region = path.region;
    cert.q_range = q_range;
    cert.precision_bits = cfg.precision_bits;
    cert.config = cfg;

    // initial grid: 2^initial_splits per dimension, built by repeated
    // bisection so neighbouring cells share endpoints exactly
    std::vector<detail::WorkCell> level;
    for (int pi = 0; pi < static_cast<int>(path.pieces.size()); pi++) {
        std::vector<RealInterval> qparts{q_range}, sparts{RealInterval(0.0, 1.0)};
        for (int d = 0; d < cfg.initial_splits; d++) {
            std::vector<RealInterval> nq, ns;
            for (const auto& iv : qparts) {
                BigFloat m = iv.midpoint();
                nq.emplace_back(iv.lo(), m);
                nq.emplace_back(m, iv.hi());
            }
            for (const auto& iv : sparts) {
                BigFloat m = iv.midpoint();
                ns.emplace_back(iv.lo(), m);
                ns.emplace_back(m, iv.hi());
            }
            qparts = std::move(nq);
            sparts = std::move(ns);
        }
        for (const auto& qb : qparts)
            for (const auto& sb : sparts) level.push_back({pi, qb, sb, 0, 0});
    }

    long processed = 0;
    BigFloat qr_width = q_range.width();
    while (!level.empty()) {
        long room = cfg.max_cells - processed;
        size_t take = room <= 0 ? 0 : std::min<size_t>(level.size(), static_cast<size_t>(room));
        for (size_t i = take; i < level.size(); i++) {
            const auto& c = level[i];
            cert.failures.push_back(
                {path.pieces[static_cast<size_t>(c.piece_index)].id, c.q_box, c.s_box, "budget"});
        }
        level.resize(take);
        if (level.empty()) break;
        processed += static_cast<long>(level.size());

        std::vector<detail::MethodOutcome> results(level.size());
        parallel_for(level.size(), cfg.threads, [&](size_t i) {
            const auto& c = level[i];
            results[i] =
                detail::try_cell(path.pieces[static_cast<size_t>(c.piece_index)], c.q_box,
                                 c.s_box, cfg);
        });

        std::vector<detail::WorkCell> next;
        for (size_t i = 0; i < level.size(); i++) {
            const auto& c = level[i];
            const auto& piece = path.pieces[static_cast<size_t>(c.piece_index)];
            if (results[i].ok) {
                cert.cells.push_back({piece.id, c.q_box, c.s_box, results[i].method,
                                      results[i].lb});
                continue;
            }
            // bisect the dimension of larger relative width
            BigFloat qw = c.q_box.width(), sw = c.s_box.width();
            BigFloat qrel;
            if (qr_width.sign() > 0) {
                mpfr_div(qrel.raw(), qw.raw(), qr_width.raw(), MPFR_RNDN);
            }
            bool split_q = qrel > sw;
            if (split_q && c.depth_q >= cfg.depth_cap) split_q = false;
            if (!split_q && c.depth_s >= cfg.depth_cap) split_q = c.depth_q < cfg.depth_cap;
            if ((split_q && c.depth_q >= cfg.depth_cap) ||
                (!split_q && c.depth_s >= cfg.depth_cap)) {
                cert.failures.push_back({piece.id, c.q_box, c.s_box, "depth"});
                continue;
            }
            if (split_q) {
                BigFloat m = c.q_box.midpoint();
                if (!(m > c.q_box.lo() && c.q_box.hi() > m)) {
                    cert.failures.push_back({piece.id, c.q_box, c.s_box, "depth"});
                    continue;
                }
                next.push_back({c.piece_index, RealInterval(c.q_box.lo(), m), c.s_box,
                                c.depth_q + 1, c.depth_s});
                next.push_back({c.piece_index, RealInterval(m, c.q_box.hi()), c.s_box,
                                c.depth_q + 1, c.depth_s});
            } else {
                BigFloat m = c.s_box.midpoint();
                if (!(m > c.s_box.lo() && c.s_box.hi() > m)) {
                    cert.failures.push_back({piece.id, c.q_box, c.s_box, "depth"});
                    continue;
                }
                next.push_back({c.piece_index, c.q_box, RealInterval(c.s_box.lo(), m),
                                c.depth_q, c.depth_s + 1});
                next.push_back({c.piece_index, c.q_box, RealInterval(m, c.s_box.hi()),
                                c.depth_q, c.depth_s + 1});
            }
        }
        level = std::move(next);
    }

    cert.certified = cert.failures.empty();
    auto key = [](const auto& a, const auto& b) {
        if (a.piece != b.piece) return a.piece < b.piece;
        int cq = mpfr_cmp(a.q_box.lo().raw(), b.q_box.lo().raw());
        if (cq != 0) return cq < 0;
        return mpfr_cmp(a.s_box.lo().raw(), b.s_box.lo().raw()) < 0;
    };
    std::sort(cert.cells.begin(), cert.cells.end(), key);
    std::sort(cert.failures.begin(), cert.failures.end(), key);
    return cert;
}

/// Certify theta(q, x) > 0 for x in [a, b] (a <= b <= 0) and q in q_range.
inline Certificate certify_positive_on_segment(double a, double b,
                                               const RealInterval& q_range,
                                               CertConfig cfg = {})
{
    if (!(a <= b)) throw std::invalid_argument("certify_positive_on_segment: a > b");
    cfg.positive = true;
    BoundaryPath path = BoundaryPath::real_segment(a, b);
    path.region = "positive-" + path.region;
    return certify_no_zeros(path, q_range, cfg);
}

// ---------------------------------------------------------------------------
// JSON certificate format (stable key order, deterministic byte output):
// {"version":1,"region":...,"q":[lo,hi],"precision_bits":N,
//  "status":"certified"|"failed","cells":[...],"failures":[...]}
// Interval endpoints are 25-significant-digit decimals, lo rounded down and
// hi rounded up, so a parsed certificate encloses the computed one.
// ---------------------------------------------------------------------------

inline std::string Certificate::to_json() const
{
    std::ostringstream os;
    os << "{\"version\":1,\"region\":\"" << region << "\",\"q\":["
       << q_range.lo_str25() << "," << q_range.hi_str25() << "],\"precision_bits\":"
       << precision_bits << ",\"status\":\"" << (certified ? "certified" : "failed")
       << "\",\"cells\":[";
    for (size_t i = 0; i < cells.size(); i++) {
        const auto& c = cells[i];
        if (i) os << ",";
        os << "{\"piece\":\"" << c.piece << "\",\"q\":[" << c.q_box.lo_str25() << ","
           << c.q_box.hi_str25() << "],\"s\":[" << c.s_box.lo_str25() << ","
           << c.s_box.hi_str25() << "],\"lb\":\"" << c.lb.str(25, MPFR_RNDD)
           << "\",\"method\":\"" << c.method << "\"}";
    }
    os << "],\"failures\":[";
    for (size_t i = 0; i < failures.size(); i++) {
        const auto& c = failures[i];
        if (i) os << ",";
        os << "{\"piece\":\"" << c.piece << "\",\"q\":[" << c.q_box.lo_str25() << ","
           << c.q_box.hi_str25() << "],\"s\":[" << c.s_box.lo_str25() << ","
           << c.s_box.hi_str25() << "],\"reason\":\"" << c.reason << "\"}";
    }
    os << "]}";
    return os.str();
}

inline bool Certificate::write_file(const std::string& path) const
{
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << to_json() << "\n";
    return static_cast<bool>(f);
}

} // namespace ptheta

#endif
