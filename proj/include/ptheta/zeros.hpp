// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
//
// Zero atlas: locate, count and trace complex zeros of theta(q, .), detect
// spectral values (q where two real zeros collide into a double zero), and
// compute all roots of polynomial truncations.
//
// Searches run in double precision and are polished through MPFR point
// evaluation; they are exploratory by default. Certified statements about
// zero-freeness come from the certify module; count_zeros combines a rigorous
// boundary exclusion with an adaptively refined winding number.

#ifndef PTHETA_ZEROS_HPP
#define PTHETA_ZEROS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ptheta/big_complex.hpp"
#include "ptheta/point_eval.hpp"
#include "ptheta/series.hpp"

namespace ptheta {

// ---------------------------------------------------------------------------
// Newton refinement
// ---------------------------------------------------------------------------

struct ZeroFix {
    std::complex<double> z;
    double residual; ///< |theta(q, z)| at 256-bit precision
};

namespace detail {

inline std::optional<std::complex<double>> newton_zero(double q, std::complex<double> seed,
                                                       int max_iter = 100)
{
    std::complex<double> z = seed;
    for (int it = 0; it < max_iter; it++) {
        ThetaJet jet = theta_jet(q, z);
        if (jet.fx == std::complex<double>(0.0, 0.0)) return std::nullopt;
        std::complex<double> dz = jet.f / jet.fx;
        z -= dz;
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
        if (std::abs(dz) < 1e-14 * (1.0 + std::abs(z))) return z;
    }
    return std::nullopt;
}

inline BigComplex newton_polish_mp(double q, std::complex<double> z0, int steps = 3,
                                   mpfr_prec_t prec = 256)
{
    PrecisionGuard guard(prec);
    BigFloat qb(q);
    BigComplex z(z0);
    for (int it = 0; it < steps; it++) {
        BigComplex f = theta_point_mp(qb, z, 0, 0);
        BigComplex fx = theta_point_mp(qb, z, 1, 0);
        if (fx.abs().is_zero()) break;
        z = z - f / fx;
    }
    return z;
}

inline double residual_mp(double q, const BigComplex& z, mpfr_prec_t prec = 256)
{
    PrecisionGuard guard(prec);
    return theta_point_mp(BigFloat(q), z, 0, 0).abs().to_double();
}

} // namespace detail

/// Newton-refine a zero of theta(q, .) from `seed`; MPFR-polished, with the
/// achieved residual |theta| reported. Throws NoConvergence.
inline ZeroFix find_zero(double q, std::complex<double> seed)
{
    auto z = detail::newton_zero(q, seed);
    if (!z) throw NoConvergence("find_zero: Newton did not converge from seed");
    BigComplex zp = detail::newton_polish_mp(q, *z);
    if (!zp.is_finite()) throw NoConvergence("find_zero: polish diverged");
    return ZeroFix{zp.to_complex(), detail::residual_mp(q, zp)};
}

// ---------------------------------------------------------------------------
// Argument-principle zero counting
// ---------------------------------------------------------------------------

struct Box {
    double re_lo, re_hi, im_lo, im_hi;
};

namespace detail {

// Rigorous exclusion of zeros on the four edges of `b` by interval
// subdivision. Returns false if some subsegment cannot be excluded.
inline bool edges_exclude_zero(double q, const Box& b)
{
    RealInterval qi(q);
    struct Edge {
        RealInterval re, im;
        bool horizontal; // varying component is re
    };
    Edge edges[4] = {
        {RealInterval(b.re_lo, b.re_hi), RealInterval(b.im_lo), true},
        {RealInterval(b.re_lo, b.re_hi), RealInterval(b.im_hi), true},
        {RealInterval(b.re_lo), RealInterval(b.im_lo, b.im_hi), false},
        {RealInterval(b.re_hi), RealInterval(b.im_lo, b.im_hi), false},
    };
    SeriesTarget st{1e-14, -1, 4000};
    for (const auto& e : edges) {
        std::vector<RealInterval> stack;
        const RealInterval& var = e.horizontal ? e.re : e.im;
        BigFloat m0 = var.midpoint();
        stack.emplace_back(var.lo(), m0);
        stack.emplace_back(m0, var.hi());
        int work = 0;
        while (!stack.empty()) {
            if (++work > 4000) return false;
            RealInterval seg = stack.back();
            stack.pop_back();
            ComplexRect x = e.horizontal ? ComplexRect(seg, e.im) : ComplexRect(e.re, seg);
            bool ok = false;
            try {
                EvalResult th = theta(qi, x, st);
                ok = th.enclosure.abs_lo().sign() > 0;
            } catch (const TailStall&) {
            }
            if (ok) continue;
            BigFloat m = seg.midpoint();
            if (!(m > seg.lo() && seg.hi() > m) || seg.width_d() < 1e-9) return false;
            stack.emplace_back(seg.lo(), m);
            stack.emplace_back(m, seg.hi());
        }
    }
    return true;
}

} // namespace detail

/// Number of zeros of theta(q, .) inside the box, with multiplicity, by the
/// winding number of the boundary image with adaptively refined sampling
/// (consecutive phase steps < pi/2). Zeros on the boundary are excluded by
/// interval evaluation; the box is inflated by 2% and retried (up to 5 times)
/// when exclusion fails, and BoundaryZero is thrown after the fifth retry.
inline int count_zeros(double q, Box box)
{
    int inflations = 0;
    while (!detail::edges_exclude_zero(q, box)) {
        if (++inflations > 5) {
            throw BoundaryZero("count_zeros: cannot exclude a zero on the box boundary");
        }
        double dre = 0.02 * (box.re_hi - box.re_lo), dim = 0.02 * (box.im_hi - box.im_lo);
        box = {box.re_lo - dre, box.re_hi + dre, box.im_lo - dim, box.im_hi + dim};
    }

    // boundary parametrized over [0,4): edge k on [k, k+1)
    auto at = [&](double t) -> std::complex<double> {
        int k = static_cast<int>(t);
        double s = t - k;
        switch (k & 3) {
        case 0: return {box.re_lo + s * (box.re_hi - box.re_lo), box.im_lo};
        case 1: return {box.re_hi, box.im_lo + s * (box.im_hi - box.im_lo)};
        case 2: return {box.re_hi - s * (box.re_hi - box.re_lo), box.im_hi};
        default: return {box.re_lo, box.im_hi - s * (box.im_hi - box.im_lo)};
        }
    };

    struct Node {
        double t;
        std::complex<double> v;
    };
    std::vector<Node> nodes;
    const int init_per_edge = 24;
    for (int i = 0; i < 4 * init_per_edge; i++) {
        double t = static_cast<double>(i) / init_per_edge;
        nodes.push_back({t, theta_point(q, at(t))});
    }
    nodes.push_back({4.0, nodes.front().v});

    double total = 0.0;
    size_t i = 0;
    long inserted = 0;
    while (i + 1 < nodes.size()) {
        std::complex<double> a = nodes[i].v, b = nodes[i + 1].v;
        double da = std::arg(b / a);
        if (std::abs(da) < 1.5707963267948966 /* pi/2 */) {
            total += da;
            i++;
            continue;
        }
        if (++inserted > 2000000) throw NoConvergence("count_zeros: winding refinement stall");
        double tm = 0.5 * (nodes[i].t + nodes[i + 1].t);
        nodes.insert(nodes.begin() + static_cast<long>(i) + 1, {tm, theta_point(q, at(tm))});
    }
    double turns = total / (2.0 * 3.14159265358979323846);
    int n = static_cast<int>(std::lround(turns));
    if (std::abs(turns - n) > 0.25) throw NoConvergence("count_zeros: winding did not settle");
    return n;
}

// ---------------------------------------------------------------------------
// Truncation-polynomial roots (Aberth)
// ---------------------------------------------------------------------------

struct TruncZeros {
    std::vector<BigComplex> roots;         ///< sorted by (re, im)
    bool degenerate = false;               ///< q == 0: polynomial is constant 1
    double max_scaled_residual = 0.0;      ///< max |p(z)| / sum_j |c_j z^j|
};

/// All N roots of theta_N(q, .) = sum_{j=0}^N q^{j(j+1)/2} x^j by Aberth
/// iteration at extended precision, Newton-polished. N <= 500.
inline TruncZeros trunc_zeros(double q, long N, mpfr_prec_t prec = 192)
{
    if (N < 0 || N > 500) throw std::invalid_argument("trunc_zeros: need 0 <= N <= 500");
    if (!(std::fabs(q) < 1.0)) throw std::invalid_argument("trunc_zeros: need |q| < 1");
    TruncZeros out;
    if (q == 0.0 || N == 0) {
        out.degenerate = true;
        return out;
    }
    PrecisionGuard guard(prec);
    size_t n = static_cast<size_t>(N);

    std::vector<BigFloat> c(n + 1);
    {
        BigFloat qb(q), qj(1.0), qT(1.0);
        c[0] = qT;
        for (size_t j = 1; j <= n; j++) {
            mpfr_mul(qj.raw(), qj.raw(), qb.raw(), MPFR_RNDN);
            mpfr_mul(qT.raw(), qT.raw(), qj.raw(), MPFR_RNDN);
            c[j] = qT;
        }
    }

    auto horner = [&](const BigComplex& z, BigComplex& p, BigComplex& dp) {
        p = BigComplex(c[n], BigFloat(0.0));
        dp = BigComplex(0.0, 0.0);
        for (size_t j = n; j-- > 0;) {
            dp = dp * z + p;
            p = p * z + BigComplex(c[j], BigFloat(0.0));
        }
    };

    // Bini-style initial guesses: the Newton polygon of the coefficients puts
    // the k-th root modulus near |q|^{-k}
    std::vector<BigComplex> z(n);
    {
        double aq = std::fabs(q);
        for (size_t k = 0; k < n; k++) {
            BigFloat r;
            mpfr_set_d(r.raw(), aq, MPFR_RNDN);
            mpfr_pow_si(r.raw(), r.raw(), -static_cast<long>(k + 1), MPFR_RNDN);
            double ang = 2.0 * 3.14159265358979323846 *
                             (static_cast<double>(k) * 0.61803398874989485 + 0.17) +
                         0.5;
            BigFloat cr(std::cos(ang)), sr(std::sin(ang));
            BigComplex zk;
            mpfr_mul(zk.re.raw(), r.raw(), cr.raw(), MPFR_RNDN);
            mpfr_mul(zk.im.raw(), r.raw(), sr.raw(), MPFR_RNDN);
            z[k] = zk;
        }
    }

    // corrections stall at the roundoff floor eps * cond well above
    // 2^-prec; half precision is ample before the Newton polish
    BigFloat conv_tol;
    mpfr_set_ui_2exp(conv_tol.raw(), 1, -(prec / 2), MPFR_RNDN);
    std::vector<BigComplex> corr(n);
    for (int iter = 0; iter < 120; iter++) {
        for (size_t i = 0; i < n; i++) {
            BigComplex p, dp;
            horner(z[i], p, dp);
            if (p.abs().is_zero()) {
                corr[i] = BigComplex(0.0, 0.0);
                continue;
            }
            BigComplex nr = p / dp; // Newton ratio
            BigComplex s(0.0, 0.0);
            for (size_t j = 0; j < n; j++) {
                if (j == i) continue;
                s = s + BigComplex(1.0, 0.0) / (z[i] - z[j]);
            }
            BigComplex denom = BigComplex(1.0, 0.0) - nr * s;
            corr[i] = denom.abs().is_zero() ? nr : nr / denom;
        }
        bool done = true;
        for (size_t i = 0; i < n; i++) {
            z[i] = z[i] - corr[i];
            BigFloat rel = corr[i].abs(), za = z[i].abs();
            if (!za.is_zero()) {
                mpfr_div(rel.raw(), rel.raw(), za.raw(), MPFR_RNDN);
            }
            if (rel > conv_tol) done = false;
        }
        if (done) break;
        if (iter == 119) throw NoConvergence("trunc_zeros: Aberth did not converge");
    }

    // Newton polish and scaled residuals
    double worst = 0.0;
    for (size_t i = 0; i < n; i++) {
        for (int it = 0; it < 3; it++) {
            BigComplex p, dp;
            horner(z[i], p, dp);
            if (dp.abs().is_zero()) break;
            z[i] = z[i] - p / dp;
        }
        BigComplex p, dp;
        horner(z[i], p, dp);
        // scale = sum_j |c_j| |z|^j
        BigFloat za = z[i].abs(), zp(1.0), scale(0.0), t;
        for (size_t j = 0; j <= n; j++) {
            mpfr_mul(t.raw(), c[j].raw(), zp.raw(), MPFR_RNDN);
            mpfr_abs(t.raw(), t.raw(), MPFR_RNDN);
            mpfr_add(scale.raw(), scale.raw(), t.raw(), MPFR_RNDN);
            mpfr_mul(zp.raw(), zp.raw(), za.raw(), MPFR_RNDN);
        }
        BigFloat res = p.abs();
        mpfr_div(res.raw(), res.raw(), scale.raw(), MPFR_RNDN);
        worst = std::max(worst, res.to_double());
    }
    out.max_scaled_residual = worst;

    std::sort(z.begin(), z.end(), [](const BigComplex& a, const BigComplex& b) {
        int cr = mpfr_cmp(a.re.raw(), b.re.raw());
        if (cr != 0) return cr < 0;
        return mpfr_cmp(a.im.raw(), b.im.raw()) < 0;
    });
    out.roots = std::move(z);
    return out;
}

// ---------------------------------------------------------------------------
// Real-zero scan
// ---------------------------------------------------------------------------

/// Real zeros of theta(q, .) in [a, b], located by sign changes on a grid of
/// the given step, bisection-bracketed and Newton-polished. Ascending order.
inline std::vector<double> real_zeros_in(double q, double a, double b, double step = 0.01)
{
    std::vector<double> zeros;
    if (!(a < b)) return zeros;
    long npts = std::max<long>(16, static_cast<long>(std::ceil((b - a) / step)));
    double h = (b - a) / static_cast<double>(npts);
    double prev_x = a, prev_f = theta_real(q, a);
    for (long i = 1; i <= npts; i++) {
        double x = a + h * static_cast<double>(i);
        double f = theta_real(q, x);
        if (prev_f == 0.0) zeros.push_back(prev_x);
        if (prev_f * f < 0.0) {
            double lo = prev_x, hi = x, flo = prev_f;
            for (int it = 0; it < 80; it++) {
                double mid = 0.5 * (lo + hi);
                double fm = theta_real(q, mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_f = f;
    }
    return zeros;
}

// ---------------------------------------------------------------------------
// Branch tracing
// ---------------------------------------------------------------------------

struct TraceSample {
    double q;
    std::complex<double> z;
    double residual;
};

struct StepConfig {
    double dq_init = 1e-3;
    double dq_min = 1e-6;
    double dq_max = 8e-3;
    double grow = 1.4;
    double jump_factor = 3.0; ///< reject matches beyond this multiple of the extrapolated step
};

struct ZeroTrajectory {
    int branch_id = 0;
    std::vector<TraceSample> samples;
    bool step_underflow = false; ///< stopped before q_to (branch collision)

    std::string to_csv() const
    {
        std::ostringstream os;
        os << "branch,q,re,im,residual\n";
        char buf[160];
        for (const auto& s : samples) {
            std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g\n", branch_id, s.q,
                          s.z.real(), s.z.imag(), s.residual);
            os << buf;
        }
        return os.str();
    }
};

/// Continue the zero branch through q from q_from to q_to with adaptive steps
/// (halving on Newton failure down to the floor). A step underflow is the
/// expected behaviour at branch collisions and is reported on the trajectory
/// together with the last good sample.
inline ZeroTrajectory trace_branch(double q_from, double q_to, std::complex<double> seed,
                                   const StepConfig& cfg = {}, int branch_id = 0)
{
    ZeroTrajectory traj;
    traj.branch_id = branch_id;
    auto z0 = detail::newton_zero(q_from, seed);
    if (!z0) throw NoConvergence("trace_branch: no zero at q_from near seed");
    double dir = q_to >= q_from ? 1.0 : -1.0;
    double q = q_from;
    std::complex<double> z = *z0;
    auto push = [&](double qq, std::complex<double> zz) {
        traj.samples.push_back({qq, zz, std::abs(theta_point(qq, zz))});
    };
    push(q, z);

    double dq = cfg.dq_init;
    std::complex<double> z_prev = z;
    double q_prev = q;
    bool have_slope = false;
    while (dir * (q_to - q) > 1e-15) {
        double step_ = std::min(dq, std::max(dir * (q_to - q), 0.0));
        double q_next = q + dir * step_;
        std::complex<double> slope =
            have_slope ? (z - z_prev) / (q - q_prev) : std::complex<double>(0.0, 0.0);
        std::complex<double> z_pred = z + slope * (q_next - q);
        auto z_next = detail::newton_zero(q_next, z_pred, 60);
        bool ok = false;
        if (z_next) {
            // before a slope estimate exists, trust the first Newton solve
            double allowed = have_slope
                                 ? cfg.jump_factor * (std::abs(slope) * step_ +
                                                      1e-6 * (1.0 + std::abs(z)))
                                 : std::numeric_limits<double>::infinity();
            ok = std::abs(*z_next - z_pred) <= allowed;
        }
        if (!ok) {
            dq *= 0.5;
            if (dq < cfg.dq_min) {
                traj.step_underflow = true;
                return traj;
            }
            continue;
        }
        q_prev = q;
        z_prev = z;
        q = q_next;
        z = *z_next;
        have_slope = true;
        push(q, z);
        dq = std::min(cfg.dq_max, dq * cfg.grow);
    }
    return traj;
}

// ---------------------------------------------------------------------------
// Spectral values
// ---------------------------------------------------------------------------

struct SpectralValue {
    int j = 0;
    BigFloat q_tilde;
    BigComplex z_tilde;
    double res_theta = 0.0;  ///< |theta| at the double zero
    double res_dtheta = 0.0; ///< |d theta/dx| at the double zero

    std::string to_json() const
    {
        char buf[320];
        std::snprintf(buf, sizeof buf,
                      "{\"j\":%d,\"q\":%.17g,\"re\":%.17g,\"im\":%.17g,"
                      "\"res_theta\":%.17g,\"res_dtheta\":%.17g}",
                      j, q_tilde.to_double(), z_tilde.re.to_double(), z_tilde.im.to_double(),
                      res_theta, res_dtheta);
        return buf;
    }
};

namespace detail {

// 2D Newton for (theta, theta_x) = 0 in (q, x), both real, double precision.
// Solves [fq fx; fqx fxx] [dq, dx]^T = [f, fx]^T by Cramer's rule. Near a
// double zero the residuals bottom out at scale * eps, so the step criterion
// only needs to reach the quadratic-convergence basin of the MPFR polish.
inline bool newton2d(double& q, double& x, int max_iter = 60)
{
    for (int it = 0; it < max_iter; it++) {
        ThetaJet jet = theta_jet(q, {x, 0.0});
        double f = jet.f.real(), fx = jet.fx.real();
        double fq = jet.fq.real(), fxx = jet.fxx.real(), fqx = jet.fqx.real();
        double det = fq * fxx - fx * fqx;
        if (det == 0.0 || !std::isfinite(det)) return false;
        double sol_q = (f * fxx - fx * fx) / det;
        double sol_x = (fq * fx - f * fqx) / det;
        q -= sol_q;
        x -= sol_x;
        if (!(std::fabs(q) < 1.0) || !std::isfinite(x)) return false;
        if (std::fabs(sol_q) + std::fabs(sol_x) < 1e-8 * (1.0 + std::fabs(q) + std::fabs(x))) {
            return true;
        }
    }
    return false;
}

// MPFR 2D Newton polish on real (q, x), a few steps at 256 bits.
inline void newton2d_mp(BigFloat& q, BigFloat& x, int steps = 4, mpfr_prec_t prec = 256)
{
    PrecisionGuard guard(prec);
    for (int it = 0; it < steps; it++) {
        BigComplex z(x, BigFloat(0.0));
        BigFloat f = theta_point_mp(q, z, 0, 0).re;
        BigFloat fx = theta_point_mp(q, z, 1, 0).re;
        BigFloat fq = theta_point_mp(q, z, 0, 1).re;
        BigFloat fxx = theta_point_mp(q, z, 2, 0).re;
        BigFloat fqx = theta_point_mp(q, z, 1, 1).re;
        BigFloat det, t1, t2;
        mpfr_mul(det.raw(), fq.raw(), fxx.raw(), MPFR_RNDN);
        mpfr_mul(t1.raw(), fx.raw(), fqx.raw(), MPFR_RNDN);
        mpfr_sub(det.raw(), det.raw(), t1.raw(), MPFR_RNDN);
        if (det.is_zero()) return;
        // dq = (f*fxx - fx*fx)/det ; dx = (fq*fx - f*fqx)/det
        BigFloat dq, dx;
        mpfr_mul(t1.raw(), f.raw(), fxx.raw(), MPFR_RNDN);
        mpfr_mul(t2.raw(), fx.raw(), fx.raw(), MPFR_RNDN);
        mpfr_sub(dq.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
        mpfr_div(dq.raw(), dq.raw(), det.raw(), MPFR_RNDN);
        mpfr_mul(t1.raw(), fq.raw(), fx.raw(), MPFR_RNDN);
        mpfr_mul(t2.raw(), f.raw(), fqx.raw(), MPFR_RNDN);
        mpfr_sub(dx.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
        mpfr_div(dx.raw(), dx.raw(), det.raw(), MPFR_RNDN);
        mpfr_sub(q.raw(), q.raw(), dq.raw(), MPFR_RNDN);
        mpfr_sub(x.raw(), x.raw(), dx.raw(), MPFR_RNDN);
    }
}

} // namespace detail

/// Scan q upward from q_from, counting real zeros in [window_lo, 0] on a grid
/// of step dq; at each count decrease, refine the collision with a 2D Newton
/// on (theta, theta_x) and an MPFR polish. Stops after `count` spectral
/// values or at q_to.
inline std::vector<SpectralValue> spectral_scan(int count, double q_from = 0.26,
                                                double q_to = 0.92, double dq = 1e-3,
                                                double window_lo = -60.0)
{
    std::vector<SpectralValue> found;
    if (count <= 0) return found;
    std::vector<double> prev = real_zeros_in(q_from, window_lo, -1.0);
    double q_prev = q_from;
    for (double q = q_from + dq; q <= q_to + 1e-12; q += dq) {
        std::vector<double> cur = real_zeros_in(q, window_lo, -1.0);
        if (cur.size() < prev.size() && prev.size() >= 2) {
            // the colliding pair is the closest adjacent pair at the last grid q
            size_t best = 0;
            double best_gap = 1e300;
            for (size_t i = 0; i + 1 < prev.size(); i++) {
                double gap = prev[i + 1] - prev[i];
                if (gap < best_gap) {
                    best_gap = gap;
                    best = i;
                }
            }
            double qs = 0.5 * (q_prev + q);
            double xs = 0.5 * (prev[best] + prev[best + 1]);
            if (detail::newton2d(qs, xs) && qs > q_prev - 5 * dq && qs < q + 5 * dq) {
                BigFloat qt(qs), xt(xs);
                detail::newton2d_mp(qt, xt);
                SpectralValue sv;
                sv.j = static_cast<int>(found.size()) + 1;
                sv.q_tilde = qt;
                sv.z_tilde = BigComplex(xt, BigFloat(0.0));
                {
                    PrecisionGuard guard(256);
                    sv.res_theta =
                        theta_point_mp(qt, sv.z_tilde, 0, 0).abs().to_double();
                    sv.res_dtheta =
                        theta_point_mp(qt, sv.z_tilde, 1, 0).abs().to_double();
                }
                if (sv.res_theta < 1e-12 && sv.res_dtheta < 1e-12) {
                    found.push_back(std::move(sv));
                    if (static_cast<int>(found.size()) >= count) return found;
                }
            }
        }
        prev = std::move(cur);
        q_prev = q;
    }
    return found;
}

/// Locate the spectral value q~_j assuming `search_range` brackets exactly one
/// real-zero collision. Throws BracketingFailure otherwise.
inline SpectralValue find_spectral(int j, double q_lo, double q_hi)
{
    std::vector<SpectralValue> sv = spectral_scan(2, q_lo, q_hi);
    if (sv.empty()) throw BracketingFailure("find_spectral: no collision in range");
    if (sv.size() > 1) throw BracketingFailure("find_spectral: range brackets several collisions");
    sv[0].j = j;
    return sv[0];
}

} // namespace ptheta

#endif
