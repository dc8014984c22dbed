// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
//
// Fast non-certified point evaluation of theta and its derivatives: a double
// path for exploration (zero finding, tracing, winding numbers) and an MPFR
// point path for residual polish. Rigorous claims always go through the
// interval engine instead.

#ifndef PTHETA_POINT_EVAL_HPP
#define PTHETA_POINT_EVAL_HPP

#include <cmath>
#include <complex>

#include "ptheta/big_complex.hpp"
#include "ptheta/errors.hpp"
#include "ptheta/series.hpp"

namespace ptheta {

namespace detail {

constexpr long kPointTermCap = 200000;

} // namespace detail

/// theta and, in one pass, its x- and q-derivatives up to the orders needed
/// by Newton iterations: f, fx, fxx, fq, fqx.
struct ThetaJet {
    std::complex<double> f{0.0, 0.0};
    std::complex<double> fx{0.0, 0.0};
    std::complex<double> fxx{0.0, 0.0};
    std::complex<double> fq{0.0, 0.0};
    std::complex<double> fqx{0.0, 0.0};
    double scale = 0.0; ///< max term magnitude encountered (cancellation gauge)
};

inline ThetaJet theta_jet(double q, std::complex<double> x)
{
    if (!(std::abs(q) < 1.0)) throw NonConvergence("theta_jet: |q| >= 1");
    ThetaJet out;
    out.f = 1.0;
    out.scale = 1.0;
    std::complex<double> term = 1.0; // q^{T_j} x^j
    double qp = 1.0;                 // q^j
    double ax = std::abs(x);
    for (long j = 1; j <= detail::kPointTermCap; j++) {
        qp *= q;
        term *= qp * x;
        double m = std::abs(term);
        double Tj = 0.5 * static_cast<double>(j) * static_cast<double>(j + 1);
        out.f += term;
        std::complex<double> tx = term * (static_cast<double>(j) / x);
        out.fx += tx;
        out.fxx += tx * (static_cast<double>(j - 1) / x);
        out.fq += term * (Tj / q);
        out.fqx += tx * (Tj / q);
        if (m > out.scale) out.scale = m;
        // stop once terms are decaying and negligible against the largest seen
        if (std::abs(qp) * ax < 0.9 && m < out.scale * 1e-22) break;
        if (j == detail::kPointTermCap) throw NonConvergence("theta_jet: term cap");
    }
    return out;
}

/// Plain theta(q, x) in double arithmetic.
inline std::complex<double> theta_point(double q, std::complex<double> x)
{
    if (!(std::abs(q) < 1.0)) throw NonConvergence("theta_point: |q| >= 1");
    std::complex<double> acc = 1.0, term = 1.0;
    double qp = 1.0, scale = 1.0, ax = std::abs(x);
    for (long j = 1; j <= detail::kPointTermCap; j++) {
        qp *= q;
        term *= qp * x;
        acc += term;
        double m = std::abs(term);
        if (m > scale) scale = m;
        if (std::abs(qp) * ax < 0.9 && m < scale * 1e-22) break;
        if (j == detail::kPointTermCap) throw NonConvergence("theta_point: term cap");
    }
    return acc;
}

/// Best-effort, non-certified evaluation for complex q inside the unit disk
/// (exploration only; nothing rigorous is built on it).
inline std::complex<double> theta_point(std::complex<double> q, std::complex<double> x)
{
    if (!(std::abs(q) < 1.0)) throw NonConvergence("theta_point: |q| >= 1");
    std::complex<double> acc = 1.0, term = 1.0, qp = 1.0;
    double scale = 1.0, ax = std::abs(x);
    for (long j = 1; j <= detail::kPointTermCap; j++) {
        qp *= q;
        term *= qp * x;
        acc += term;
        double m = std::abs(term);
        if (m > scale) scale = m;
        if (std::abs(qp) * ax < 0.9 && m < scale * 1e-22) break;
        if (j == detail::kPointTermCap) throw NonConvergence("theta_point: term cap");
    }
    return acc;
}

/// theta on the real line (q, x real) with the same stopping rule.
inline double theta_real(double q, double x)
{
    if (!(std::abs(q) < 1.0)) throw NonConvergence("theta_real: |q| >= 1");
    double acc = 1.0, term = 1.0, qp = 1.0, scale = 1.0, ax = std::fabs(x);
    for (long j = 1; j <= detail::kPointTermCap; j++) {
        qp *= q;
        term *= qp * x;
        acc += term;
        double m = std::fabs(term);
        if (m > scale) scale = m;
        if (std::fabs(qp) * ax < 0.9 && m < scale * 1e-22) break;
        if (j == detail::kPointTermCap) throw NonConvergence("theta_real: term cap");
    }
    return acc;
}

/// MPFR point evaluation of d^dx/dx^dx d^dq/dq^dq theta at (q, z), through the
/// certified interval engine on degenerate boxes; returns the midpoint.
inline BigComplex theta_point_mp(const BigFloat& q, const BigComplex& z, int dx, int dq,
                                 double tol = 1e-45)
{
    RealInterval qi(q, q);
    ComplexRect zi(RealInterval(z.re, z.re), RealInterval(z.im, z.im));
    EvalResult r = theta_derivative(qi, zi, dx, dq, SeriesTarget{tol, -1, 1000000});
    return BigComplex(r.enclosure.re().midpoint(), r.enclosure.im().midpoint());
}

} // namespace ptheta

#endif
