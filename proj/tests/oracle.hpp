// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
//
// Test-side oracle: plain 512-bit point evaluation by ascending direct
// summation. Deliberately independent of the library implementation path
// (no intervals, no Horner, no tail machinery) so the two can check each
// other.

#ifndef PTHETA_TESTS_ORACLE_HPP
#define PTHETA_TESTS_ORACLE_HPP

#include <complex>
#include <vector>

#include "ptheta/big_complex.hpp"
#include "ptheta/precision.hpp"

namespace oracle {

using ptheta::BigComplex;
using ptheta::BigFloat;
using ptheta::PrecisionGuard;

inline constexpr mpfr_prec_t kOraclePrec = 512;

// theta(q, x) = sum_{j>=0} q^{j(j+1)/2} x^j, up to `terms` explicit terms
// (stops early once terms fall 600 bits below the largest seen)
inline BigComplex theta(const BigFloat& q, const BigComplex& x, int terms = 2000)
{
    PrecisionGuard guard(kOraclePrec);
    BigComplex acc(1.0, 0.0), term(1.0, 0.0);
    BigFloat qp(1.0);
    mpfr_exp_t peak = 0;
    for (int j = 1; j <= terms; j++) {
        mpfr_mul(qp.raw(), qp.raw(), q.raw(), MPFR_RNDN);
        term = qp * (term * x);
        acc = acc + term;
        BigFloat m = term.abs();
        if (!m.is_zero()) {
            mpfr_exp_t e = mpfr_get_exp(m.raw());
            if (e > peak) peak = e;
            if (j > 8 && e < peak - 600) break;
        } else {
            break;
        }
    }
    return acc;
}

inline BigComplex theta(double q, std::complex<double> x, int terms = 2000)
{
    PrecisionGuard guard(kOraclePrec);
    return theta(BigFloat(q), BigComplex(x), terms);
}

// G(q, x) = sum_{i>=1} q^{i(i-1)/2} x^{-i}
inline BigComplex laurent_G(double q, std::complex<double> x, int terms = 2000)
{
    PrecisionGuard guard(kOraclePrec);
    BigFloat qb(q), qp(1.0);
    BigComplex X = BigComplex(1.0, 0.0) / BigComplex(x);
    BigComplex acc(0.0, 0.0), term = X;
    acc = acc + term;
    mpfr_exp_t peak = 0;
    for (int i = 2; i <= terms; i++) {
        mpfr_mul(qp.raw(), qp.raw(), qb.raw(), MPFR_RNDN); // q^{i-1}
        term = qp * (term * X);
        acc = acc + term;
        BigFloat m = term.abs();
        if (m.is_zero()) break;
        mpfr_exp_t e = mpfr_get_exp(m.raw());
        if (e > peak) peak = e;
        if (i > 8 && e < peak - 600) break;
    }
    return acc;
}

// bilateral sum_{j=-N}^{N} q^{j(j+1)/2} x^j
inline BigComplex bilateral(double q, std::complex<double> x, int N = 400)
{
    PrecisionGuard guard(kOraclePrec);
    return theta(BigFloat(q), BigComplex(x), N) + laurent_G(q, x, N);
}

// Newton refinement of a zero at 512 bits from a double seed
inline BigComplex newton(double q, std::complex<double> seed, int iters = 60)
{
    PrecisionGuard guard(kOraclePrec);
    BigFloat qb(q);
    BigComplex z(seed);
    for (int it = 0; it < iters; it++) {
        // f and f' by direct summation
        BigComplex f(1.0, 0.0), fp(0.0, 0.0), term(1.0, 0.0);
        BigFloat qp(1.0);
        mpfr_exp_t peak = 0;
        for (int j = 1; j <= 2000; j++) {
            mpfr_mul(qp.raw(), qp.raw(), qb.raw(), MPFR_RNDN);
            term = qp * (term * z);
            f = f + term;
            fp = fp + BigFloat(static_cast<double>(j)) * (term / z);
            BigFloat m = term.abs();
            if (m.is_zero()) break;
            mpfr_exp_t e = mpfr_get_exp(m.raw());
            if (e > peak) peak = e;
            if (j > 8 && e < peak - 600) break;
        }
        if (fp.abs().is_zero()) break;
        BigComplex step = f / fp;
        z = z - step;
        BigFloat sa = step.abs(), za = z.abs();
        if (!za.is_zero()) {
            mpfr_div(sa.raw(), sa.raw(), za.raw(), MPFR_RNDN);
            if (sa.cmp(1e-120) < 0) break;
        }
    }
    return z;
}

// real zeros of theta(q, .) in [a, b] via sign changes on a log-spaced grid
// plus bisection, all at 512 bits
inline std::vector<BigFloat> real_zeros_log_grid(double q, double a, double b, int points)
{
    PrecisionGuard guard(kOraclePrec);
    BigFloat qb(q);
    auto eval = [&](const BigFloat& x) {
        BigFloat acc(1.0), term(1.0), qp(1.0);
        mpfr_exp_t peak = 0;
        for (int j = 1; j <= 4000; j++) {
            mpfr_mul(qp.raw(), qp.raw(), qb.raw(), MPFR_RNDN);
            mpfr_mul(term.raw(), term.raw(), qp.raw(), MPFR_RNDN);
            mpfr_mul(term.raw(), term.raw(), x.raw(), MPFR_RNDN);
            mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
            if (!term.is_zero()) {
                mpfr_exp_t e = mpfr_get_exp(term.raw());
                if (e > peak) peak = e;
                if (j > 8 && e < peak - 600) break;
            }
        }
        return acc;
    };
    // grid x_i = -|a| * (|b|/|a|)^{i/(points-1)}, a < b < 0: sweep from b to a
    std::vector<BigFloat> zeros;
    double la = std::log(-a), lb = std::log(-b);
    BigFloat px(-(std::exp(lb))), pf = eval(px);
    for (int i = 1; i < points; i++) {
        double lx = lb + (la - lb) * static_cast<double>(i) / (points - 1);
        BigFloat x(-(std::exp(lx)));
        BigFloat f = eval(x);
        if (pf.sign() * f.sign() < 0) {
            BigFloat lo = x, hi = px, flo = f; // lo < hi (more negative first)
            for (int it = 0; it < 200; it++) {
                BigFloat mid;
                mpfr_add(mid.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
                mpfr_div_2ui(mid.raw(), mid.raw(), 1, MPFR_RNDN);
                BigFloat fm = eval(mid);
                if (fm.sign() == 0) {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if (fm.sign() * flo.sign() < 0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            zeros.push_back(lo);
        }
        px = x;
        pf = f;
    }
    return zeros;
}

} // namespace oracle

#endif
