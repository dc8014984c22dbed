// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
//
// Certified evaluation of the bilateral theta function through the Jacobi
// triple product
//
//   Theta*(q, x) = prod_{m>=1} (1 - q^m)(1 + x q^m)(1 + q^{m-1}/x),
//
// together with the auxiliary quantities R, K and M1 that the zero-free
// bounds are phrased in. The infinite sub-product past M factors is absorbed
// into a multiplier rectangle derived from a bound S on the sum of the
// logarithms of the omitted factors:
//
//   S = [ q^{M+1} (1 + |x|) + q^M / |x| ] / ( (1 - q)(1 - d) ),
//
// valid once q^M * max(|x|, 1/|x|, 1) <= d <= 1/2; the omitted product then
// lies within e^{S} - 1 of 1 in modulus.

#ifndef PTHETA_PRODUCT_HPP
#define PTHETA_PRODUCT_HPP

#include <utility>

#include "ptheta/complex_rect.hpp"
#include "ptheta/errors.hpp"
#include "ptheta/series.hpp"

namespace ptheta {

/// Certified enclosure of Theta*: `enclosure` already carries the tail
/// multiplier; `tail_factor` is the [e^{-S}, e^{S}] modulus band of the
/// omitted sub-product.
struct ProductResult {
    ComplexRect enclosure;
    long factors_used = 0;
    RealInterval tail_factor;
};

struct ProductTarget {
    double rel_tol = 1e-9;   ///< bound on S (log-scale tail multiplier slack)
    long factor_cap = 10000;
};

namespace detail {

// Upper bound S of the omitted-factor log sum after M factors; requires
// a^M * B <= 1/2 with B = max(|x|hi, |1/x|hi, 1). Returns false if not.
inline bool product_tail_log(const BigFloat& a, const BigFloat& xa_hi, const BigFloat& ixa_hi,
                             long M, BigFloat& S_out)
{
    BigFloat B, d, t, num;
    mpfr_max(B.raw(), xa_hi.raw(), ixa_hi.raw(), MPFR_RNDU);
    if (mpfr_cmp_ui(B.raw(), 1) < 0) mpfr_set_ui(B.raw(), 1, MPFR_RNDU);
    mpfr_pow_ui(d.raw(), a.raw(), static_cast<unsigned long>(M), MPFR_RNDU);
    mpfr_mul(d.raw(), d.raw(), B.raw(), MPFR_RNDU);
    if (mpfr_cmp_d(d.raw(), 0.5) > 0) return false;
    // numerator: a^{M+1} (1 + |x|) + a^M / |x|  ==  a^M (a (1 + |x|) + 1/|x|)
    mpfr_add_ui(num.raw(), xa_hi.raw(), 1, MPFR_RNDU);
    mpfr_mul(num.raw(), num.raw(), a.raw(), MPFR_RNDU);
    mpfr_add(num.raw(), num.raw(), ixa_hi.raw(), MPFR_RNDU);
    mpfr_pow_ui(t.raw(), a.raw(), static_cast<unsigned long>(M), MPFR_RNDU);
    mpfr_mul(num.raw(), num.raw(), t.raw(), MPFR_RNDU);
    // denominator: (1 - a)(1 - d), rounded down
    BigFloat den, t2;
    mpfr_ui_sub(den.raw(), 1, a.raw(), MPFR_RNDD);
    mpfr_ui_sub(t2.raw(), 1, d.raw(), MPFR_RNDD);
    mpfr_mul(den.raw(), den.raw(), t2.raw(), MPFR_RNDD);
    if (mpfr_sgn(den.raw()) <= 0) return false;
    mpfr_div(S_out.raw(), num.raw(), den.raw(), MPFR_RNDU);
    return true;
}

} // namespace detail

/// Certified enclosure of Theta*(q, x) over the input boxes. Requires
/// 0 outside x and |q| < 1 over the q interval. Negative q is allowed
/// (the tail analysis uses |q|).
inline ProductResult theta_star(const RealInterval& q, const ComplexRect& x,
                                const ProductTarget& target = {})
{
    if (x.contains_zero()) throw DomainError("theta_star: x rectangle contains zero");
    BigFloat a = q.mag();
    if (mpfr_cmp_ui(a.raw(), 1) >= 0) throw DomainError("theta_star: |q| >= 1");

    ComplexRect X = x.reciprocal();
    BigFloat xa_hi = x.abs_hi(), ixa_hi = X.abs_hi();

    BigFloat S, half_target(target.rel_tol / 2, MPFR_RNDD);
    long M = 1;
    bool ok = false;
    for (; M <= target.factor_cap; M++) {
        if (detail::product_tail_log(a, xa_hi, ixa_hi, M, S) &&
            mpfr_cmp(S.raw(), half_target.raw()) <= 0) {
            ok = true;
            break;
        }
    }
    if (!ok) throw TailStall("theta_star: factor cap exceeded before tail bound held");

    ComplexRect acc = ComplexRect::one();
    RealInterval qm(1.0);      // q^m
    RealInterval qm_prev(1.0); // q^{m-1}
    for (long m = 1; m <= M; m++) {
        qm_prev = qm;
        qm = qm * q;
        ComplexRect f = ComplexRect(RealInterval(1.0) - qm) *
                        (ComplexRect::one() + x * ComplexRect(qm)) *
                        (ComplexRect::one() + X * ComplexRect(qm_prev));
        acc = acc * f;
    }

    // multiplier band: the omitted product lies within e^S - 1 of 1
    BigFloat delta, neg_delta;
    mpfr_expm1(delta.raw(), S.raw(), MPFR_RNDU);
    mpfr_neg(neg_delta.raw(), delta.raw(), MPFR_RNDD);
    RealInterval pert(neg_delta, delta);
    ComplexRect mult(RealInterval(1.0) + pert, pert);
    acc = acc * mult;

    BigFloat emS, epS, negS;
    mpfr_neg(negS.raw(), S.raw(), MPFR_RNDD);
    mpfr_exp(emS.raw(), negS.raw(), MPFR_RNDD);
    mpfr_exp(epS.raw(), S.raw(), MPFR_RNDU);
    return ProductResult{acc, M, RealInterval(emS, epS)};
}

/// Enclosure of the modulus of the partial product prod_{m=1}^{M} (1 + q^{m-1}/x).
inline RealInterval R_partial_abs(const RealInterval& q, const ComplexRect& x, long M)
{
    if (x.contains_zero()) throw DomainError("R: x rectangle contains zero");
    ComplexRect X = x.reciprocal();
    ComplexRect acc = ComplexRect::one();
    RealInterval qm_prev(1.0);
    for (long m = 1; m <= M; m++) {
        acc = acc * (ComplexRect::one() + X * ComplexRect(qm_prev));
        qm_prev = qm_prev * q;
    }
    return acc.abs_bounds();
}

/// Bounds of |R(q, x)| = |prod_{m>=1} (1 + q^{m-1}/x)| using M explicit
/// factors plus the tail multiplier band. Requires |x| > 1.
inline RealInterval R_abs(const RealInterval& q, const ComplexRect& x, long M)
{
    RealInterval xa = x.abs_bounds();
    if (mpfr_cmp_ui(xa.lo().raw(), 1) <= 0) throw DomainError("R_abs: requires |x| > 1");
    BigFloat a = q.mag();
    if (mpfr_cmp_ui(a.raw(), 1) >= 0) throw DomainError("R_abs: |q| >= 1");
    ComplexRect X = x.reciprocal();
    BigFloat ixa_hi = X.abs_hi();

    // tail: S_R = |X| a^M / ((1-a)(1-d)), requiring d = a^M |X| <= 1/2
    BigFloat d, S, t, den;
    mpfr_pow_ui(d.raw(), a.raw(), static_cast<unsigned long>(M), MPFR_RNDU);
    mpfr_mul(d.raw(), d.raw(), ixa_hi.raw(), MPFR_RNDU);
    if (mpfr_cmp_d(d.raw(), 0.5) > 0) {
        throw TailStall("R_abs: tail precondition q^M / |x| <= 1/2 fails");
    }
    mpfr_ui_sub(den.raw(), 1, a.raw(), MPFR_RNDD);
    mpfr_ui_sub(t.raw(), 1, d.raw(), MPFR_RNDD);
    mpfr_mul(den.raw(), den.raw(), t.raw(), MPFR_RNDD);
    mpfr_pow_ui(S.raw(), a.raw(), static_cast<unsigned long>(M), MPFR_RNDU);
    mpfr_mul(S.raw(), S.raw(), ixa_hi.raw(), MPFR_RNDU);
    mpfr_div(S.raw(), S.raw(), den.raw(), MPFR_RNDU);

    RealInterval partial = R_partial_abs(q, x, M);
    BigFloat emS, epS, negS;
    mpfr_neg(negS.raw(), S.raw(), MPFR_RNDD);
    mpfr_exp(emS.raw(), negS.raw(), MPFR_RNDD);
    mpfr_exp(epS.raw(), S.raw(), MPFR_RNDU);
    return partial * RealInterval(emS, epS);
}

/// K(q) = (1 + qx)(1 + q/x) restricted to x = -5: 1 - 26q/5 + q^2.
inline RealInterval K_at_minus5(const RealInterval& q)
{
    RealInterval c = RealInterval(26.0) / RealInterval(5.0);
    return (q - c) * q + RealInterval(1.0);
}

/// M1(q, t) = (1-q) |(1+qx)(1+q/x)| at x = -t + wi, by the closed form
///
///   (1-q) sqrt( (2q^2t^2 + 9q^2 - 4tq + 2)(2q^2 - 4tq + 2t^2 + 9) / (2(2t^2+9)) ).
inline RealInterval M1(const RealInterval& q, const RealInterval& t)
{
    RealInterval t2 = t.sq(), q2 = q.sq(), qt = q * t;
    RealInterval A = RealInterval(2.0) * q2 * t2 + RealInterval(9.0) * q2 -
                     RealInterval(4.0) * qt + RealInterval(2.0);
    RealInterval B = RealInterval(2.0) * q2 - RealInterval(4.0) * qt +
                     RealInterval(2.0) * t2 + RealInterval(9.0);
    RealInterval C = RealInterval(2.0) * (RealInterval(2.0) * t2 + RealInterval(9.0));
    return (RealInterval(1.0) - q) * (A * B / C).sqrt_();
}

} // namespace ptheta

#endif
