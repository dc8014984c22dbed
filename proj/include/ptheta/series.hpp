// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
//
// Certified evaluation of the partial theta function
//
//     theta(q, x) = sum_{j>=0} q^{j(j+1)/2} x^j,        |q| < 1,
//
// its polynomial truncations, the Laurent tail
//
//     G(q, x) = sum_{j<=-1} q^{j(j+1)/2} x^j
//             = sum_{i>=1} q^{i(i-1)/2} X^i,   X = 1/x,  |x| > 1,
//
// and the split G = G5 + G* used for |x| >= 3/sqrt(2). Every enclosure
// already includes a rigorous bound on the omitted series tail.

#ifndef PTHETA_SERIES_HPP
#define PTHETA_SERIES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ptheta/complex_rect.hpp"
#include "ptheta/errors.hpp"

namespace ptheta {

/// Certified function value: the true value lies in `enclosure`, which has
/// been inflated by `tail_bound` (an upper bound on the modulus of all
/// omitted terms past the first `terms_used`).
struct EvalResult {
    ComplexRect enclosure;
    long terms_used = 0;
    RealInterval tail_bound;
};

struct SeriesTarget {
    double abs_tol = 1e-12;     ///< absolute tail tolerance
    long fixed_terms = -1;      ///< if >= 0, force truncation index k
    long term_cap = 1000000;    ///< hard cap on the truncation index
};

namespace detail {

inline unsigned long tri(unsigned long j) { return j * (j + 1) / 2; }

// Upper bound of sum_{j>k} a^{j(j+1)/2} r^j for 0 <= a < 1, r >= 0, given as
// first_term / (1 - ratio) with ratio = a^{k+2} r < 1. BigFloat in, rounded up.
inline bool geometric_tail_upper(const BigFloat& a, const BigFloat& r, long k, BigFloat& out)
{
    BigFloat ratio, first, t;
    mpfr_pow_ui(ratio.raw(), a.raw(), static_cast<unsigned long>(k) + 2, MPFR_RNDU);
    mpfr_mul(ratio.raw(), ratio.raw(), r.raw(), MPFR_RNDU);
    if (mpfr_cmp_ui(ratio.raw(), 1) >= 0) return false;
    mpfr_pow_ui(first.raw(), a.raw(), tri(static_cast<unsigned long>(k) + 1), MPFR_RNDU);
    mpfr_pow_ui(t.raw(), r.raw(), static_cast<unsigned long>(k) + 1, MPFR_RNDU);
    mpfr_mul(first.raw(), first.raw(), t.raw(), MPFR_RNDU);
    mpfr_ui_sub(t.raw(), 1, ratio.raw(), MPFR_RNDD);
    mpfr_div(out.raw(), first.raw(), t.raw(), MPFR_RNDU);
    return true;
}

inline RealInterval nonneg_upper(const BigFloat& b)
{
    BigFloat zero;
    return RealInterval(zero, b);
}

} // namespace detail

/// Upper bound of sum_{j>k} q^{j(j+1)/2} r^j valid for all |q| <= q_hi and
/// |x| <= r. Throws TailStall when the decreasing-term-ratio precondition
/// q_hi^{k+2} r < 1 fails.
inline RealInterval theta_tail_bound(const RealInterval& q, const RealInterval& r, long k)
{
    if (k < 0) throw std::invalid_argument("theta_tail_bound: k < 0");
    BigFloat a = q.mag(), rr = r.mag(), b;
    if (mpfr_cmp_ui(a.raw(), 1) >= 0) throw NonConvergence("theta tail: |q| >= 1");
    if (!detail::geometric_tail_upper(a, rr, k, b)) {
        throw TailStall("theta tail: q^{k+2} r >= 1 at this truncation index");
    }
    return detail::nonneg_upper(b);
}

inline RealInterval theta_tail_bound(double q_hi, double r, long k)
{
    return theta_tail_bound(RealInterval(q_hi), RealInterval(r), k);
}

/// Exact enclosure of the degree-k truncation theta_k(q, x) (no tail).
/// Summed Horner-style from the highest term down.
inline ComplexRect theta_trunc(const RealInterval& q, const ComplexRect& x, long k)
{
    if (k < 0) throw std::invalid_argument("theta_trunc: k < 0");
    std::vector<RealInterval> coeff(static_cast<size_t>(k) + 1);
    coeff[0] = RealInterval(1.0);
    RealInterval qpow(1.0);
    for (long j = 1; j <= k; j++) {
        qpow = qpow * q;                               // q^j
        coeff[static_cast<size_t>(j)] = coeff[static_cast<size_t>(j) - 1] * qpow;
    }
    ComplexRect acc(coeff[static_cast<size_t>(k)]);
    for (long j = k - 1; j >= 0; j--) {
        acc = acc * x + coeff[static_cast<size_t>(j)];
    }
    return acc;
}

/// Certified enclosure of theta(q, x) for every q in the input interval and
/// every x in the input rectangle.
inline EvalResult theta(const RealInterval& q, const ComplexRect& x,
                        const SeriesTarget& target = {})
{
    BigFloat a = q.mag();
    if (mpfr_cmp_ui(a.raw(), 1) >= 0) throw NonConvergence("theta: |q| >= 1");
    BigFloat r = x.abs_hi();

    long k;
    BigFloat tail;
    if (target.fixed_terms >= 0) {
        k = target.fixed_terms;
        if (!detail::geometric_tail_upper(a, r, k, tail)) {
            throw TailStall("theta: no tail bound at the requested truncation index");
        }
    } else {
        BigFloat tol(target.abs_tol, MPFR_RNDD);
        k = 0;
        bool ok = false;
        for (; k <= target.term_cap; k++) {
            if (detail::geometric_tail_upper(a, r, k, tail) &&
                mpfr_cmp(tail.raw(), tol.raw()) <= 0) {
                ok = true;
                break;
            }
        }
        if (!ok) throw TailStall("theta: truncation index cap exceeded");
    }

    ComplexRect sum = theta_trunc(q, x, k);
    RealInterval tb = detail::nonneg_upper(tail);
    return EvalResult{sum.inflated(tb), k + 1, tb};
}

/// Certified enclosure of G(q, x) = sum_{i>=1} q^{i(i-1)/2} X^i, X = 1/x.
/// Requires |x| > 1 over the whole rectangle; valid for |q| <= 1.
inline EvalResult laurent_G(const RealInterval& q, const ComplexRect& x,
                            const SeriesTarget& target = {})
{
    RealInterval xa = x.abs_bounds();
    if (mpfr_cmp_ui(xa.lo().raw(), 1) <= 0) {
        throw DomainError("G: requires |x| > 1 over the rectangle");
    }
    ComplexRect X = x.reciprocal();
    BigFloat Xa = X.abs_hi();
    BigFloat a = q.mag();
    if (mpfr_cmp_ui(a.raw(), 1) > 0) throw NonConvergence("G: |q| > 1");
    if (mpfr_cmp_ui(Xa.raw(), 1) >= 0) throw DomainError("G: |1/x| >= 1 after rounding");

    // tail after n terms: first = a^{n(n+1)/2} Xa^{n+1}; ratio <= a^{n+1} Xa < 1
    BigFloat tol(target.abs_tol, MPFR_RNDD), tail, ratio, t;
    long n = target.fixed_terms >= 0 ? target.fixed_terms : 1;
    for (;; n++) {
        mpfr_pow_ui(ratio.raw(), a.raw(), static_cast<unsigned long>(n) + 1, MPFR_RNDU);
        mpfr_mul(ratio.raw(), ratio.raw(), Xa.raw(), MPFR_RNDU);
        mpfr_pow_ui(tail.raw(), a.raw(), detail::tri(static_cast<unsigned long>(n)), MPFR_RNDU);
        mpfr_pow_ui(t.raw(), Xa.raw(), static_cast<unsigned long>(n) + 1, MPFR_RNDU);
        mpfr_mul(tail.raw(), tail.raw(), t.raw(), MPFR_RNDU);
        mpfr_ui_sub(t.raw(), 1, ratio.raw(), MPFR_RNDD);
        mpfr_div(tail.raw(), tail.raw(), t.raw(), MPFR_RNDU);
        if (target.fixed_terms >= 0) break;
        if (mpfr_cmp(tail.raw(), tol.raw()) <= 0) break;
        if (n >= target.term_cap) throw TailStall("G: truncation index cap exceeded");
    }

    // coefficients q^{i(i-1)/2}, i = 1..n; Horner in X from the top
    std::vector<RealInterval> coeff(static_cast<size_t>(n) + 1);
    coeff[1] = RealInterval(1.0);
    RealInterval qpow(1.0);
    for (long i = 2; i <= n; i++) {
        qpow = qpow * q;                               // q^{i-1}
        coeff[static_cast<size_t>(i)] = coeff[static_cast<size_t>(i) - 1] * qpow;
    }
    ComplexRect acc(coeff[static_cast<size_t>(n)]);
    for (long i = n - 1; i >= 1; i--) {
        acc = acc * X + coeff[static_cast<size_t>(i)];
    }
    acc = acc * X;

    RealInterval tb = detail::nonneg_upper(tail);
    return EvalResult{acc.inflated(tb), n, tb};
}

/// The split G = G5 + G* with G5 = X + qX^2 + q^3 X^3 + q^6 X^4 + q^10 X^5.
/// Intended for |x| >= w = 3/sqrt(2); rejects rectangles entirely below w.
inline std::pair<ComplexRect, ComplexRect> G5_and_Gstar(const RealInterval& q,
                                                        const ComplexRect& x,
                                                        const SeriesTarget& target = {})
{
    RealInterval w = RealInterval::w_const();
    if (mpfr_cmp(x.abs_hi().raw(), w.lo().raw()) < 0) {
        throw DomainError("G5/G*: rectangle lies below modulus w = 3/sqrt(2)");
    }
    RealInterval xa = x.abs_bounds();
    if (mpfr_cmp_ui(xa.lo().raw(), 1) <= 0) {
        throw DomainError("G5/G*: requires |x| > 1 over the rectangle");
    }
    ComplexRect X = x.reciprocal();
    RealInterval q3 = q.pow_int(3), q6 = q.pow_int(6), q10 = q.pow_int(10);
    ComplexRect g5 = X * (ComplexRect::one() + X * (ComplexRect(q) +
                     X * (ComplexRect(q3) + X * (ComplexRect(q6) + X * ComplexRect(q10)))));

    // G* = sum_{i>=6} q^{i(i-1)/2} X^i, summed directly with the same
    // geometric tail as the full G.
    BigFloat Xa = X.abs_hi();
    BigFloat a = q.mag();
    if (mpfr_cmp_ui(a.raw(), 1) > 0) throw NonConvergence("G*: |q| > 1");
    BigFloat tol(target.abs_tol, MPFR_RNDD), tail, ratio, t;
    long n = 6;
    for (;; n++) {
        mpfr_pow_ui(ratio.raw(), a.raw(), static_cast<unsigned long>(n) + 1, MPFR_RNDU);
        mpfr_mul(ratio.raw(), ratio.raw(), Xa.raw(), MPFR_RNDU);
        mpfr_pow_ui(tail.raw(), a.raw(), detail::tri(static_cast<unsigned long>(n)), MPFR_RNDU);
        mpfr_pow_ui(t.raw(), Xa.raw(), static_cast<unsigned long>(n) + 1, MPFR_RNDU);
        mpfr_mul(tail.raw(), tail.raw(), t.raw(), MPFR_RNDU);
        mpfr_ui_sub(t.raw(), 1, ratio.raw(), MPFR_RNDD);
        mpfr_div(tail.raw(), tail.raw(), t.raw(), MPFR_RNDU);
        if (mpfr_cmp(tail.raw(), tol.raw()) <= 0) break;
        if (n >= target.term_cap) throw TailStall("G*: truncation index cap exceeded");
    }
    std::vector<RealInterval> coeff(static_cast<size_t>(n) + 1, RealInterval(0.0));
    RealInterval qT(1.0), qj(1.0);
    for (long i = 1; i <= n; i++) {
        if (i >= 2) {
            qj = qj * q;  // q^{i-1}
            qT = qT * qj; // q^{i(i-1)/2}
        }
        if (i >= 6) coeff[static_cast<size_t>(i)] = qT;
    }
    ComplexRect acc(coeff[static_cast<size_t>(n)]);
    for (long i = n - 1; i >= 6; i--) {
        acc = acc * X + coeff[static_cast<size_t>(i)];
    }
    ComplexRect gstar = acc * X.pow_int(6);
    gstar = gstar.inflated(detail::nonneg_upper(tail));
    return {g5, gstar};
}

/// Term-wise differentiated series: d^{dx}/dx^{dx} d^{dq}/dq^{dq} theta(q,x),
/// dx in {0,1,2}, dq in {0,1}, with a rigorous geometric tail bound.
inline EvalResult theta_derivative(const RealInterval& q, const ComplexRect& x,
                                   int dx, int dq, const SeriesTarget& target = {})
{
    if (dx < 0 || dx > 2 || dq < 0 || dq > 1) {
        throw std::invalid_argument("theta_derivative: unsupported order");
    }
    if (dx == 0 && dq == 0) return theta(q, x, target);
    BigFloat a = q.mag();
    if (mpfr_cmp_ui(a.raw(), 1) >= 0) throw NonConvergence("theta_derivative: |q| >= 1");
    // dq = 1 differentiates q^{T_j}: exponent T_j - 1, so j >= 1 is required
    // anyway; with dq = 1 and j = 1, T_j - 1 = 0.
    long j0 = std::max(dx, dq);       // first index with a nonzero term
    BigFloat r = x.abs_hi();

    auto weight = [&](long j) -> double {
        double wgt = 1.0;
        for (int i = 0; i < dx; i++) wgt *= static_cast<double>(j - i);
        if (dq) wgt *= static_cast<double>(detail::tri(static_cast<unsigned long>(j)));
        return wgt;
    };

    // ratio bound for j >= k+1:
    //   [(j+1)/(j+1-dx)] * [T_{j+1}/T_j]^dq * a^{j+1} * r, decreasing in j.
    auto tail_at = [&](long k, BigFloat& out) -> bool {
        BigFloat ratio, t;
        mpfr_pow_ui(ratio.raw(), a.raw(), static_cast<unsigned long>(k) + 2, MPFR_RNDU);
        mpfr_mul(ratio.raw(), ratio.raw(), r.raw(), MPFR_RNDU);
        double wratio = static_cast<double>(k + 2) / static_cast<double>(k + 2 - dx);
        if (dq) wratio *= static_cast<double>(k + 3) / static_cast<double>(k + 1);
        mpfr_mul_d(ratio.raw(), ratio.raw(), wratio * (1 + 1e-14), MPFR_RNDU);
        if (mpfr_cmp_ui(ratio.raw(), 1) >= 0) return false;
        unsigned long e = detail::tri(static_cast<unsigned long>(k) + 1) -
                          static_cast<unsigned long>(dq);
        mpfr_pow_ui(out.raw(), a.raw(), e, MPFR_RNDU);
        mpfr_pow_ui(t.raw(), r.raw(), static_cast<unsigned long>(k + 1 - dx), MPFR_RNDU);
        mpfr_mul(out.raw(), out.raw(), t.raw(), MPFR_RNDU);
        mpfr_mul_d(out.raw(), out.raw(), weight(k + 1) * (1 + 1e-14), MPFR_RNDU);
        mpfr_ui_sub(t.raw(), 1, ratio.raw(), MPFR_RNDD);
        mpfr_div(out.raw(), out.raw(), t.raw(), MPFR_RNDU);
        return true;
    };

    BigFloat tol(target.abs_tol, MPFR_RNDD), tail;
    long k = j0 + 1;
    bool ok = false;
    for (; k <= target.term_cap; k++) {
        if (tail_at(k, tail) && mpfr_cmp(tail.raw(), tol.raw()) <= 0) {
            ok = true;
            break;
        }
    }
    if (!ok) throw TailStall("theta_derivative: truncation index cap exceeded");

    // coefficients W_j q^{T_j - dq}, Horner in x over powers j - dx.
    // With dq = 1 the running power tracks q^{T_j - 1} directly (T_1 - 1 = 0),
    // so intervals containing q = 0 stay legal.
    std::vector<RealInterval> coeff(static_cast<size_t>(k) + 1, RealInterval(0.0));
    RealInterval qT(1.0); // q^{T_j - dq}, valid from j = 1 on when dq = 1
    RealInterval qj(1.0); // q^j
    for (long j = 1; j <= k; j++) {
        qj = qj * q;
        if (dq) {
            if (j >= 2) qT = qT * qj; // T_j - 1 = (T_{j-1} - 1) + j
        } else {
            qT = qT * qj;             // T_j = T_{j-1} + j
        }
        if (j < j0) continue;
        RealInterval c = qT;
        // multiply the integral weight factor by factor, each exact in double
        for (int i = 0; i < dx; i++) c = c * RealInterval(static_cast<double>(j - i));
        if (dq) c = c * RealInterval(static_cast<double>(detail::tri(static_cast<unsigned long>(j))));
        coeff[static_cast<size_t>(j)] = c;
    }
    ComplexRect acc(coeff[static_cast<size_t>(k)]);
    for (long j = k - 1; j >= j0; j--) {
        acc = acc * x + coeff[static_cast<size_t>(j)];
    }
    // multiply the remaining x^{j0 - dx} factor
    for (long i = 0; i < j0 - dx; i++) acc = acc * x;

    RealInterval tb = detail::nonneg_upper(tail);
    return EvalResult{acc.inflated(tb), k - j0 + 1, tb};
}

} // namespace ptheta

#endif
