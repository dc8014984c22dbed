// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.

#ifndef PTHETA_REAL_INTERVAL_HPP
#define PTHETA_REAL_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include <mpfr.h>

#include "ptheta/big_float.hpp"
#include "ptheta/errors.hpp"
#include "ptheta/precision.hpp"

namespace ptheta {

/// Closed real interval [lo, hi] with arbitrary-precision endpoints.
///
/// Every operation rounds outward (lo toward -inf, hi toward +inf), so the
/// result interval contains the exact image of the operation over all members
/// of the operands. Values are immutable after construction and safe to share
/// across threads.
class RealInterval {
public:
    RealInterval() : lo_(working_precision()), hi_(working_precision()) {}

    /// Degenerate interval [d, d]; the conversion from double is exact.
    RealInterval(double d) : RealInterval()
    {
        if (std::isnan(d)) throw std::invalid_argument("RealInterval: NaN endpoint");
        mpfr_set_d(lo_.raw(), d, MPFR_RNDD);
        mpfr_set_d(hi_.raw(), d, MPFR_RNDU);
    }

    RealInterval(double lo, double hi) : RealInterval()
    {
        if (std::isnan(lo) || std::isnan(hi)) {
            throw std::invalid_argument("RealInterval: NaN endpoint");
        }
        if (lo > hi) throw std::invalid_argument("RealInterval: lo > hi");
        mpfr_set_d(lo_.raw(), lo, MPFR_RNDD);
        mpfr_set_d(hi_.raw(), hi, MPFR_RNDU);
    }

    RealInterval(const BigFloat& lo, const BigFloat& hi) : lo_(lo), hi_(hi)
    {
        if (lo.is_nan() || hi.is_nan()) {
            throw std::invalid_argument("RealInterval: NaN endpoint");
        }
        if (mpfr_cmp(lo_.raw(), hi_.raw()) > 0) {
            throw std::invalid_argument("RealInterval: lo > hi");
        }
    }

    static RealInterval make(double lo, double hi) { return RealInterval(lo, hi); }

    /// Interval enclosing the decimal literal (outward decimal-to-binary).
    static RealInterval from_decimal(const std::string& s)
    {
        RealInterval r;
        if (mpfr_set_str(r.lo_.raw(), s.c_str(), 10, MPFR_RNDD) != 0 &&
            mpfr_nan_p(r.lo_.raw())) {
            throw std::invalid_argument("RealInterval: bad decimal '" + s + "'");
        }
        mpfr_set_str(r.hi_.raw(), s.c_str(), 10, MPFR_RNDU);
        if (mpfr_nan_p(r.lo_.raw()) || mpfr_nan_p(r.hi_.raw())) {
            throw std::invalid_argument("RealInterval: bad decimal '" + s + "'");
        }
        return r;
    }

    static RealInterval from_decimal(const std::string& lo, const std::string& hi)
    {
        RealInterval r;
        mpfr_set_str(r.lo_.raw(), lo.c_str(), 10, MPFR_RNDD);
        mpfr_set_str(r.hi_.raw(), hi.c_str(), 10, MPFR_RNDU);
        if (mpfr_nan_p(r.lo_.raw()) || mpfr_nan_p(r.hi_.raw()) ||
            mpfr_cmp(r.lo_.raw(), r.hi_.raw()) > 0) {
            throw std::invalid_argument("RealInterval: bad decimal bounds");
        }
        return r;
    }

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    double lo_d() const { return mpfr_get_d(lo_.raw(), MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_.raw(), MPFR_RNDU); }

    bool is_point() const { return mpfr_equal_p(lo_.raw(), hi_.raw()) != 0; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool strictly_positive() const { return lo_.sign() > 0; }
    bool strictly_negative() const { return hi_.sign() < 0; }

    bool contains(double d) const
    {
        return mpfr_cmp_d(lo_.raw(), d) <= 0 && mpfr_cmp_d(hi_.raw(), d) >= 0;
    }
    bool contains(const BigFloat& v) const
    {
        return mpfr_cmp(lo_.raw(), v.raw()) <= 0 && mpfr_cmp(hi_.raw(), v.raw()) >= 0;
    }
    bool contains(const RealInterval& o) const
    {
        return mpfr_cmp(lo_.raw(), o.lo_.raw()) <= 0 &&
               mpfr_cmp(hi_.raw(), o.hi_.raw()) >= 0;
    }
    bool intersects(const RealInterval& o) const
    {
        return mpfr_cmp(lo_.raw(), o.hi_.raw()) <= 0 &&
               mpfr_cmp(o.lo_.raw(), hi_.raw()) <= 0;
    }

    BigFloat width() const
    {
        BigFloat w;
        mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
        return w;
    }
    double width_d() const { return width().to_double(MPFR_RNDU); }

    BigFloat midpoint() const
    {
        BigFloat m;
        mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
        mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
        return m;
    }
    double mid_d() const { return midpoint().to_double(MPFR_RNDN); }

    /// Smallest absolute value over the interval (0 if it straddles zero).
    BigFloat mig() const
    {
        BigFloat m;
        if (contains_zero()) {
            mpfr_set_zero(m.raw(), 1);
        } else if (lo_.sign() > 0) {
            mpfr_set(m.raw(), lo_.raw(), MPFR_RNDD);
        } else {
            mpfr_neg(m.raw(), hi_.raw(), MPFR_RNDD);
        }
        return m;
    }

    /// Largest absolute value over the interval.
    BigFloat mag() const
    {
        BigFloat a, b;
        mpfr_abs(a.raw(), lo_.raw(), MPFR_RNDU);
        mpfr_abs(b.raw(), hi_.raw(), MPFR_RNDU);
        return a >= b ? a : b;
    }

    RealInterval operator-() const
    {
        RealInterval r;
        mpfr_neg(r.lo_.raw(), hi_.raw(), MPFR_RNDD);
        mpfr_neg(r.hi_.raw(), lo_.raw(), MPFR_RNDU);
        return r;
    }

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b)
    {
        RealInterval r;
        mpfr_add(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_add(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        return r;
    }

    friend RealInterval operator-(const RealInterval& a, const RealInterval& b)
    {
        RealInterval r;
        mpfr_sub(r.lo_.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
        mpfr_sub(r.hi_.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
        return r;
    }

    friend RealInterval operator*(const RealInterval& a, const RealInterval& b)
    {
        RealInterval r;
        BigFloat t;
        // lo: min of the four products rounded down
        mpfr_mul(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_mul(t.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
        mpfr_min(r.lo_.raw(), r.lo_.raw(), t.raw(), MPFR_RNDD);
        mpfr_mul(t.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_min(r.lo_.raw(), r.lo_.raw(), t.raw(), MPFR_RNDD);
        mpfr_mul(t.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDD);
        mpfr_min(r.lo_.raw(), r.lo_.raw(), t.raw(), MPFR_RNDD);
        // hi: max of the four products rounded up
        mpfr_mul(r.hi_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDU);
        mpfr_mul(t.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDU);
        mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
        mpfr_mul(t.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
        mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
        mpfr_mul(t.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
        return r;
    }

    /// Division requires the divisor to be sign-definite; an interval divisor
    /// containing zero raises DomainError rather than widening to the plane.
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b)
    {
        if (b.contains_zero()) {
            throw DomainError("interval division: divisor contains zero");
        }
        RealInterval r;
        BigFloat t;
        mpfr_div(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_div(t.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
        mpfr_min(r.lo_.raw(), r.lo_.raw(), t.raw(), MPFR_RNDD);
        mpfr_div(t.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_min(r.lo_.raw(), r.lo_.raw(), t.raw(), MPFR_RNDD);
        mpfr_div(t.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDD);
        mpfr_min(r.lo_.raw(), r.lo_.raw(), t.raw(), MPFR_RNDD);
        mpfr_div(r.hi_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDU);
        mpfr_div(t.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDU);
        mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
        mpfr_div(t.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
        mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
        mpfr_div(t.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
        return r;
    }

    friend RealInterval operator+(const RealInterval& a, double d) { return a + RealInterval(d); }
    friend RealInterval operator+(double d, const RealInterval& a) { return RealInterval(d) + a; }
    friend RealInterval operator-(const RealInterval& a, double d) { return a - RealInterval(d); }
    friend RealInterval operator-(double d, const RealInterval& a) { return RealInterval(d) - a; }
    friend RealInterval operator*(const RealInterval& a, double d) { return a * RealInterval(d); }
    friend RealInterval operator*(double d, const RealInterval& a) { return RealInterval(d) * a; }
    friend RealInterval operator/(const RealInterval& a, double d) { return a / RealInterval(d); }
    friend RealInterval operator/(double d, const RealInterval& a) { return RealInterval(d) / a; }

    /// Tighter than self-multiplication: the square never dips negative.
    RealInterval sq() const
    {
        RealInterval r;
        if (contains_zero()) {
            mpfr_set_zero(r.lo_.raw(), 1);
        } else {
            BigFloat m = mig();
            mpfr_sqr(r.lo_.raw(), m.raw(), MPFR_RNDD);
        }
        BigFloat m = mag();
        mpfr_sqr(r.hi_.raw(), m.raw(), MPFR_RNDU);
        return r;
    }

    /// Integer power, n >= 0.
    RealInterval pow_int(unsigned long n) const
    {
        RealInterval r;
        if (n == 0) {
            mpfr_set_ui(r.lo_.raw(), 1, MPFR_RNDD);
            mpfr_set_ui(r.hi_.raw(), 1, MPFR_RNDU);
            return r;
        }
        if (n % 2 == 1) {
            mpfr_pow_ui(r.lo_.raw(), lo_.raw(), n, MPFR_RNDD);
            mpfr_pow_ui(r.hi_.raw(), hi_.raw(), n, MPFR_RNDU);
            return r;
        }
        if (contains_zero()) {
            mpfr_set_zero(r.lo_.raw(), 1);
        } else {
            BigFloat m = mig();
            mpfr_pow_ui(r.lo_.raw(), m.raw(), n, MPFR_RNDD);
        }
        BigFloat m = mag();
        mpfr_pow_ui(r.hi_.raw(), m.raw(), n, MPFR_RNDU);
        return r;
    }

    /// Square root of the nonnegative part of the interval. Requires hi >= 0;
    /// a negative lower endpoint (from interval slop on a provably
    /// nonnegative quantity) is clamped to zero.
    RealInterval sqrt_() const
    {
        if (hi_.sign() < 0) throw DomainError("interval sqrt of a negative interval");
        RealInterval r;
        if (lo_.sign() <= 0) {
            mpfr_set_zero(r.lo_.raw(), 1);
        } else {
            mpfr_sqrt(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
        }
        mpfr_sqrt(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
        return r;
    }

    RealInterval exp_() const
    {
        RealInterval r;
        mpfr_exp(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
        mpfr_exp(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
        return r;
    }

    RealInterval log_() const
    {
        if (lo_.sign() <= 0) throw DomainError("interval log requires a positive interval");
        RealInterval r;
        mpfr_log(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
        mpfr_log(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
        return r;
    }

    RealInterval abs_() const
    {
        RealInterval r;
        mpfr_set(r.lo_.raw(), mig().raw(), MPFR_RNDD);
        mpfr_set(r.hi_.raw(), mag().raw(), MPFR_RNDU);
        return r;
    }

    static RealInterval hull(const RealInterval& a, const RealInterval& b)
    {
        RealInterval r;
        mpfr_min(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_max(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        return r;
    }

    static std::optional<RealInterval> intersect(const RealInterval& a, const RealInterval& b)
    {
        if (!a.intersects(b)) return std::nullopt;
        RealInterval r;
        mpfr_max(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_min(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        return r;
    }

    /// Widen both endpoints by one ulp at their own precision.
    RealInterval widened_ulp() const
    {
        RealInterval r(*this);
        mpfr_nextbelow(r.lo_.raw());
        mpfr_nextabove(r.hi_.raw());
        return r;
    }

    /// Enclosure of pi at the current working precision.
    static RealInterval pi()
    {
        RealInterval r;
        mpfr_const_pi(r.lo_.raw(), MPFR_RNDD);
        mpfr_const_pi(r.hi_.raw(), MPFR_RNDU);
        return r;
    }

    /// Enclosure of w = 3/sqrt(2), the half-height of the domain D.
    static RealInterval w_const()
    {
        RealInterval two(2.0);
        return RealInterval(3.0) / two.sqrt_();
    }

    /// cos(pi * s) with the argument in units of pi. Extrema of the cosine
    /// land on integer s, so the monotonicity analysis is exact.
    static RealInterval cos_pi(const RealInterval& s);
    /// sin(pi * s) via the quarter-turn shift.
    static RealInterval sin_pi(const RealInterval& s)
    {
        return cos_pi(s - RealInterval(0.5));
    }

    /// Directed 25-significant-digit decimal endpoints (lo down, hi up).
    std::string lo_str25() const { return lo_.str(25, MPFR_RNDD); }
    std::string hi_str25() const { return hi_.str(25, MPFR_RNDU); }

private:
    BigFloat lo_, hi_;

    // Outward bounds of cos at an exact point value `s0` given in pi units.
    static void cos_pi_point(const BigFloat& s0, BigFloat& out_lo, BigFloat& out_hi)
    {
        BigFloat t1, t2, c1, c2;
        mpfr_const_pi(t1.raw(), MPFR_RNDD);
        mpfr_const_pi(t2.raw(), MPFR_RNDU);
        // theta in [t1, t2] after directed multiplication by s0
        if (s0.sign() >= 0) {
            mpfr_mul(t1.raw(), t1.raw(), s0.raw(), MPFR_RNDD);
            mpfr_mul(t2.raw(), t2.raw(), s0.raw(), MPFR_RNDU);
        } else {
            BigFloat p1(t1), p2(t2);
            mpfr_mul(t1.raw(), p2.raw(), s0.raw(), MPFR_RNDD);
            mpfr_mul(t2.raw(), p1.raw(), s0.raw(), MPFR_RNDU);
        }
        mpfr_cos(c1.raw(), t1.raw(), MPFR_RNDD);
        mpfr_cos(c2.raw(), t2.raw(), MPFR_RNDD);
        mpfr_min(out_lo.raw(), c1.raw(), c2.raw(), MPFR_RNDD);
        mpfr_cos(c1.raw(), t1.raw(), MPFR_RNDU);
        mpfr_cos(c2.raw(), t2.raw(), MPFR_RNDU);
        mpfr_max(out_hi.raw(), c1.raw(), c2.raw(), MPFR_RNDU);
        // slack for a possible extremum strictly inside the ulp-wide argument
        // interval (the quadratic correction is far below one ulp)
        mpfr_nextbelow(out_lo.raw());
        mpfr_nextbelow(out_lo.raw());
        mpfr_nextabove(out_hi.raw());
        mpfr_nextabove(out_hi.raw());
        if (mpfr_cmp_si(out_lo.raw(), -1) < 0) mpfr_set_si(out_lo.raw(), -1, MPFR_RNDD);
        if (mpfr_cmp_si(out_hi.raw(), 1) > 0) mpfr_set_si(out_hi.raw(), 1, MPFR_RNDU);
    }

    // Is there an even integer in [a, b]? (exact dyadic computation)
    static bool has_even_integer(const BigFloat& a, const BigFloat& b)
    {
        BigFloat t(std::max(a.prec(), b.prec()) + 8);
        mpfr_div_2ui(t.raw(), a.raw(), 1, MPFR_RNDN); // exact
        mpfr_ceil(t.raw(), t.raw());
        mpfr_mul_2ui(t.raw(), t.raw(), 1, MPFR_RNDN); // exact
        return mpfr_cmp(t.raw(), b.raw()) <= 0;
    }
};

inline RealInterval RealInterval::cos_pi(const RealInterval& s)
{
    RealInterval r;
    BigFloat wdt = s.width();
    if (mpfr_cmp_ui(wdt.raw(), 2) >= 0) {
        mpfr_set_si(r.lo_.raw(), -1, MPFR_RNDD);
        mpfr_set_si(r.hi_.raw(), 1, MPFR_RNDU);
        return r;
    }
    BigFloat l1, h1, l2, h2;
    cos_pi_point(s.lo(), l1, h1);
    cos_pi_point(s.hi(), l2, h2);
    mpfr_min(r.lo_.raw(), l1.raw(), l2.raw(), MPFR_RNDD);
    mpfr_max(r.hi_.raw(), h1.raw(), h2.raw(), MPFR_RNDU);
    if (has_even_integer(s.lo(), s.hi())) {
        mpfr_set_si(r.hi_.raw(), 1, MPFR_RNDU);
    }
    // odd integer in [lo, hi] <=> even integer in [lo - 1, hi - 1]
    BigFloat am1, bm1;
    mpfr_sub_ui(am1.raw(), s.lo().raw(), 1, MPFR_RNDD);
    mpfr_sub_ui(bm1.raw(), s.hi().raw(), 1, MPFR_RNDU);
    if (has_even_integer(am1, bm1)) {
        mpfr_set_si(r.lo_.raw(), -1, MPFR_RNDD);
    }
    return r;
}

} // namespace ptheta

#endif
