// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.

#ifndef PTHETA_COMPLEX_RECT_HPP
#define PTHETA_COMPLEX_RECT_HPP

#include <complex>
#include <string>

#include "ptheta/real_interval.hpp"

namespace ptheta {

/// Axis-aligned rectangle in the complex plane: re x im, both RealInterval.
///
/// Rectangles (rather than discs) keep modulus bounds simple and tight on the
/// axis-aligned boundary parametrizations this library certifies.
class ComplexRect {
public:
    ComplexRect() = default;
    ComplexRect(RealInterval re, RealInterval im) : re_(std::move(re)), im_(std::move(im)) {}
    ComplexRect(double re, double im) : re_(re), im_(im) {}
    explicit ComplexRect(const RealInterval& re) : re_(re), im_(0.0) {}
    explicit ComplexRect(std::complex<double> z) : re_(z.real()), im_(z.imag()) {}

    static ComplexRect one() { return ComplexRect(1.0, 0.0); }
    static ComplexRect zero() { return ComplexRect(0.0, 0.0); }

    /// r * exp(i * pi * angle), angle given in units of pi.
    static ComplexRect from_polar_pi(const RealInterval& r, const RealInterval& angle_pi)
    {
        return ComplexRect(r * RealInterval::cos_pi(angle_pi),
                           r * RealInterval::sin_pi(angle_pi));
    }

    const RealInterval& re() const { return re_; }
    const RealInterval& im() const { return im_; }

    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool contains(std::complex<double> z) const
    {
        return re_.contains(z.real()) && im_.contains(z.imag());
    }
    bool contains(const ComplexRect& o) const
    {
        return re_.contains(o.re_) && im_.contains(o.im_);
    }
    bool intersects(const ComplexRect& o) const
    {
        return re_.intersects(o.re_) && im_.intersects(o.im_);
    }

    std::complex<double> mid() const { return {re_.mid_d(), im_.mid_d()}; }

    ComplexRect conj() const { return ComplexRect(re_, -im_); }
    ComplexRect operator-() const { return ComplexRect(-re_, -im_); }

    friend ComplexRect operator+(const ComplexRect& a, const ComplexRect& b)
    {
        return ComplexRect(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend ComplexRect operator-(const ComplexRect& a, const ComplexRect& b)
    {
        return ComplexRect(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend ComplexRect operator*(const ComplexRect& a, const ComplexRect& b)
    {
        return ComplexRect(a.re_ * b.re_ - a.im_ * b.im_,
                           a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend ComplexRect operator*(const RealInterval& s, const ComplexRect& z)
    {
        return ComplexRect(s * z.re_, s * z.im_);
    }
    friend ComplexRect operator*(const ComplexRect& z, const RealInterval& s) { return s * z; }

    friend ComplexRect operator+(const ComplexRect& a, const RealInterval& s)
    {
        return ComplexRect(a.re_ + s, a.im_);
    }
    friend ComplexRect operator+(const RealInterval& s, const ComplexRect& a) { return a + s; }

    /// |z|^2 as a real interval.
    RealInterval abs_sq() const { return re_.sq() + im_.sq(); }

    /// [lower, upper] bounds of |z| over the rectangle; the lower bound is 0
    /// exactly when the rectangle may contain the origin.
    RealInterval abs_bounds() const
    {
        BigFloat lo, hi, t;
        // lower: distance from the origin to the rectangle, rounded down
        mpfr_sqr(lo.raw(), re_.mig().raw(), MPFR_RNDD);
        mpfr_sqr(t.raw(), im_.mig().raw(), MPFR_RNDD);
        mpfr_add(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
        mpfr_sqrt(lo.raw(), lo.raw(), MPFR_RNDD);
        // upper: farthest corner, rounded up
        mpfr_sqr(hi.raw(), re_.mag().raw(), MPFR_RNDU);
        mpfr_sqr(t.raw(), im_.mag().raw(), MPFR_RNDU);
        mpfr_add(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
        mpfr_sqrt(hi.raw(), hi.raw(), MPFR_RNDU);
        return RealInterval(lo, hi);
    }
    BigFloat abs_lo() const { return abs_bounds().lo(); }
    BigFloat abs_hi() const { return abs_bounds().hi(); }

    /// 1/z computed as conj(z) / |z|^2; requires 0 outside the rectangle.
    ComplexRect reciprocal() const
    {
        if (contains_zero()) throw DomainError("complex reciprocal: rectangle contains zero");
        RealInterval d = abs_sq();
        return ComplexRect(re_ / d, -(im_ / d));
    }

    friend ComplexRect operator/(const ComplexRect& a, const ComplexRect& b)
    {
        return a * b.reciprocal();
    }

    ComplexRect pow_int(unsigned long n) const
    {
        ComplexRect acc = one();
        for (unsigned long i = 0; i < n; i++) acc = acc * (*this);
        return acc;
    }

    /// Minkowski-inflate both components by [-t, t] (tail absorption).
    ComplexRect inflated(const RealInterval& t) const
    {
        BigFloat m = t.mag(), neg;
        mpfr_neg(neg.raw(), m.raw(), MPFR_RNDD);
        RealInterval pad(neg, m);
        return ComplexRect(re_ + pad, im_ + pad);
    }

    ComplexRect widened_ulp() const
    {
        return ComplexRect(re_.widened_ulp(), im_.widened_ulp());
    }

private:
    RealInterval re_, im_;
};

} // namespace ptheta

#endif
