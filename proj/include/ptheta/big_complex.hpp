// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.

#ifndef PTHETA_BIG_COMPLEX_HPP
#define PTHETA_BIG_COMPLEX_HPP

#include <complex>

#include "ptheta/big_float.hpp"

namespace ptheta {

/// Point complex arithmetic on BigFloat components, round-to-nearest. Used by
/// the non-certified zero searches (Aberth, Newton polish); the certified
/// layer uses ComplexRect instead.
struct BigComplex {
    BigFloat re, im;

    BigComplex() = default;
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i) : re(r), im(i) {}
    explicit BigComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b)
    {
        BigComplex r;
        mpfr_add(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
        mpfr_add(r.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
        return r;
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b)
    {
        BigComplex r;
        mpfr_sub(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
        mpfr_sub(r.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
        return r;
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b)
    {
        BigComplex r;
        BigFloat t1, t2;
        mpfr_mul(t1.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
        mpfr_mul(t2.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
        mpfr_sub(r.re.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
        mpfr_mul(t1.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
        mpfr_mul(t2.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
        mpfr_add(r.im.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
        return r;
    }
    friend BigComplex operator*(const BigFloat& s, const BigComplex& a)
    {
        BigComplex r;
        mpfr_mul(r.re.raw(), a.re.raw(), s.raw(), MPFR_RNDN);
        mpfr_mul(r.im.raw(), a.im.raw(), s.raw(), MPFR_RNDN);
        return r;
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b)
    {
        BigFloat d, t1, t2;
        mpfr_sqr(t1.raw(), b.re.raw(), MPFR_RNDN);
        mpfr_sqr(t2.raw(), b.im.raw(), MPFR_RNDN);
        mpfr_add(d.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
        BigComplex num = a * BigComplex(b.re, negated(b.im));
        BigComplex r;
        mpfr_div(r.re.raw(), num.re.raw(), d.raw(), MPFR_RNDN);
        mpfr_div(r.im.raw(), num.im.raw(), d.raw(), MPFR_RNDN);
        return r;
    }

    BigFloat abs() const
    {
        BigFloat r;
        mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
        return r;
    }

    bool is_finite() const { return !re.is_nan() && !im.is_nan() && !re.is_inf() && !im.is_inf(); }

    static BigFloat negated(const BigFloat& v)
    {
        BigFloat r;
        mpfr_neg(r.raw(), v.raw(), MPFR_RNDN);
        return r;
    }
};

} // namespace ptheta

#endif
