// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ptheta/big_complex.hpp"
#include "ptheta/complex_rect.hpp"
#include "ptheta/real_interval.hpp"

using namespace ptheta;

TEST_CASE("make: degenerate and decimal endpoints")
{
    RealInterval z = RealInterval::make(0.0, 0.0);
    CHECK(z.is_point());
    CHECK(z.contains(0.0));

    PrecisionGuard guard(128);
    RealInterval h = RealInterval::make(0.5, 0.5);
    CHECK(h.is_point()); // dyadic, exactly representable
    CHECK(h.width_d() <= std::ldexp(1.0, -126));

    // decimal 0.1 is not dyadic: outward conversion has positive width and
    // contains the 256-bit nearest value
    RealInterval tenth = RealInterval::from_decimal("0.1");
    CHECK(tenth.width_d() > 0.0);
    BigFloat fine = BigFloat::from_str("0.1", MPFR_RNDN, 256);
    CHECK(tenth.contains(fine));

    CHECK_THROWS_AS(RealInterval::make(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(RealInterval::make(std::nan(""), 0.0), std::invalid_argument);
}

TEST_CASE("complex multiplication anchors")
{
    ComplexRect z(RealInterval(0.25, 0.5), RealInterval(-1.0, 1.0));
    ComplexRect one = ComplexRect::one();
    CHECK((one * z).contains(z));

    ComplexRect i(0.0, 1.0);
    CHECK((i * i).contains(std::complex<double>(-1.0, 0.0)));

    // lambda = 3 e^{3 pi i / 4} = -w + wi; lambda^2 = -9i
    RealInterval w = RealInterval::w_const();
    ComplexRect lambda(-w, w);
    ComplexRect sq = lambda * lambda;
    CHECK(sq.contains(std::complex<double>(0.0, -9.0)));
    CHECK(sq.re().width_d() < 1e-30);
}

TEST_CASE("abs_bounds anchors")
{
    RealInterval w = RealInterval::w_const();
    ComplexRect x0(RealInterval(0.0), w); // t = 0 on the upper segment
    RealInterval a = x0.abs_bounds();
    // the tight enclosure sits inside a 25-digit band around 3/sqrt(2)
    CHECK(RealInterval::from_decimal("2.1213203435596425732025330",
                                     "2.1213203435596425732025331")
              .contains(a));
    CHECK(a.lo_d() > 2.121320343);
    CHECK(a.hi_d() < 2.121320345);

    ComplexRect origin(RealInterval(-1.0, 1.0), RealInterval(-1.0, 1.0));
    CHECK(origin.abs_bounds().lo().is_zero());

    ComplexRect x1(RealInterval(-1.0), w);
    RealInterval b = x1.abs_bounds();
    CHECK(b.lo_d() > 2.345207879);
    CHECK(b.hi_d() < 2.345207881);
    CHECK(b.hi_d() < 2.346);
}

TEST_CASE("containment: 512-bit points stay inside 64-bit interval results")
{
    std::mt19937_64 rng(20260207);
    std::uniform_real_distribution<double> U(-4.0, 4.0);
    for (int trial = 0; trial < 10000; trial++) {
        double a = U(rng), b = U(rng);
        BigFloat ref(kMinPrecision);
        {
            // exact op at 512 bits
            PrecisionGuard guard(512);
            BigFloat x(a), y(b), r(static_cast<mpfr_prec_t>(512));
            switch (trial % 5) {
            case 0: mpfr_add(r.raw(), x.raw(), y.raw(), MPFR_RNDN); break;
            case 1: mpfr_sub(r.raw(), x.raw(), y.raw(), MPFR_RNDN); break;
            case 2: mpfr_mul(r.raw(), x.raw(), y.raw(), MPFR_RNDN); break;
            case 3:
                if (std::fabs(b) < 1e-3) b = 1.0;
                mpfr_set_d(y.raw(), b, MPFR_RNDN);
                mpfr_div(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
                break;
            default:
                mpfr_abs(x.raw(), x.raw(), MPFR_RNDN);
                mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
                break;
            }
            ref = BigFloat(0.0, MPFR_RNDN, 512);
            mpfr_set(ref.raw(), r.raw(), MPFR_RNDN);
        }
        PrecisionGuard guard(64);
        RealInterval X(a), Y(b), R;
        switch (trial % 5) {
        case 0: R = X + Y; break;
        case 1: R = X - Y; break;
        case 2: R = X * Y; break;
        case 3: R = X / Y; break;
        default: R = X.abs_().sqrt_(); break;
        }
        REQUIRE(R.contains(ref));
    }
}

TEST_CASE("containment: complex products against 512-bit points")
{
    std::mt19937_64 rng(920260207);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    for (int trial = 0; trial < 2000; trial++) {
        std::complex<double> z1(U(rng), U(rng)), z2(U(rng), U(rng));
        BigComplex ref;
        {
            PrecisionGuard guard(512);
            ref = BigComplex(z1) * BigComplex(z2);
        }
        PrecisionGuard guard(64);
        ComplexRect R = ComplexRect(z1) * ComplexRect(z2);
        REQUIRE(R.re().contains(ref.re));
        REQUIRE(R.im().contains(ref.im));
    }
}

TEST_CASE("widths shrink as precision grows")
{
    auto run = [](mpfr_prec_t bits) {
        PrecisionGuard guard(bits);
        RealInterval x = RealInterval::from_decimal("0.1");
        RealInterval acc(1.0);
        for (int i = 0; i < 20; i++) acc = acc * (x + acc / 3.0);
        return acc.width();
    };
    BigFloat w64 = run(64), w256 = run(256);
    CHECK(w256 <= w64);
}

TEST_CASE("division by an interval containing zero is an error")
{
    RealInterval a(1.0, 2.0), b(-1.0, 1.0);
    CHECK_THROWS_AS(a / b, DomainError);
    ComplexRect z(RealInterval(-0.5, 0.5), RealInterval(-0.5, 0.5));
    CHECK_THROWS_AS(z.reciprocal(), DomainError);
}

TEST_CASE("interval trig in pi units")
{
    PrecisionGuard guard(128);
    // cos over [3/4, 1] in pi units: range [-1, -sqrt(2)/2]
    RealInterval c = RealInterval::cos_pi(RealInterval(0.75, 1.0));
    CHECK(c.contains(-1.0));
    CHECK(c.hi_d() < -0.7071067);
    CHECK(c.lo_d() >= -1.0);
    // sin over the same arc: [0, sqrt(2)/2]
    RealInterval s = RealInterval::sin_pi(RealInterval(0.75, 1.0));
    CHECK(s.contains(0.0));
    CHECK(s.hi_d() < 0.70710679);
    CHECK(s.hi_d() > 0.70710677);
    // an interval spanning an even integer reaches the maximum
    RealInterval c2 = RealInterval::cos_pi(RealInterval(-0.25, 0.25));
    CHECK(c2.contains(1.0));
}
