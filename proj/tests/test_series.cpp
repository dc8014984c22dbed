// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "ptheta/series.hpp"

using namespace ptheta;

namespace {

bool encloses(const ComplexRect& r, const BigComplex& pt)
{
    return r.re().contains(pt.re) && r.im().contains(pt.im);
}

} // namespace

TEST_CASE("theta: trivial anchors")
{
    PrecisionGuard guard(128);
    for (double q : {-0.9, -0.3, 0.0, 0.4, 0.97}) {
        EvalResult r = theta(RealInterval(q), ComplexRect::zero(), {1e-30});
        CHECK(r.enclosure.contains(std::complex<double>(1.0, 0.0)));
        CHECK(r.enclosure.re().width_d() < 1e-25);
    }
    EvalResult r0 = theta(RealInterval(0.0), ComplexRect(17.0, -3.0), {1e-30});
    CHECK(r0.enclosure.contains(std::complex<double>(1.0, 0.0)));
}

TEST_CASE("negative q: interval evaluation matches the oracle")
{
    PrecisionGuard guard(128);
    EvalResult r = theta(RealInterval(-0.7), ComplexRect(-2.7, 0.0), {1e-25});
    CHECK(encloses(r.enclosure, oracle::theta(-0.7, {-2.7, 0.0})));
    EvalResult c = theta(RealInterval(-0.96), ComplexRect(0.8, 1.2), {1e-25});
    CHECK(encloses(c.enclosure, oracle::theta(-0.96, {0.8, 1.2})));
}

TEST_CASE("theta(0.5, 1): frozen oracle value")
{
    PrecisionGuard guard(128);
    EvalResult r = theta(RealInterval(0.5), ComplexRect(1.0, 0.0), {1e-35});
    // direct-summation oracle, frozen at 512 bits
    BigFloat frozen = BigFloat::from_str("1.6416325606551538662938427702254294342261",
                                         MPFR_RNDN, 512);
    CHECK(r.enclosure.re().contains(frozen));
    CHECK(r.enclosure.im().contains(0.0));
    // and against the live oracle
    BigComplex live = oracle::theta(0.5, {1.0, 0.0});
    CHECK(encloses(r.enclosure, live));
    CHECK(r.enclosure.re().width_d() < 1e-30);
}

TEST_CASE("the small arc value sits at radius 3, not radius 1")
{
    PrecisionGuard guard(128);
    RealInterval ang = RealInterval::from_decimal("0.5188451144");
    ComplexRect x3 = ComplexRect::from_polar_pi(RealInterval(3.0), ang);
    RealInterval a3 = theta(RealInterval(0.71), x3, {1e-25}).enclosure.abs_bounds();
    CHECK(a3.lo_d() > 0.0141 - 2e-4);
    CHECK(a3.hi_d() < 0.0141 + 2e-4);
    CHECK(RealInterval::from_decimal("0.0141091292803430", "0.0141091292803431").contains(a3));

    ComplexRect x1 = ComplexRect::from_polar_pi(RealInterval(1.0), ang);
    RealInterval a1 = theta(RealInterval(0.71), x1, {1e-25}).enclosure.abs_bounds();
    CHECK(a1.lo_d() > 0.5);
}

TEST_CASE("theta_trunc anchors")
{
    PrecisionGuard guard(128);
    ComplexRect t15 = theta_trunc(RealInterval(0.5), ComplexRect(-5.0, 0.0), 15);
    CHECK(t15.re().lo_d() > 0.05);

    for (double q : {0.1, 0.7}) {
        ComplexRect t0 = theta_trunc(RealInterval(q), ComplexRect(2.0, 3.0), 0);
        CHECK(t0.contains(std::complex<double>(1.0, 0.0)));
        CHECK(t0.re().width_d() < 1e-30);
    }

    // real part of theta_4(0.5, 3i) equals 0.0009765625*81 - 0.125*9 + 1
    ComplexRect t4 = theta_trunc(RealInterval(0.5), ComplexRect(0.0, 3.0), 4);
    RealInterval ur = RealInterval(0.0009765625) * 81.0 - RealInterval(0.125) * 9.0 + 1.0;
    CHECK(t4.re().intersects(ur));
    CHECK(t4.re().width_d() < 1e-30);
}

TEST_CASE("tail bound anchors and failure modes")
{
    PrecisionGuard guard(128);
    CHECK(theta_tail_bound(0.5, 4.25, 4).hi_d() < 0.046);
    CHECK(theta_tail_bound(0.6, 3.0, 5).hi_d() < 0.018);
    CHECK(theta_tail_bound(0.75, 2.346, 7).hi_d() < 0.036);
    CHECK(theta_tail_bound(0.9, 0.0, 3).hi().is_zero());

    CHECK_THROWS_AS(theta_tail_bound(0.99, 10.0, 0), TailStall);
    CHECK_THROWS_AS(theta(RealInterval(1.0), ComplexRect(1.0, 0.0)), NonConvergence);
    CHECK_THROWS_AS(theta(RealInterval(-1.0), ComplexRect(1.0, 0.0)), NonConvergence);
}

TEST_CASE("tail soundness against 512-bit truncation differences")
{
    PrecisionGuard guard(128);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> Q(0.05, 0.9), R(0.2, 3.5), A(0.0, 2.0);
    for (int t = 0; t < 60; t++) {
        double q = Q(rng), r = R(rng), ang = A(rng);
        std::complex<double> x = std::polar(r, 3.14159265358979 * ang);
        // k sized to the decreasing-ratio precondition q^{k+2} r < 1
        long k = 2;
        while (std::pow(q, static_cast<double>(k + 2)) * r >= 0.8) k++;
        k += static_cast<long>(t % 12);
        // |theta - theta_k| at high precision
        BigComplex full = oracle::theta(q, x, 3000);
        BigComplex part;
        {
            PrecisionGuard inner(512);
            part = oracle::theta(BigFloat(q), BigComplex(x), static_cast<int>(k));
        }
        BigFloat diff = (full - part).abs();
        BigFloat bound = theta_tail_bound(RealInterval(q), RealInterval(r), k).hi();
        // allow the 512-bit roundoff floor of the oracle difference
        mpfr_add_d(bound.raw(), bound.raw(), 1e-120, MPFR_RNDU);
        CHECK(diff <= bound);
    }
}

TEST_CASE("monotone refinement: larger truncation never widens beyond tail inflation")
{
    PrecisionGuard guard(128);
    RealInterval q(0.6, 0.61);
    ComplexRect x(RealInterval(-1.1, -1.0), RealInterval(1.9, 2.0));
    EvalResult a = theta(q, x, {0.0, 20, 100000});
    EvalResult b = theta(q, x, {0.0, 35, 100000});
    // the extra terms contribute at most the tail budget of the shorter sum,
    // plus outward rounding of the extra interval operations
    BigFloat slack;
    mpfr_mul_ui(slack.raw(), a.tail_bound.hi().raw(), 4, MPFR_RNDU);
    BigFloat ulps;
    mpfr_mul_2si(ulps.raw(), a.enclosure.re().width().raw(), -100, MPFR_RNDU);
    mpfr_add(slack.raw(), slack.raw(), ulps.raw(), MPFR_RNDU);
    BigFloat wa = a.enclosure.re().width(), wb = b.enclosure.re().width();
    mpfr_add(wa.raw(), wa.raw(), slack.raw(), MPFR_RNDU);
    CHECK(wb <= wa);
    wa = a.enclosure.im().width();
    wb = b.enclosure.im().width();
    mpfr_add(wa.raw(), wa.raw(), slack.raw(), MPFR_RNDU);
    CHECK(wb <= wa);
    CHECK(a.enclosure.intersects(b.enclosure));
}

TEST_CASE("G: anchors and domain errors")
{
    PrecisionGuard guard(128);
    // G(0, x) = 1/x
    ComplexRect x(2.0, -1.0);
    EvalResult g0 = laurent_G(RealInterval(0.0), x, {1e-30});
    BigComplex inv;
    {
        PrecisionGuard p(512);
        inv = BigComplex(1.0, 0.0) / BigComplex(std::complex<double>(2.0, -1.0));
    }
    CHECK(encloses(g0.enclosure, inv));

    // |G| >= 1/6 on |x| = 3 (spot q values)
    for (double q : {0.0, 0.3, 0.7, 1.0}) {
        for (double ang : {0.1, 0.5, 0.75, 1.0}) {
            ComplexRect xc = ComplexRect::from_polar_pi(RealInterval(3.0), RealInterval(ang));
            EvalResult g = laurent_G(RealInterval(q), xc, {1e-20});
            CHECK(g.enclosure.abs_bounds().lo_d() >= 1.0 / 6.0 - 1e-15);
        }
    }

    // G(0.8, -5): frozen oracle band; -G > 4/25
    EvalResult g8 = laurent_G(RealInterval(0.8), ComplexRect(-5.0, 0.0), {1e-35});
    CHECK(RealInterval::from_decimal("-0.17170879080774373640431169293772",
                                     "-0.17170879080774373640431169293771")
              .contains(g8.enclosure.re()));
    CHECK((-g8.enclosure.re()).lo_d() > 4.0 / 25.0);
    BigComplex live = oracle::laurent_G(0.8, {-5.0, 0.0});
    CHECK(encloses(g8.enclosure, live));

    CHECK_THROWS_AS(laurent_G(RealInterval(0.5), ComplexRect(0.9, 0.0)), DomainError);
    CHECK_THROWS_AS(laurent_G(RealInterval(0.5), ComplexRect(0.0, 0.0)), DomainError);
}

TEST_CASE("G5 and G*: split anchors")
{
    PrecisionGuard guard(128);
    RealInterval w = RealInterval::w_const();
    // light grid here; the bench runs the full 64x64 version
    for (double q : {0.6, 0.8, 1.0}) {
        for (double t : {0.0, 0.7, 1.4, 2.1}) {
            ComplexRect x(RealInterval(-t), w);
            auto [g5, gs] = G5_and_Gstar(RealInterval(q), x, {1e-20});
            CHECK(gs.abs_bounds().hi_d() < 0.0208);
            CHECK(g5.im().mig().to_double() > 0.147);
            // split sums to G
            EvalResult g = laurent_G(RealInterval(q), x, {1e-20});
            CHECK((g5 + gs).intersects(g.enclosure));
        }
    }
    // G5 at q = 0 is X
    ComplexRect x(RealInterval(-1.0), w);
    auto [g5, gs] = G5_and_Gstar(RealInterval(0.0), x, {1e-25});
    ComplexRect X = x.reciprocal();
    CHECK(g5.intersects(X));
    CHECK(gs.abs_bounds().hi_d() < 1e-20);

    ComplexRect small(0.3, 0.2);
    CHECK_THROWS_AS(G5_and_Gstar(RealInterval(0.5), small), DomainError);
}

TEST_CASE("functional equation theta(q,x) = 1 + q x theta(q, qx)")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> Q(0.02, 0.95), R(0.0, 3.0), A(0.0, 2.0);
    for (int t = 0; t < 100; t++) {
        double q = Q(rng);
        std::complex<double> x = std::polar(R(rng), 3.14159265358979 * A(rng));
        PrecisionGuard guard(128);
        RealInterval qi(q);
        ComplexRect xc(x);
        EvalResult lhs = theta(qi, xc, {1e-25});
        EvalResult inner = theta(qi, ComplexRect(qi) * xc, {1e-25});
        ComplexRect rhs = ComplexRect::one() + ComplexRect(qi) * xc * inner.enclosure;
        REQUIRE(lhs.enclosure.intersects(rhs));
    }
    // midpoint agreement at 256 bits
    PrecisionGuard guard(256);
    RealInterval qi(0.77);
    ComplexRect xc(1.3, -2.2);
    EvalResult lhs = theta(qi, xc, {1e-60});
    EvalResult inner = theta(qi, ComplexRect(qi) * xc, {1e-60});
    ComplexRect rhs = ComplexRect::one() + ComplexRect(qi) * xc * inner.enclosure;
    BigFloat d1, d2;
    mpfr_sub(d1.raw(), lhs.enclosure.re().midpoint().raw(), rhs.re().midpoint().raw(),
             MPFR_RNDN);
    mpfr_sub(d2.raw(), lhs.enclosure.im().midpoint().raw(), rhs.im().midpoint().raw(),
             MPFR_RNDN);
    CHECK(std::fabs(d1.to_double()) < 1e-30);
    CHECK(std::fabs(d2.to_double()) < 1e-30);
}

TEST_CASE("heat-type equation via term-wise differentiated series")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> Q(0.05, 0.9), R(0.3, 2.5), A(0.0, 2.0);
    PrecisionGuard guard(256);
    for (int t = 0; t < 30; t++) {
        RealInterval q(Q(rng));
        ComplexRect x(std::polar(R(rng), 3.14159265358979 * A(rng)));
        EvalResult tq = theta_derivative(q, x, 0, 1, {1e-45});
        EvalResult tx = theta_derivative(q, x, 1, 0, {1e-45});
        EvalResult txx = theta_derivative(q, x, 2, 0, {1e-45});
        ComplexRect resid = RealInterval(2.0) * ComplexRect(q) * tq.enclosure -
                            RealInterval(2.0) * x * tx.enclosure - x * x * txx.enclosure;
        REQUIRE(resid.contains(std::complex<double>(0.0, 0.0)));
        CHECK(resid.abs_bounds().hi_d() < 1e-20);
    }
}

TEST_CASE("imaginary-axis identity")
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> Q(0.05, 0.9), Y(0.1, 2.5);
    PrecisionGuard guard(128);
    for (int t = 0; t < 100; t++) {
        double q = Q(rng), y = Y(rng);
        RealInterval qi(q), yi(y);
        EvalResult lhs = theta(qi, ComplexRect(RealInterval(0.0), yi), {1e-25});
        RealInterval q4 = qi.pow_int(4);
        EvalResult a = theta(q4, ComplexRect(-(yi.sq() / qi)), {1e-25});
        EvalResult b = theta(q4, ComplexRect(-(qi * yi.sq())), {1e-25});
        ComplexRect rhs = a.enclosure + ComplexRect(RealInterval(0.0), qi * yi) * b.enclosure;
        REQUIRE(lhs.enclosure.intersects(rhs));
    }
}
