// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "ptheta/zeros.hpp"

using namespace ptheta;

TEST_CASE("find_zero anchors")
{
    ZeroFix a = find_zero(-0.7, {-2.7, 0.0});
    CHECK(std::fabs(a.z.real() + 2.69998) < 1e-4);
    CHECK(std::fabs(a.z.imag()) < 1e-12);
    CHECK(a.residual < 1e-30);

    ZeroFix b = find_zero(0.98, {1.2, 0.5});
    CHECK(std::abs(b.z - std::complex<double>(1.209, 0.511)) < 1e-2);
    CHECK(b.residual < 1e-30);

    ZeroFix c = find_zero(0.726475, {0.0, 2.9});
    CHECK(std::fabs(c.z.imag() - 2.9083) < 1e-3);
    CHECK(std::fabs(c.z.real()) < 1e-3);

    // theta(0, .) == 1 has no zeros and a vanishing derivative
    CHECK_THROWS_AS(find_zero(0.0, {1.0, 0.0}), NoConvergence);
}

TEST_CASE("find_zero matches the oracle grid sweep (q = 0.1)")
{
    ZeroFix z = find_zero(0.1, {-10.5, 0.0});
    auto zeros = oracle::real_zeros_log_grid(0.1, -1e6, -5.0, 400);
    REQUIRE(!zeros.empty());
    // the oracle zero nearest the seed
    double best = 1e300, at = 0.0;
    for (const auto& zz : zeros) {
        double v = zz.to_double();
        if (std::fabs(v + 10.5) < best) {
            best = std::fabs(v + 10.5);
            at = v;
        }
    }
    CHECK(std::fabs(z.z.real() - at) < 1e-9);
    CHECK(std::fabs(at + 11.2518012) < 1e-6);
}

TEST_CASE("count_zeros anchors")
{
    CHECK(count_zeros(0.5, {-2.1, 0.0, -2.1, 2.1}) == 0);
    CHECK(count_zeros(0.726475, {-0.5, 0.5, 2.5, 3.3}) == 1);
    CHECK(count_zeros(0.3092, {-8.2, -6.8, -0.5, 0.5}) == 2);
}

TEST_CASE("count_zeros: boundary inflation keeps the count usable")
{
    // place an edge through the immediate vicinity of a zero: the retry logic
    // inflates the box away from it
    ZeroFix z = find_zero(0.726475, {0.0, 2.9});
    Box box{z.z.real() - 0.4, z.z.real() + 0.4, z.z.imag() - 0.4, z.z.imag()};
    int n = count_zeros(0.726475, box);
    CHECK(n >= 1);
}

TEST_CASE("trace terminates at the first collision")
{
    ZeroTrajectory t = trace_branch(0.25, 0.32, {-6.2, 0.0});
    CHECK(t.step_underflow);
    REQUIRE(!t.samples.empty());
    CHECK(std::fabs(t.samples.back().q - 0.3092) < 1.5e-3);
    CHECK(std::fabs(t.samples.back().z.real() + 7.5032) < 0.15);
    for (size_t i = 1; i < t.samples.size(); i++) {
        CHECK(t.samples[i].q > t.samples[i - 1].q);
    }
}

TEST_CASE("trace of the deep real branch stays real and left of -5")
{
    ZeroFix seed = find_zero(0.02, {-51.0, 0.0});
    ZeroTrajectory t = trace_branch(0.02, 0.3, seed.z);
    CHECK(!t.step_underflow);
    CHECK(std::fabs(t.samples.back().q - 0.3) < 1e-9);
    for (const auto& s : t.samples) {
        CHECK(std::fabs(s.z.imag()) < 1e-9);
        CHECK(s.z.real() < -5.0);
    }
}

TEST_CASE("trace across |z| = 2.9 agrees with independent refinement")
{
    ZeroFix seed = find_zero(0.72, {0.0, 2.95});
    ZeroTrajectory t = trace_branch(0.72, 0.73, seed.z, {5e-4, 1e-6, 5e-4, 1.0, 3.0});
    CHECK(!t.step_underflow);
    REQUIRE(t.samples.size() >= 20);
    size_t step = t.samples.size() / 20;
    for (size_t i = 0; i < t.samples.size(); i += step) {
        const auto& s = t.samples[i];
        BigComplex ref = oracle::newton(s.q, s.z);
        CHECK(std::abs(s.z - ref.to_complex()) < 1e-8);
    }
}

TEST_CASE("trajectory CSV format")
{
    ZeroTrajectory t = trace_branch(0.72, 0.722, {0.0, 2.95}, {1e-3, 1e-6, 1e-3, 1.0, 3.0}, 7);
    std::string csv = t.to_csv();
    CHECK(csv.rfind("branch,q,re,im,residual\n", 0) == 0);
    CHECK(csv.find("\n7,") != std::string::npos);
    // one header plus one line per sample
    size_t lines = static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n'));
    CHECK(lines == t.samples.size() + 1);
}

TEST_CASE("truncation roots: anchors")
{
    TruncZeros tz = trunc_zeros(-0.96, 100);
    REQUIRE(tz.roots.size() == 100);
    CHECK(tz.max_scaled_residual < 1e-40);
    // right-half-plane pair 0.824...+-1.226...i (modulus 1.478...) and
    // left-half-plane pair -0.769...+-1.255...i (modulus 1.473...)
    bool f1 = false, f2 = false;
    for (const auto& r : tz.roots) {
        std::complex<double> z = r.to_complex();
        if (std::fabs(z.real() - 0.824) < 1e-3 && std::fabs(z.imag() - 1.226) < 1e-3) {
            f1 = true;
            CHECK(std::fabs(std::abs(z) - 1.478) < 1e-3);
        }
        if (std::fabs(z.real() + 0.769) < 1e-3 && std::fabs(z.imag() - 1.255) < 1e-3) {
            f2 = true;
            CHECK(std::fabs(std::abs(z) - 1.473) < 1e-3);
        }
    }
    CHECK(f1);
    CHECK(f2);

    // conjugate closure
    for (const auto& r : tz.roots) {
        std::complex<double> z = r.to_complex();
        if (std::fabs(z.imag()) < 1e-30) continue;
        bool has_conj = false;
        for (const auto& r2 : tz.roots) {
            if (std::abs(r2.to_complex() - std::conj(z)) < 1e-9 * (1.0 + std::abs(z))) {
                has_conj = true;
            }
        }
        CHECK(has_conj);
    }
}

TEST_CASE("truncation roots: q = 0.3 all real, negative, distinct, < -5")
{
    TruncZeros tz = trunc_zeros(0.3, 60);
    REQUIRE(tz.roots.size() == 60);
    double prev = 1.0;
    for (size_t i = tz.roots.size(); i-- > 0;) {
        std::complex<double> z = tz.roots[i].to_complex();
        double scale = std::fabs(z.real()) + 1.0;
        CHECK(std::fabs(z.imag()) < 1e-25 * scale);
        CHECK(z.real() < -5.0);
        CHECK(z.real() < prev - 1e-9); // distinct, descending when read right-to-left
        prev = z.real();
    }
}

TEST_CASE("truncation roots: degenerate cases")
{
    TruncZeros t0 = trunc_zeros(0.0, 50);
    CHECK(t0.degenerate);
    CHECK(t0.roots.empty());
    TruncZeros t1 = trunc_zeros(0.5, 0);
    CHECK(t1.degenerate);
    CHECK_THROWS_AS(trunc_zeros(0.5, 501), std::invalid_argument);
}

TEST_CASE("leftmost zero ratio approaches 1/q at small q")
{
    TruncZeros tz = trunc_zeros(0.05, 30);
    REQUIRE(tz.roots.size() == 30);
    // roots sorted by real part: the two leftmost are the first two
    double z0 = tz.roots[0].re.to_double();
    double z1 = tz.roots[1].re.to_double();
    double ratio = z0 / z1;
    CHECK(ratio > 20.0 * 0.8);
    CHECK(ratio < 20.0 * 1.2);
}

TEST_CASE("argument principle agrees with truncation-root counts")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> Q(0.05, 0.9), CX(-11.0, 1.0), CY(-3.0, 3.0),
        W(0.6, 2.4);
    int done = 0;
    while (done < 20) {
        double q = Q(rng);
        double cx = CX(rng), cy = CY(rng), wx = W(rng), wy = W(rng);
        Box box{cx - wx, cx + wx, cy - wy, cy + wy};
        double r = 0.0;
        for (double xre : {box.re_lo, box.re_hi})
            for (double xim : {box.im_lo, box.im_hi})
                r = std::max(r, std::abs(std::complex<double>(xre, xim)));
        // truncation degree with tail below 1e-30 on the box
        long N = 10;
        while (N < 320) {
            double lt = 0.5 * static_cast<double>(N) * static_cast<double>(N + 1) *
                            std::log(q) +
                        static_cast<double>(N) * std::log(r + 1e-9);
            if (lt < std::log(1e-30)) break;
            N += 10;
        }
        if (N >= 320) continue;
        int inside = 0;
        TruncZeros tz = trunc_zeros(q, N);
        for (const auto& root : tz.roots) {
            std::complex<double> z = root.to_complex();
            if (z.real() > box.re_lo && z.real() < box.re_hi && z.imag() > box.im_lo &&
                z.imag() < box.im_hi) {
                inside++;
            }
        }
        int counted;
        try {
            counted = count_zeros(q, box);
        } catch (const BoundaryZero&) {
            continue; // a zero too close to the contour: resample
        }
        CHECK(counted == inside);
        done++;
    }
}

TEST_CASE("no traced zero enters the unit disk")
{
    // complex branch around q ~ 0.726 and the real branch from small q
    ZeroFix seed = find_zero(0.7, {0.0, 3.05});
    ZeroTrajectory t = trace_branch(0.7, 0.75, seed.z);
    for (const auto& s : t.samples) CHECK(std::abs(s.z) > 1.0);
    ZeroFix seed2 = find_zero(0.9, {1.35, 0.9});
    ZeroTrajectory t2 = trace_branch(0.9, 0.95, seed2.z);
    for (const auto& s : t2.samples) CHECK(std::abs(s.z) > 1.0);
}

TEST_CASE("spectral values: first and fourth")
{
    SpectralValue s1 = find_spectral(1, 0.28, 0.33);
    CHECK(std::fabs(s1.q_tilde.to_double() - 0.309249) < 1e-6);
    CHECK(std::fabs(s1.z_tilde.re.to_double() + 7.5032) < 1e-3);
    CHECK(s1.res_theta < 1e-12);
    CHECK(s1.res_dtheta < 1e-12);

    SpectralValue s4 = find_spectral(4, 0.69, 0.71);
    CHECK(std::fabs(s4.q_tilde.to_double() - 0.701265) < 1e-6);
    CHECK(s4.j == 4);
}

TEST_CASE("spectral bracketing failures")
{
    CHECK_THROWS_AS(find_spectral(1, 0.40, 0.45), BracketingFailure);
    CHECK_THROWS_AS(find_spectral(1, 0.30, 0.525), BracketingFailure);
}

TEST_CASE("complex q (best effort): a zero of modulus below 1 exists")
{
    // for q = rho e^{3 pi i/4} with rho close to 1 a zero sits near
    // 0.34 + 0.46i -- inside the unit disk, unlike anything with real q
    std::complex<double> q = std::polar(0.99, 3.0 * 3.14159265358979323846 / 4.0);
    std::complex<double> z(0.33, 0.44);
    for (int it = 0; it < 200; it++) {
        std::complex<double> f = theta_point(q, z);
        std::complex<double> fp = (theta_point(q, z + std::complex<double>(1e-9, 0.0)) -
                                   theta_point(q, z - std::complex<double>(1e-9, 0.0))) /
                                  std::complex<double>(2e-9, 0.0);
        std::complex<double> dz = f / fp;
        z -= dz;
        if (std::abs(dz) < 1e-12 * (1.0 + std::abs(z))) break;
    }
    CHECK(std::abs(theta_point(q, z)) < 1e-12);
    CHECK(std::abs(z) < 1.0);
    CHECK(std::abs(z - std::complex<double>(0.3439, 0.4568)) < 1e-3);
}
