// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
//
// Piecewise boundary paths in the x-plane. Every piece is parametrized over
// s in [0, 1], so certificate cells carry dyadic parameter boxes that bisect
// exactly. The canonical paths are
//
//   dD    : C2 (arc, arg/pi in [3/4, 1]) + C3 (arc, [1, 5/4])
//           + S+ (segment [-w+wi, wi], i.e. x = -t + wi with t = w(1-s))
//           + S- (segment [-w-wi, -wi]) + Sv (segment [-wi, wi]),
//   dDelta: the border of the rectangle [-3, 0] x [-3i, 3i],
//   real segments [a, b] on the real axis.

#ifndef PTHETA_BOUNDARY_HPP
#define PTHETA_BOUNDARY_HPP

#include <string>
#include <vector>

#include "ptheta/complex_rect.hpp"

namespace ptheta {

struct PathPiece {
    enum class Kind { Arc, Segment };

    std::string id;
    Kind kind = Kind::Segment;
    // Arc: center 0, radius r, angle (in units of pi) phi0 + s*(phi1 - phi0)
    double radius = 0.0;
    double phi0_pi = 0.0, phi1_pi = 0.0;
    // Segment: x(s) = p0 + s*(p1 - p0)
    ComplexRect p0, p1;
    bool real_segment = false; ///< both endpoints on the real axis

    /// Rectangle enclosing { x(s) : s in s_box }.
    ComplexRect cover(const RealInterval& s_box) const
    {
        if (kind == Kind::Arc) {
            RealInterval phi = RealInterval(phi0_pi) +
                               s_box * (RealInterval(phi1_pi) - RealInterval(phi0_pi));
            return ComplexRect::from_polar_pi(RealInterval(radius), phi);
        }
        ComplexRect d = p1 - p0;
        return p0 + ComplexRect(s_box * d.re(), s_box * d.im());
    }

    std::complex<double> point(double s) const
    {
        if (kind == Kind::Arc) {
            double phi = (phi0_pi + s * (phi1_pi - phi0_pi)) * 3.14159265358979323846;
            return {radius * std::cos(phi), radius * std::sin(phi)};
        }
        std::complex<double> a = p0.mid(), b = p1.mid();
        return a + s * (b - a);
    }
};

struct BoundaryPath {
    std::string region;
    std::vector<PathPiece> pieces;

    /// Border of D = { |x| <= 3, Re x <= 0, |Im x| <= w }, w = 3/sqrt(2).
    static BoundaryPath boundary_D()
    {
        RealInterval w = RealInterval::w_const();
        RealInterval zero(0.0);
        BoundaryPath p;
        p.region = "D";
        PathPiece c2{"C2", PathPiece::Kind::Arc, 3.0, 0.75, 1.0, {}, {}, false};
        PathPiece c3{"C3", PathPiece::Kind::Arc, 3.0, 1.0, 1.25, {}, {}, false};
        // S+ parametrized as x = -t + wi with t = w(1-s): s=0 at -w+wi, s=1 at wi
        PathPiece sp{"S+", PathPiece::Kind::Segment, 0, 0, 0,
                     ComplexRect(-w, w), ComplexRect(zero, w), false};
        PathPiece sm{"S-", PathPiece::Kind::Segment, 0, 0, 0,
                     ComplexRect(-w, -w), ComplexRect(zero, -w), false};
        PathPiece sv{"Sv", PathPiece::Kind::Segment, 0, 0, 0,
                     ComplexRect(zero, -w), ComplexRect(zero, w), false};
        p.pieces = {c2, c3, sp, sm, sv};
        return p;
    }

    /// Border of the rectangle Delta = [-3, 0] x [-3, 3].
    static BoundaryPath boundary_Delta()
    {
        BoundaryPath p;
        p.region = "Delta";
        auto seg = [](const char* id, double ar, double ai, double br, double bi) {
            return PathPiece{id, PathPiece::Kind::Segment, 0, 0, 0,
                             ComplexRect(ar, ai), ComplexRect(br, bi), false};
        };
        p.pieces = {seg("left", -3.0, -3.0, -3.0, 3.0),
                    seg("top", -3.0, 3.0, 0.0, 3.0),
                    seg("right", 0.0, 3.0, 0.0, -3.0),
                    seg("bottom", 0.0, -3.0, -3.0, -3.0)};
        return p;
    }

    /// Real segment [a, b], a <= b.
    static BoundaryPath real_segment(double a, double b)
    {
        if (a > b) throw std::invalid_argument("real_segment: a > b");
        BoundaryPath p;
        char buf[96];
        std::snprintf(buf, sizeof buf, "segment:%.17g:%.17g", a, b);
        p.region = buf;
        PathPiece s{"seg", PathPiece::Kind::Segment, 0, 0, 0,
                    ComplexRect(a, 0.0), ComplexRect(b, 0.0), true};
        p.pieces = {s};
        return p;
    }

    /// Reconstruct the canonical path named by a certificate's region string.
    static BoundaryPath from_region(const std::string& region);
};

inline BoundaryPath BoundaryPath::from_region(const std::string& region)
{
    if (region == "D") return boundary_D();
    if (region == "Delta") return boundary_Delta();
    const std::string seg = "segment:", pos = "positive-segment:";
    auto parse_ab = [](const std::string& s) {
        auto colon = s.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad segment region");
        double a = std::stod(s.substr(0, colon));
        double b = std::stod(s.substr(colon + 1));
        return std::pair<double, double>{a, b};
    };
    if (region.rfind(seg, 0) == 0) {
        auto [a, b] = parse_ab(region.substr(seg.size()));
        return real_segment(a, b);
    }
    if (region.rfind(pos, 0) == 0) {
        auto [a, b] = parse_ab(region.substr(pos.size()));
        BoundaryPath p = real_segment(a, b);
        p.region = region;
        return p;
    }
    throw std::invalid_argument("unknown region '" + region + "'");
}

} // namespace ptheta

#endif
