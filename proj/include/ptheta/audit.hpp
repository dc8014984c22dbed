// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
//
// Certificate audit: re-validates a certificate entirely from its JSON file.
// Checks that (a) the status is Certified with no failure entries, (b) per
// piece, the cells tile the full q-range x [0,1] parameter domain with no
// gaps (at the resolution of the printed 25-digit decimal endpoints), and
// (c) every cell's lower bound recomputes as positive with the recorded
// method at the recorded precision.
//
// The parser reads the certificate grammar directly so endpoint decimals
// reach MPFR without passing through double.

#ifndef PTHETA_AUDIT_HPP
#define PTHETA_AUDIT_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ptheta/certify.hpp"

namespace ptheta {

namespace detail {

struct ParsedCell {
    std::string piece;
    RealInterval q_box, s_box;
    std::string method;
    std::string lb;
};

// Minimal strict reader for the certificate JSON grammar. Number tokens are
// captured as raw text.
class CertReader {
public:
    explicit CertReader(const std::string& text) : s_(text) {}

    void ws()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) i_++;
    }
    void expect(char c)
    {
        ws();
        if (i_ >= s_.size() || s_[i_] != c) fail();
        i_++;
    }
    bool peek(char c)
    {
        ws();
        return i_ < s_.size() && s_[i_] == c;
    }
    void key(const char* name)
    {
        std::string k = string_();
        if (k != name) fail();
        expect(':');
    }
    std::string string_()
    {
        expect('"');
        std::string out;
        while (i_ < s_.size() && s_[i_] != '"') {
            if (s_[i_] == '\\') fail(); // escapes never occur in this grammar
            out.push_back(s_[i_++]);
        }
        expect('"');
        return out;
    }
    std::string number_()
    {
        ws();
        size_t start = i_;
        while (i_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-' ||
                s_[i_] == '+' || s_[i_] == '.' || s_[i_] == 'e' || s_[i_] == 'E')) {
            i_++;
        }
        if (i_ == start) fail();
        return s_.substr(start, i_ - start);
    }
    RealInterval interval_()
    {
        expect('[');
        std::string lo = number_();
        expect(',');
        std::string hi = number_();
        expect(']');
        return RealInterval::from_decimal(lo, hi);
    }
    void end()
    {
        ws();
        if (i_ != s_.size()) fail();
    }
    [[noreturn]] void fail() { throw std::invalid_argument("certificate parse error"); }

private:
    const std::string& s_;
    size_t i_ = 0;
};

struct ParsedCert {
    std::string region;
    RealInterval q_range{0.0, 1.0};
    long precision_bits = 0;
    std::string status;
    std::vector<ParsedCell> cells;
    size_t failure_count = 0;
};

inline ParsedCert parse_certificate(const std::string& text)
{
    CertReader r(text);
    ParsedCert out;
    r.expect('{');
    r.key("version");
    if (r.number_() != "1") r.fail();
    r.expect(',');
    r.key("region");
    out.region = r.string_();
    r.expect(',');
    r.key("q");
    out.q_range = r.interval_();
    r.expect(',');
    r.key("precision_bits");
    out.precision_bits = std::stol(r.number_());
    r.expect(',');
    r.key("status");
    out.status = r.string_();
    r.expect(',');
    r.key("cells");
    r.expect('[');
    if (!r.peek(']')) {
        for (;;) {
            ParsedCell c;
            r.expect('{');
            r.key("piece");
            c.piece = r.string_();
            r.expect(',');
            r.key("q");
            c.q_box = r.interval_();
            r.expect(',');
            r.key("s");
            c.s_box = r.interval_();
            r.expect(',');
            r.key("lb");
            c.lb = r.string_();
            r.expect(',');
            r.key("method");
            c.method = r.string_();
            r.expect('}');
            out.cells.push_back(std::move(c));
            if (r.peek(',')) {
                r.expect(',');
                continue;
            }
            break;
        }
    }
    r.expect(']');
    r.expect(',');
    r.key("failures");
    r.expect('[');
    if (!r.peek(']')) {
        for (;;) {
            r.expect('{');
            r.key("piece");
            r.string_();
            r.expect(',');
            r.key("q");
            r.interval_();
            r.expect(',');
            r.key("s");
            r.interval_();
            r.expect(',');
            r.key("reason");
            r.string_();
            r.expect('}');
            out.failure_count++;
            if (r.peek(',')) {
                r.expect(',');
                continue;
            }
            break;
        }
    }
    r.expect(']');
    r.expect('}');
    r.ws();
    return out;
}

// Gap-free cover of [dom_lo, dom_hi] x [0,1] by the cells' (q, s) boxes,
// checked with a sweep over elementary q-strips. The s endpoints are dyadic
// with at most ~50 significant bits, so their double images are exact.
inline bool cells_tile(const std::vector<ParsedCell>& cells, const BigFloat& dom_lo,
                       const BigFloat& dom_hi)
{
    if (mpfr_cmp(dom_lo.raw(), dom_hi.raw()) >= 0) return false;
    if (cells.empty()) return false;
    std::vector<BigFloat> pts{dom_lo, dom_hi};
    for (const auto& c : cells) {
        pts.push_back(c.q_box.lo());
        pts.push_back(c.q_box.hi());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const BigFloat& a, const BigFloat& b) { return a == b; }),
              pts.end());

    std::vector<size_t> by_lo(cells.size()), by_hi(cells.size());
    for (size_t i = 0; i < cells.size(); i++) by_lo[i] = by_hi[i] = i;
    std::sort(by_lo.begin(), by_lo.end(), [&](size_t a, size_t b) {
        return cells[a].q_box.lo() < cells[b].q_box.lo();
    });
    std::sort(by_hi.begin(), by_hi.end(), [&](size_t a, size_t b) {
        return cells[a].q_box.hi() < cells[b].q_box.hi();
    });

    std::vector<size_t> active;
    size_t next_lo = 0, next_hi = 0;
    for (size_t e = 0; e + 1 < pts.size(); e++) {
        const BigFloat& a = pts[e];
        const BigFloat& b = pts[e + 1];
        if (mpfr_cmp(a.raw(), dom_hi.raw()) >= 0) break;
        while (next_lo < by_lo.size() && !(cells[by_lo[next_lo]].q_box.lo() > a)) {
            active.push_back(by_lo[next_lo++]);
        }
        while (next_hi < by_hi.size() && !(cells[by_hi[next_hi]].q_box.hi() > a)) {
            size_t dead = by_hi[next_hi++];
            active.erase(std::remove(active.begin(), active.end(), dead), active.end());
        }
        if (mpfr_cmp(b.raw(), dom_lo.raw()) <= 0) continue;
        std::vector<std::pair<double, double>> segs;
        segs.reserve(active.size());
        for (size_t idx : active) {
            const auto& c = cells[idx];
            if (c.q_box.lo() > a || c.q_box.hi() < b) continue;
            segs.emplace_back(c.s_box.lo_d(), c.s_box.hi_d());
        }
        std::sort(segs.begin(), segs.end());
        double cursor = 0.0;
        bool done = false;
        for (const auto& [slo, shi] : segs) {
            if (slo > cursor) return false; // gap
            cursor = std::max(cursor, shi);
            if (cursor >= 1.0) {
                done = true;
                break;
            }
        }
        if (!done) return false;
    }
    return true;
}

// Recompute a parsed cell's lower bound with its recorded method.
inline bool recompute_positive(const PathPiece& piece, const ParsedCell& c, bool positive)
{
    RealInterval sb = c.s_box.is_point() ? c.s_box.widened_ulp() : c.s_box;
    ComplexRect x = piece.cover(sb);
    CertConfig defaults;
    SeriesTarget st{defaults.eval_tol, -1, 5000};
    ProductTarget pt{defaults.product_tol, 10000};
    BigFloat lb;
    if (c.method == "direct") {
        EvalResult th = theta(c.q_box, x, st);
        if (positive && piece.real_segment) {
            lb = th.enclosure.re().lo();
        } else if (piece.real_segment) {
            lb = th.enclosure.re().mig();
        } else {
            lb = th.enclosure.abs_lo();
        }
    } else if (c.method == "split") {
        EvalResult g = laurent_G(c.q_box, x, st);
        ProductResult ts = theta_star(c.q_box, x, pt);
        BigFloat th_hi = ts.enclosure.abs_hi();
        if (positive && piece.real_segment) {
            BigFloat negg_lo;
            mpfr_neg(negg_lo.raw(), g.enclosure.re().hi().raw(), MPFR_RNDD);
            mpfr_sub(lb.raw(), negg_lo.raw(), th_hi.raw(), MPFR_RNDD);
        } else {
            BigFloat g_lo = g.enclosure.abs_lo();
            mpfr_sub(lb.raw(), g_lo.raw(), th_hi.raw(), MPFR_RNDD);
        }
    } else {
        return false;
    }
    return lb.sign() > 0;
}

} // namespace detail

/// Validate a certificate JSON document. Returns false on any defect; never
/// throws for malformed input.
inline bool audit_json(const std::string& json_text)
{
    try {
        detail::ParsedCert pc = detail::parse_certificate(json_text);
        if (pc.status != "certified" || pc.failure_count != 0) return false;
        bool positive = pc.region.rfind("positive-", 0) == 0;
        BoundaryPath path = BoundaryPath::from_region(pc.region);
        if (pc.precision_bits < kMinPrecision) return false;
        PrecisionGuard guard(static_cast<mpfr_prec_t>(pc.precision_bits));

        std::map<std::string, std::vector<detail::ParsedCell>> by_piece;
        for (auto& c : pc.cells) by_piece[c.piece].push_back(std::move(c));

        // every piece covered, every cell's piece known
        for (const auto& [id, v] : by_piece) {
            (void)v;
            bool known = false;
            for (const auto& piece : path.pieces) known = known || piece.id == id;
            if (!known) return false;
        }
        for (const auto& piece : path.pieces) {
            auto it = by_piece.find(piece.id);
            if (it == by_piece.end()) return false;
            if (!detail::cells_tile(it->second, pc.q_range.lo(), pc.q_range.hi())) {
                return false;
            }
            for (const auto& c : it->second) {
                BigFloat recorded = BigFloat::from_str(c.lb, MPFR_RNDN);
                if (!(recorded.sign() > 0)) return false;
                if (!detail::recompute_positive(piece, c, positive)) return false;
            }
        }
        return true;
    } catch (...) {
        return false;
    }
}

/// Audit a certificate through its serialized form (what a verifier sees).
inline bool audit(const Certificate& cert) { return audit_json(cert.to_json()); }

inline bool audit_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    std::ostringstream ss;
    ss << f.rdbuf();
    return audit_json(ss.str());
}

} // namespace ptheta

#endif
