// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.

#ifndef PTHETA_BIG_FLOAT_HPP
#define PTHETA_BIG_FLOAT_HPP

#include <cstdio>
#include <string>
#include <utility>

#include <mpfr.h>

#include "ptheta/precision.hpp"

namespace ptheta {

/// RAII value wrapper around mpfr_t. The precision is fixed at construction
/// (defaulting to the global working precision); assignment keeps the
/// destination precision and rounds.
class BigFloat {
public:
    BigFloat() : BigFloat(working_precision()) {}

    explicit BigFloat(mpfr_prec_t prec)
    {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(double d, mpfr_rnd_t rnd = MPFR_RNDN, mpfr_prec_t prec = 0)
    {
        mpfr_init2(v_, prec ? prec : working_precision());
        mpfr_set_d(v_, d, rnd);
    }

    BigFloat(const BigFloat& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept
    {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o)
    {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(double d) const { return mpfr_cmp_d(v_, d); }

    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
    bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
    bool operator>=(const BigFloat& o) const { return cmp(o) >= 0; }
    bool operator==(const BigFloat& o) const { return cmp(o) == 0; }

    static BigFloat from_str(const std::string& s, mpfr_rnd_t rnd = MPFR_RNDN,
                             mpfr_prec_t prec = 0)
    {
        BigFloat r(prec ? prec : working_precision());
        mpfr_set_str(r.v_, s.c_str(), 10, rnd);
        return r;
    }

    /// Decimal string with `digits` significant digits, rounded as requested.
    std::string str(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const
    {
        char fmt[32];
        std::snprintf(fmt, sizeof fmt, "%%.%dR*e", digits - 1);
        char buf[512];
        mpfr_snprintf(buf, sizeof buf, fmt, rnd, v_);
        return buf;
    }

private:
    mpfr_t v_;
};

} // namespace ptheta

#endif
