// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.

#ifndef PTHETA_PRECISION_HPP
#define PTHETA_PRECISION_HPP

#include <atomic>
#include <stdexcept>

#include <mpfr.h>

namespace ptheta {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kMinPrecision = 64;

namespace detail {
inline std::atomic<mpfr_prec_t>& precision_state()
{
    static std::atomic<mpfr_prec_t> bits{kDefaultPrecision};
    return bits;
}
} // namespace detail

/// Working mantissa precision in bits. Every interval operation snapshots this
/// at the moment it runs; results carry the precision they were computed at.
inline mpfr_prec_t working_precision()
{
    return detail::precision_state().load(std::memory_order_relaxed);
}

inline void set_working_precision(mpfr_prec_t bits)
{
    if (bits < kMinPrecision || bits > MPFR_PREC_MAX) {
        throw std::invalid_argument("working precision must be >= 64 bits");
    }
    detail::precision_state().store(bits, std::memory_order_relaxed);
}

/// Scoped precision override.
class PrecisionGuard {
public:
    explicit PrecisionGuard(mpfr_prec_t bits) : saved_(working_precision())
    {
        set_working_precision(bits);
    }
    ~PrecisionGuard() { detail::precision_state().store(saved_, std::memory_order_relaxed); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    mpfr_prec_t saved_;
};

} // namespace ptheta

#endif
