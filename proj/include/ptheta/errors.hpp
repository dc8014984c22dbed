// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.

#ifndef PTHETA_ERRORS_HPP
#define PTHETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptheta {

/// Input outside the mathematical domain of an operation (|x| too small for a
/// Laurent series, division by an interval containing zero, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A series cannot converge for the given parameters (|q| >= 1).
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// No truncation index satisfying the tail precondition was found below the cap.
struct TailStall : std::runtime_error {
    explicit TailStall(const std::string& what) : std::runtime_error(what) {}
};

/// Interval evaluation could not exclude a zero on a contour after retries.
struct BoundaryZero : std::runtime_error {
    explicit BoundaryZero(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative solve (Newton, Aberth, continuation) failed to converge.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// A requested search range does not bracket the expected event.
struct BracketingFailure : std::runtime_error {
    explicit BracketingFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Continuation step size fell below the floor (expected near branch collisions).
struct StepUnderflow : std::runtime_error {
    explicit StepUnderflow(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ptheta

#endif
