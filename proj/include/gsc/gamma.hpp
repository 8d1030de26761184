#pragma once

#include "gsc/numeric.hpp"
#include "gsc/precision.hpp"

namespace gsc {

// Gamma-function values from argument raising plus the Stirling series.
// Deliberately independent of the Hurwitz zeta engine so that identities
// relating zeta derivatives and log-Gamma values are tested non-circularly.

/// log Gamma(x) for rational x > 0.
Real log_gamma(const Rational& x, const PrecisionContext& ctx);
/// log Gamma(x) for real x > 0 (the binary value of x is taken exactly).
Real log_gamma(const Real& x, const PrecisionContext& ctx);

/// Gamma(z) for complex z away from the poles at 0, -1, -2, ...
Complex gamma(const Complex& z, const PrecisionContext& ctx);

/// Exact binary value of a Real.
Rational exact_rational(const Real& x);

}  // namespace gsc
