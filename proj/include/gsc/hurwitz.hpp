#pragma once

#include <cstddef>

#include "gsc/numeric.hpp"
#include "gsc/precision.hpp"
#include "gsc/series.hpp"

namespace gsc {

/// Highest s-derivative order the engine supports.
inline constexpr std::size_t kMaxDerivativeOrder = 8;

/// zeta(s, x) = sum_{n>=0} (n+x)^{-s}, continued to s != 1, for 0 < x <= 1.
/// Throws PoleError at s = 1 and DomainError for x outside (0, 1].
Complex hurwitz_zeta(const Complex& s, const Rational& x, const PrecisionContext& ctx);
Complex hurwitz_zeta(const Complex& s, const Real& x, const PrecisionContext& ctx);

/// k-th derivative in s, 0 <= k <= 8.
Complex hurwitz_zeta_deriv(const Complex& s, const Rational& x, std::size_t k,
                           const PrecisionContext& ctx);
Complex hurwitz_zeta_deriv(const Complex& s, const Real& x, std::size_t k,
                           const PrecisionContext& ctx);

/// Taylor jet of zeta(s0 + eps, x) to the given order. s0 must not be 1.
Jet hurwitz_jet(const Complex& s0, const Rational& x, std::size_t order,
                const PrecisionContext& ctx);

/// Taylor jet of zeta(1 + eps, x) - 1/eps, the part of the Laurent
/// expansion at the pole that remains after removing the principal part.
Jet hurwitz_regular_jet(const Rational& x, std::size_t order, const PrecisionContext& ctx);

Complex riemann_zeta(const Complex& s, const PrecisionContext& ctx);

/// psi(x) for 0 < x <= 1, read off the constant term at the pole.
Real digamma(const Rational& x, const PrecisionContext& ctx);

/// Euler's constant as -psi(1).
Real euler_gamma(const PrecisionContext& ctx);

}  // namespace gsc
