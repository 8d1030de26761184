#pragma once

#include <cstddef>

#include "gsc/numeric.hpp"

namespace gsc {

/// Accuracy request shared by every evaluation.
///
/// `digits` is the number of correct decimal digits asked for; arithmetic
/// runs at `digits + guard`. Euler–Maclaurin parameters of 0 mean "choose
/// automatically"; nonzero values are used as given and a PrecisionError is
/// raised if they cannot meet the target.
struct PrecisionContext {
  unsigned digits = 50;
  unsigned guard = 20;
  std::size_t em_terms = 0;
  std::size_t em_bernoulli = 0;

  static PrecisionContext with_digits(unsigned digits);

  /// Throws DomainError unless digits >= 10 and guard >= 20.
  void validate() const;

  unsigned working_digits() const { return digits + guard; }

  /// Truncation target for series: 10^-(digits + guard/2).
  Real truncation_tolerance() const;

  /// Equality tolerance for predicates on computed values, 10^-(digits + guard/2).
  Real equality_tolerance() const;

  /// Same request with `extra` more digits (guard unchanged).
  PrecisionContext raised(unsigned extra) const;
};

}  // namespace gsc
