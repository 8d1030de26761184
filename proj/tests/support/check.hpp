#pragma once

#include <string>

#include "doctest.h"

#include "gsc/numeric.hpp"

namespace check {

using gsc::Complex;
using gsc::Real;

/// 10^{-n}
inline Real tol(long n) { return gsc::pow10(-n); }

inline std::string sci(const Real& x) { return gsc::to_scientific(x, 4); }

}  // namespace check

// |a - b| < bound, with the residual in the failure message.
#define CHECK_CLOSE(a, b, bound)                                              \
  do {                                                                        \
    const auto gsc_check_residual_ = gsc::abs(gsc::Complex(a) - gsc::Complex(b)); \
    INFO("residual " << check::sci(gsc_check_residual_));                     \
    CHECK(gsc_check_residual_ < (bound));                                     \
  } while (0)
