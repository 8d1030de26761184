#pragma once

#include <cstddef>

#include "gsc/numeric.hpp"

namespace gsc {

/// Exact Bernoulli numbers B_0, B_1 = -1/2, B_2, ... generated from
/// sum_{j=0}^{m} C(m+1, j) B_j = 0 and kept for the process lifetime.
/// The table only grows; lookups are safe from any thread.
class BernoulliCache {
 public:
  static BernoulliCache& instance();

  Rational get(std::size_t n);
  /// B_{2j} / (2j)!
  Rational even_over_factorial(std::size_t j);
  std::size_t size() const;

 private:
  BernoulliCache();
  void extend_to(std::size_t n);
};

inline Rational bernoulli(std::size_t n) { return BernoulliCache::instance().get(n); }

}  // namespace gsc
