#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/cli/cache.hpp"
#include "gsc/numeric.hpp"
#include "gsc/precision.hpp"
#include "gsc/relations.hpp"

namespace gsc::cli {

/// One entry of a --vector argument, evaluable at any precision.
///
/// Grammar: sums, differences, products and quotients of decimal or p/q
/// literals and the constants log_gamma(a/q), log_pi, log_2, euler_gamma,
/// stieltjes(k,a,q), with parentheses and unary minus.
struct VectorExpression {
  std::string text;
  std::function<Real(const PrecisionContext&)> evaluate;
};

/// Splits on ';' and parses each entry. Constants are read from and written
/// to `cache` when it is non-null. Throws std::invalid_argument on bad input.
std::vector<VectorExpression> parse_vector(std::string_view spec, const ValueCache* cache);

VectorSource as_source(std::vector<VectorExpression> entries);

}  // namespace gsc::cli
