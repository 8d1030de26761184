#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/numeric.hpp"
#include "gsc/precision.hpp"

namespace gsc {

enum class RelationStatus { found, excluded_at_bound };

std::string_view to_string(RelationStatus s);

/// Result of an integer-relation search on a real vector v.
///
/// found: sum c_i v_i vanishes to within `residual` < 10^{-digits/2} and
/// 0 < max|c_i| <= norm_bound. excluded_at_bound: every integer relation has
/// Euclidean norm at least `norm_lower_bound`, which exceeds sqrt(n) *
/// norm_bound, so none has max|c_i| <= norm_bound. Both claims hold at the
/// recorded `digits` only.
struct IntegerRelation {
  std::vector<Integer> coefficients;
  Integer norm_bound;
  Real residual;
  Real norm_lower_bound;
  RelationStatus status = RelationStatus::excluded_at_bound;
  unsigned digits = 0;
  /// Precision at which a found relation was re-evaluated.
  unsigned verified_digits = 0;
  std::size_t iterations = 0;
};

/// Integer relations are the only kind searched for; dependence over
/// algebraic numbers of higher degree is outside what this search can see.
std::string_view relation_scope_note();

/// Smallest digits accepted for n entries and the given bound:
/// 10 n + 2 log10(bound) n.
unsigned required_digits(std::size_t n, const Integer& norm_bound);

/// PSLQ on v. Refuses with PrecisionError when ctx.digits is below
/// required_digits, and with DomainError if |v| < 2 or an entry is zero at
/// working precision. A found relation is re-evaluated on the supplied
/// values at 20 extra digits.
IntegerRelation pslq(std::span<const Real> v, const Integer& norm_bound, const PrecisionContext& ctx);

/// Produces the vector at a given precision; lets found relations be
/// checked against values recomputed from scratch.
using VectorSource = std::function<std::vector<Real>(const PrecisionContext&)>;

/// pslq on source(ctx); a found relation is re-checked on source evaluated
/// with `verify_extra` more digits and rejected with PrecisionError if the
/// residual there is not below 10^{-digits/2}.
IntegerRelation find_relation(const VectorSource& source, const Integer& norm_bound, const PrecisionContext& ctx,
                              unsigned verify_extra = 20);

struct ConjectureProbe {
  std::size_t q = 0;
  /// Residues a with gcd(a, q) = 1; entry i of the vector is log Gamma(a_i / q).
  std::vector<std::size_t> residues;
  IntegerRelation relation;
  /// Set when a relation survived re-verification at doubled precision: a
  /// counterexample to the expected independence, or a precision defect.
  bool flagged = false;
};

/// Searches for an integer relation among log Gamma(a/q), gcd(a, q) = 1, q > 2.
ConjectureProbe probe_conjecture(std::size_t q, const Integer& norm_bound, const PrecisionContext& ctx);

}  // namespace gsc
