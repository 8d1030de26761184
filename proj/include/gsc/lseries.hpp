#pragma once

#include <cstddef>
#include <vector>

#include "gsc/numeric.hpp"
#include "gsc/periodic.hpp"
#include "gsc/precision.hpp"
#include "gsc/series.hpp"

namespace gsc {

/// L(s, f) = sum_{n>=1} f(n) n^{-s} = q^{-s} sum_a f(a) zeta(s, a/q), or one
/// of its s-derivatives.
struct LSeriesEvaluation {
  Complex s;
  /// The k-th derivative. When pole_flag is set this is the k-th derivative
  /// of L(s, f) - residue/(s - 1), the part left after removing the pole.
  Complex value;
  std::size_t deriv_order = 0;
  bool pole_flag = false;
  Complex residue;
};

/// Hurwitz jets zeta(s0 + eps, a/q) for a = 1..q, reusable across many f of
/// the same modulus. At s0 = 1 the jets hold the regular part zeta - 1/eps.
class HurwitzBasis {
 public:
  HurwitzBasis(std::size_t q, const Complex& s0, std::size_t order, const PrecisionContext& ctx);

  std::size_t modulus() const { return jets_.size(); }
  const Complex& point() const { return s0_; }
  std::size_t order() const { return order_; }

  /// Taylor jet of L(s0 + eps, f), without the principal part at s0 = 1.
  Jet combine(const PeriodicFunction& f) const;

 private:
  std::size_t order_;
  Complex s0_;
  bool at_pole_;
  PrecisionContext ctx_;
  std::vector<Jet> jets_;
};

/// True when sum_a f(a) vanishes: exactly for rational tables, else within
/// the equality tolerance.
bool has_zero_sum(const PeriodicFunction& f, const PrecisionContext& ctx);

/// k-th s-derivative of L(s, f), 0 <= k <= 8. At s = 1 the pole cancels
/// analytically when sum f(a) = 0; otherwise a PoleError is thrown, or with
/// allow_pole the residue (1/q) sum f(a) is reported in the result.
LSeriesEvaluation l_eval(const PeriodicFunction& f, const Complex& s, std::size_t k,
                         const PrecisionContext& ctx, bool allow_pole = false);

/// L(1, f) = -(i pi / q) B_{1, f^} for odd f.
Complex l1_odd_closed(const PeriodicFunction& f, const PrecisionContext& ctx);

/// L'(0, f) = (log q / q) B_{1,f} + sum_b f(b) log Gamma(b/q), for sum f(a) = 0.
Complex l_prime_0(const PeriodicFunction& f, const PrecisionContext& ctx);

/// L'(1, f) = -i pi { sum_b f^(b) log Gamma(b/q) + ((log 2 pi + gamma)/q) B_{1, f^} }
/// for odd f with f(q) = f^(q) = 0.
Complex l_prime_1_odd(const PeriodicFunction& f, const PrecisionContext& ctx);

enum class Parity { even, odd };

/// Right side of the functional equation, to be compared with L(1 - s, f):
///   even: 2 Gamma(s) (q/2pi)^s cos(pi s/2) L(s, f^)
///   odd:  2i Gamma(s) (q/2pi)^s sin(pi s/2) L(s, f^)
/// Throws HypothesisError if f does not have the stated parity.
Complex functional_equation_rhs(const PeriodicFunction& f, const Complex& s, Parity parity,
                                const PrecisionContext& ctx);

}  // namespace gsc
