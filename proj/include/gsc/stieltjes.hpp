#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "gsc/numeric.hpp"
#include "gsc/precision.hpp"

namespace gsc {

/// gamma_k(a, q) = lim_{x->inf} [ sum_{n<=x, n=a mod q} log^k(n)/n - log^{k+1}(x)/(q(k+1)) ].
/// (k, a, q) = (k, 1, 1) gives the classical Stieltjes constant gamma_k.
struct StieltjesKey {
  unsigned k = 0;
  std::size_t a = 1;
  std::size_t q = 1;

  /// 1 <= a <= q and k <= 8.
  void validate() const;
};

enum class StieltjesMethod { direct, euler_maclaurin };

std::string_view to_string(StieltjesMethod m);

struct StieltjesValue {
  Real value;
  /// Certified correct decimal digits (conservative).
  unsigned digits = 0;
  StieltjesMethod method = StieltjesMethod::euler_maclaurin;
  /// Absolute error estimate behind `digits`.
  Real error_estimate;
  /// Cut actually used by the direct method (aligned to n = a mod q).
  std::uint64_t x_cut = 0;
};

/// Raw limit expression evaluated at the last n = a (mod q) not above x_cut.
/// The error is estimated from the drift between that cut and the doubled cut.
/// Requires x_cut >= 10 q and x_cut / q <= 10^8.
StieltjesValue stieltjes_direct(const StieltjesKey& key, std::uint64_t x_cut, const PrecisionContext& ctx);

/// Euler–Maclaurin evaluation in n = a + m q with the normalizing term
/// cancelled analytically. Accurate to ctx.digits.
StieltjesValue stieltjes_em(const StieltjesKey& key, const PrecisionContext& ctx);

}  // namespace gsc
