#include "gsc/gamma.hpp"

#include <mpfr.h>

#include <cmath>

#include "gsc/bernoulli.hpp"
#include "gsc/errors.hpp"

namespace gsc {

namespace {

constexpr std::size_t kStirlingCap = 240;

// Argument must reach this size before the Stirling series is applied.
std::size_t stirling_threshold(unsigned working_digits) {
  return static_cast<std::size_t>(std::ceil(1.5 * working_digits)) + 10;
}

// sum_j B_{2j} / (2j (2j-1) z^{2j-1}) until a term drops below tol.
template <class T, class Inv>
T stirling_tail(const T& z, const Real& tol, Inv&& inverse) {
  T inv = inverse(z);
  T inv2 = inv * inv;
  T power = inv;
  T acc = T(Real(0));
  for (std::size_t j = 1; j <= kStirlingCap; ++j) {
    Rational coeff = bernoulli(2 * j) / Rational(Integer(2 * j) * Integer(2 * j - 1));
    T term = power * to_real(coeff);
    acc += term;
    if (abs(term) < tol) return acc;
    power *= inv2;
  }
  throw PrecisionError("Stirling series did not reach the target accuracy");
}

}  // namespace

Rational exact_rational(const Real& x) {
  Rational out;
  mpfr_get_q(out.backend().data(), x.backend().data());
  return out;
}

Real log_gamma(const Rational& x, const PrecisionContext& ctx) {
  ctx.validate();
  if (x <= 0) throw DomainError("log_gamma needs x > 0, got " + to_string(x));
  // Magnitudes of order r log r cancel below, so a few extra digits are carried.
  WorkingPrecision wp(ctx.working_digits() + 6);
  Real tol = ctx.truncation_tolerance();

  const std::size_t threshold = stirling_threshold(ctx.working_digits());
  // Gamma(x) = Gamma(x + m) / prod_{i<m} (x + i), product taken exactly.
  std::size_t shift = 0;
  Rational r = x;
  Integer prod_num(1);
  Integer prod_den(1);
  const Integer num = mp::numerator(x);
  const Integer den = mp::denominator(x);
  while (r < threshold) {
    prod_num *= num + den * shift;
    prod_den *= den;
    ++shift;
    r += 1;
  }

  Real rr = to_real(r);
  Real lg = (rr - Real(0.5)) * boost::multiprecision::log(rr) - rr +
            boost::multiprecision::log(Real(2) * pi()) / 2;
  lg += stirling_tail(rr, tol, [](const Real& v) { return Real(1) / v; });
  if (shift > 0) {
    lg -= boost::multiprecision::log(to_real(prod_num)) - boost::multiprecision::log(to_real(prod_den));
  }
  return with_precision(lg, ctx.working_digits());
}

Real log_gamma(const Real& x, const PrecisionContext& ctx) { return log_gamma(exact_rational(x), ctx); }

Complex gamma(const Complex& z, const PrecisionContext& ctx) {
  ctx.validate();
  WorkingPrecision wp(ctx.working_digits() + 6);
  if (z.im == 0 && z.re <= 0 && boost::multiprecision::floor(z.re) == z.re) {
    throw DomainError("Gamma has a pole at non-positive integers");
  }
  if (z.re < Real(0.5)) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    Complex pz = z * pi();
    return Complex(pi()) / (sin(pz) * gamma(Complex(1) - z, ctx));
  }
  Real tol = ctx.truncation_tolerance();
  const Real threshold(static_cast<unsigned>(stirling_threshold(ctx.working_digits())));
  Complex w = z;
  Complex prod(1);
  while (abs(w) < threshold) {
    prod *= w;
    w += Complex(1);
  }
  Complex lg = (w - Complex(Real(0.5))) * log(w) - w +
               Complex(boost::multiprecision::log(Real(2) * pi()) / 2);
  lg += stirling_tail(w, tol, [](const Complex& v) { return Complex(1) / v; });
  return exp(lg) / prod;
}

}  // namespace gsc
