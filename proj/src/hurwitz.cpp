#include "gsc/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gsc/bernoulli.hpp"
#include "gsc/errors.hpp"
#include "gsc/gamma.hpp"

namespace gsc {

namespace {

constexpr std::size_t kDefaultBernoulliCap = 64;
constexpr int kMaxDoublings = 6;

void check_abscissa(const Rational& x) {
  if (x <= 0 || x > 1) throw DomainError("Hurwitz zeta needs 0 < x <= 1, got " + to_string(x));
}

double approx(const Real& r) { return r.convert_to<double>(); }

// Euler–Maclaurin with N direct terms and up to `cap` Bernoulli corrections,
// propagated through a Taylor jet in s. Returns false if the last admitted
// correction did not fall below the tolerance.
bool euler_maclaurin(const Complex& s0, const Rational& x, std::size_t order, bool remove_pole,
                     std::size_t n_terms, std::size_t cap, const Real& tol, Jet& out) {
  const Integer den = mp::denominator(x);
  const Integer num = mp::numerator(x);
  const Real den_r = to_real(den);

  Jet sum(order);
  for (std::size_t n = 0; n < n_terms; ++n) {
    Real u = to_real(Integer(num + den * n)) / den_r;
    sum += Jet::power(boost::multiprecision::log(u), s0, order);
  }

  Real u_n = to_real(Integer(num + den * n_terms)) / den_r;
  Real log_n = boost::multiprecision::log(u_n);
  Jet p = Jet::power(log_n, s0, order);

  Jet pole(order);
  if (remove_pole) {
    // ((u^{-eps}) - 1) / eps = sum_{m>=0} (-log u)^{m+1} / (m+1)! eps^m
    Real c = -log_n;
    for (std::size_t m = 0; m <= order; ++m) {
      pole[m] = Complex(c);
      c = c * (-log_n) / Real(static_cast<unsigned>(m + 2));
    }
  } else {
    pole = p * Jet::inverse_linear(s0 - Complex(1), order);
    pole *= u_n;
  }
  sum += pole;

  Jet half = p;
  half *= Real(0.5);
  sum += half;

  Real scale = std::max(Real(1), abs(sum[0]));
  Real p_mag = p.max_abs();
  Real inv_u2 = Real(1) / (u_n * u_n);
  Real u_pow = Real(1) / u_n;  // u^{1-2j}, starting at j = 1

  Jet poch(order, s0);  // (s)_{2j-1}
  if (order > 0) poch[1] = Complex(1);

  Jet corrections(order);
  bool converged = false;
  for (std::size_t j = 1; j <= cap; ++j) {
    Real weight = to_real(BernoulliCache::instance().even_over_factorial(j)) * u_pow;
    Jet term = poch;
    term *= weight;
    corrections += term;
    if (term.max_abs() * p_mag < tol * scale) {
      converged = true;
      break;
    }
    poch.mul_linear(s0 + Complex(static_cast<int>(2 * j - 1)));
    poch.mul_linear(s0 + Complex(static_cast<int>(2 * j)));
    u_pow *= inv_u2;
  }
  sum += corrections * p;
  out = std::move(sum);
  return converged;
}

Jet hurwitz_series(const Complex& s0, const Rational& x, std::size_t order, bool remove_pole,
                   const PrecisionContext& ctx) {
  ctx.validate();
  check_abscissa(x);
  if (order > kMaxDerivativeOrder) {
    throw DomainError("derivative order above " + std::to_string(kMaxDerivativeOrder) +
                      " is unsupported");
  }
  bool at_pole = s0.re == 1 && s0.im == 0;
  if (at_pole && !remove_pole) throw PoleError("zeta(s, x) has a pole at s = 1");

  std::size_t n_terms = ctx.em_terms;
  if (n_terms == 0) {
    double by_digits = std::ceil(ctx.digits * std::log(10.0) / std::log(2.0));
    double by_height = std::ceil(2.0 * std::fabs(approx(s0.im)));
    n_terms = static_cast<std::size_t>(std::max({by_digits, by_height, 10.0}));
  }
  std::size_t cap = ctx.em_bernoulli ? ctx.em_bernoulli : kDefaultBernoulliCap;

  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt) {
    // Terms of size N^{1-Re s} cancel against the pole term for Re s < 1,
    // and log powers grow with the derivative order.
    double re_s = approx(s0.re);
    double log_n = std::log10(static_cast<double>(n_terms) + 1.0);
    double extra = std::max(0.0, (1.0 - re_s) * log_n) +
                   static_cast<double>(order) * std::log10(std::log(n_terms + 2.0) + 1.0) + 2.0;
    WorkingPrecision wp(ctx.working_digits() + static_cast<unsigned>(std::ceil(extra)));
    Real tol = ctx.truncation_tolerance();
    Jet out(order);
    if (euler_maclaurin(s0, x, order, remove_pole, n_terms, cap, tol, out)) return out;
    if (ctx.em_terms != 0) break;
    n_terms *= 2;
  }
  throw PrecisionError("Euler-Maclaurin target not reached for zeta(s, " + to_string(x) + ")");
}

}  // namespace

Complex hurwitz_zeta(const Complex& s, const Rational& x, const PrecisionContext& ctx) {
  return hurwitz_series(s, x, 0, false, ctx)[0];
}

Complex hurwitz_zeta(const Complex& s, const Real& x, const PrecisionContext& ctx) {
  return hurwitz_zeta(s, exact_rational(x), ctx);
}

Complex hurwitz_zeta_deriv(const Complex& s, const Rational& x, std::size_t k,
                           const PrecisionContext& ctx) {
  Jet jet = hurwitz_series(s, x, k, false, ctx);
  WorkingPrecision wp(ctx.working_digits());
  return jet.derivative(k);
}

Complex hurwitz_zeta_deriv(const Complex& s, const Real& x, std::size_t k,
                           const PrecisionContext& ctx) {
  return hurwitz_zeta_deriv(s, exact_rational(x), k, ctx);
}

Jet hurwitz_jet(const Complex& s0, const Rational& x, std::size_t order,
                const PrecisionContext& ctx) {
  return hurwitz_series(s0, x, order, false, ctx);
}

Jet hurwitz_regular_jet(const Rational& x, std::size_t order, const PrecisionContext& ctx) {
  return hurwitz_series(Complex(1), x, order, true, ctx);
}

Complex riemann_zeta(const Complex& s, const PrecisionContext& ctx) {
  return hurwitz_zeta(s, Rational(1), ctx);
}

Real digamma(const Rational& x, const PrecisionContext& ctx) {
  return -hurwitz_regular_jet(x, 0, ctx)[0].re;
}

Real euler_gamma(const PrecisionContext& ctx) { return hurwitz_regular_jet(Rational(1), 0, ctx)[0].re; }

}  // namespace gsc
