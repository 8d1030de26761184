#include "gsc/lseries.hpp"

#include <string>

#include "gsc/errors.hpp"
#include "gsc/gamma.hpp"
#include "gsc/hurwitz.hpp"

namespace gsc {

namespace {

bool is_pole_point(const Complex& s) { return s.re == 1 && s.im == 0; }

// Carried on top of the working precision while combining jets.
constexpr unsigned kCombineExtra = 5;

Complex rounded(const Complex& z, const PrecisionContext& ctx) {
  return Complex(with_precision(z.re, ctx.working_digits()), with_precision(z.im, ctx.working_digits()));
}

}  // namespace

HurwitzBasis::HurwitzBasis(std::size_t q, const Complex& s0, std::size_t order, const PrecisionContext& ctx)
    : order_(order), s0_(s0), at_pole_(is_pole_point(s0)), ctx_(ctx) {
  if (q < 1) throw DomainError("modulus must be at least 1");
  if (order > kMaxDerivativeOrder) {
    throw DomainError("derivative order above " + std::to_string(kMaxDerivativeOrder) + " is unsupported");
  }
  jets_.reserve(q);
  for (std::size_t a = 1; a <= q; ++a) {
    Rational x(static_cast<long>(a), static_cast<long>(q));
    jets_.push_back(at_pole_ ? hurwitz_regular_jet(x, order, ctx) : hurwitz_jet(s0, x, order, ctx));
  }
}

Jet HurwitzBasis::combine(const PeriodicFunction& f) const {
  const std::size_t q = modulus();
  if (f.modulus() != q) throw DomainError("function modulus does not match the basis");
  WorkingPrecision wp(ctx_.working_digits() + kCombineExtra);
  Jet acc(order_);
  for (std::size_t a = 1; a <= q; ++a) {
    const Complex& v = f.at_residue(a);
    if (v == Complex()) continue;
    Jet term = jets_[a - 1];
    term *= v;
    acc += term;
  }
  const Real log_q = boost::multiprecision::log(Real(static_cast<unsigned long>(q)));
  Jet out = acc * Jet::power(log_q, s0_, order_);
  if (at_pole_) {
    // q^{-1-eps} sum f / eps minus its principal part (sum f / q) / eps.
    Complex res = f.sum() / Real(static_cast<unsigned long>(q));
    Real c = -log_q;
    for (std::size_t m = 0; m <= order_; ++m) {
      out[m] += res * c;
      c = c * (-log_q) / Real(static_cast<unsigned>(m + 2));
    }
  }
  return out;
}

bool has_zero_sum(const PeriodicFunction& f, const PrecisionContext& ctx) {
  if (const auto& e = f.exact()) {
    Rational total(0);
    for (const auto& v : *e) total += v;
    return total == 0;
  }
  return is_negligible(f.sum(), ctx);
}

LSeriesEvaluation l_eval(const PeriodicFunction& f, const Complex& s, std::size_t k, const PrecisionContext& ctx,
                         bool allow_pole) {
  ctx.validate();
  LSeriesEvaluation out;
  out.s = s;
  out.deriv_order = k;
  if (is_pole_point(s) && !has_zero_sum(f, ctx)) {
    if (!allow_pole) throw PoleError("L(s, f) has a pole at s = 1 since sum f(a) != 0");
    WorkingPrecision wp(ctx.working_digits());
    out.pole_flag = true;
    out.residue = f.sum() / Real(static_cast<unsigned long>(f.modulus()));
  }
  HurwitzBasis basis(f.modulus(), s, k, ctx);
  Jet jet = basis.combine(f);
  WorkingPrecision wp(ctx.working_digits() + kCombineExtra);
  out.value = rounded(jet.derivative(k), ctx);
  return out;
}

Complex l1_odd_closed(const PeriodicFunction& f, const PrecisionContext& ctx) {
  ctx.validate();
  if (!is_odd(f, ctx)) throw HypothesisError("l1_odd_closed needs an odd function");
  PeriodicFunction fh = fourier_transform(f, ctx);
  if (!is_negligible(fh.at_residue(fh.modulus()), ctx)) throw HypothesisError("l1_odd_closed needs f^(q) = 0");
  WorkingPrecision wp(ctx.working_digits());
  const Real q(static_cast<unsigned long>(f.modulus()));
  return Complex(Real(0), -pi() / q) * b1(fh);
}

Complex l_prime_0(const PeriodicFunction& f, const PrecisionContext& ctx) {
  ctx.validate();
  if (!has_zero_sum(f, ctx)) throw HypothesisError("l_prime_0 needs sum f(a) = 0");
  const std::size_t q = f.modulus();
  WorkingPrecision wp(ctx.working_digits());
  const Real qr(static_cast<unsigned long>(q));
  Complex acc = b1(f) * (boost::multiprecision::log(qr) / qr);
  for (std::size_t b = 1; b < q; ++b) {
    const Complex& v = f.at_residue(b);
    if (v == Complex()) continue;
    acc += v * log_gamma(Rational(static_cast<long>(b), static_cast<long>(q)), ctx);
  }
  return rounded(acc, ctx);
}

Complex l_prime_1_odd(const PeriodicFunction& f, const PrecisionContext& ctx) {
  ctx.validate();
  if (!is_odd(f, ctx)) throw HypothesisError("l_prime_1_odd needs an odd function");
  const std::size_t q = f.modulus();
  if (!is_negligible(f.at_residue(q), ctx)) throw HypothesisError("l_prime_1_odd needs f(q) = 0");
  PeriodicFunction fh = fourier_transform(f, ctx);
  if (!is_negligible(fh.at_residue(q), ctx)) throw HypothesisError("l_prime_1_odd needs f^(q) = 0");

  WorkingPrecision wp(ctx.working_digits());
  const Real qr(static_cast<unsigned long>(q));
  Complex acc;
  for (std::size_t b = 1; b < q; ++b) {
    const Complex& v = fh.at_residue(b);
    if (is_negligible(v, ctx)) continue;
    acc += v * log_gamma(Rational(static_cast<long>(b), static_cast<long>(q)), ctx);
  }
  // Computed fresh at this precision rather than cached.
  const Real constant = (boost::multiprecision::log(2 * pi()) + euler_gamma(ctx)) / qr;
  acc += b1(fh) * constant;
  return rounded(Complex(Real(0), -pi()) * acc, ctx);
}

Complex functional_equation_rhs(const PeriodicFunction& f, const Complex& s, Parity parity,
                                const PrecisionContext& ctx) {
  ctx.validate();
  if (parity == Parity::odd ? !is_odd(f, ctx) : !is_even(f, ctx)) {
    throw HypothesisError(std::string("functional_equation_rhs: f is not ") +
                          (parity == Parity::odd ? "odd" : "even"));
  }
  PeriodicFunction fh = fourier_transform(f, ctx);
  Complex l_hat = l_eval(fh, s, 0, ctx).value;
  Complex g = gamma(s, ctx);

  WorkingPrecision wp(ctx.working_digits() + kCombineExtra);
  const Real qr(static_cast<unsigned long>(f.modulus()));
  Complex scale = exp(s * boost::multiprecision::log(qr / (2 * pi())));
  Complex half_turn = s * (pi() / 2);
  Complex trig = parity == Parity::odd ? Complex::i() * sin(half_turn) : cos(half_turn);
  return rounded(Complex(2) * g * scale * trig * l_hat, ctx);
}

}  // namespace gsc
