#include "gsc/periodic.hpp"

#include <numeric>
#include <sstream>

#include "gsc/errors.hpp"

namespace gsc {

PeriodicFunction::PeriodicFunction(std::vector<Complex> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("a periodic function needs modulus q >= 1");
}

PeriodicFunction PeriodicFunction::from_rationals(std::vector<Rational> values,
                                                  const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx.working_digits());
  std::vector<Complex> numeric;
  numeric.reserve(values.size());
  for (const auto& v : values) numeric.emplace_back(to_real(v));
  PeriodicFunction f(std::move(numeric));
  f.exact_ = std::move(values);
  return f;
}

PeriodicFunction PeriodicFunction::zero(std::size_t q) {
  PeriodicFunction f{std::vector<Complex>(q)};
  f.exact_ = std::vector<Rational>(q);
  return f;
}

const Complex& PeriodicFunction::operator()(long long n) const {
  const long long q = static_cast<long long>(values_.size());
  long long r = ((n - 1) % q + q) % q;
  return values_[static_cast<std::size_t>(r)];
}

namespace {

void require_same_modulus(const PeriodicFunction& a, const PeriodicFunction& b) {
  if (a.modulus() != b.modulus()) throw DomainError("periodic functions with different moduli");
}

}  // namespace

PeriodicFunction PeriodicFunction::operator+(const PeriodicFunction& o) const {
  require_same_modulus(*this, o);
  std::vector<Complex> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
  PeriodicFunction out(std::move(v));
  if (exact_ && o.exact_) {
    std::vector<Rational> e(*exact_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += (*o.exact_)[i];
    out.exact_ = std::move(e);
  }
  return out;
}

PeriodicFunction PeriodicFunction::operator-(const PeriodicFunction& o) const {
  require_same_modulus(*this, o);
  std::vector<Complex> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.values_[i];
  PeriodicFunction out(std::move(v));
  if (exact_ && o.exact_) {
    std::vector<Rational> e(*exact_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= (*o.exact_)[i];
    out.exact_ = std::move(e);
  }
  return out;
}

PeriodicFunction PeriodicFunction::scaled(const Complex& c) const {
  std::vector<Complex> v(values_);
  for (auto& x : v) x *= c;
  return PeriodicFunction(std::move(v));
}

PeriodicFunction PeriodicFunction::scaled(const Rational& c, const PrecisionContext& ctx) const {
  if (exact_) {
    std::vector<Rational> e(*exact_);
    for (auto& x : e) x *= c;
    return from_rationals(std::move(e), ctx);
  }
  WorkingPrecision wp(ctx.working_digits());
  return scaled(Complex(to_real(c)));
}

Complex PeriodicFunction::sum() const {
  Complex acc;
  for (const auto& v : values_) acc += v;
  return acc;
}

std::string PeriodicFunction::describe() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    if (exact_) {
      os << to_string((*exact_)[i]);
    } else {
      os << to_scientific(values_[i].re, 12);
      if (values_[i].im != 0) os << (values_[i].im < 0 ? "" : "+") << to_scientific(values_[i].im, 12) << 'i';
    }
  }
  os << ')';
  return os.str();
}

namespace {

// sum_a f(a) e^{sign 2 pi i a b / q}, optionally divided by q.
PeriodicFunction dft(const PeriodicFunction& f, int sign, bool normalize, const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx.working_digits());
  const long long q = static_cast<long long>(f.modulus());
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(q));
  for (long long k = 0; k < q; ++k) roots.push_back(root_of_unity(sign * k, q));
  std::vector<Complex> out(static_cast<std::size_t>(q));
  const Real qr(q);
  for (long long b = 1; b <= q; ++b) {
    Complex acc;
    for (long long a = 1; a <= q; ++a) {
      const Complex& v = f.at_residue(static_cast<std::size_t>(a));
      if (v == Complex()) continue;
      acc += v * roots[static_cast<std::size_t>((a * b) % q)];
    }
    if (normalize) acc /= qr;
    out[static_cast<std::size_t>(b - 1)] = std::move(acc);
  }
  return PeriodicFunction(std::move(out));
}

}  // namespace

PeriodicFunction fourier_transform(const PeriodicFunction& f, const PrecisionContext& ctx) {
  return dft(f, -1, true, ctx);
}

PeriodicFunction inverse_fourier(const PeriodicFunction& g, const PrecisionContext& ctx) {
  return dft(g, 1, false, ctx);
}

bool is_negligible(const Complex& z, const PrecisionContext& ctx) {
  if (z == Complex()) return true;
  WorkingPrecision wp(ctx.working_digits());
  return abs(z) <= ctx.equality_tolerance();
}

namespace {

bool parity_holds(const PeriodicFunction& f, int sign, const PrecisionContext& ctx) {
  const long long q = static_cast<long long>(f.modulus());
  if (const auto& e = f.exact()) {
    for (long long n = 1; n <= q; ++n) {
      const Rational& mirror = (*e)[static_cast<std::size_t>(((q - n - 1) % q + q) % q)];
      const Rational& value = (*e)[static_cast<std::size_t>(n - 1)];
      if (sign < 0 ? mirror != -value : mirror != value) return false;
    }
    return true;
  }
  WorkingPrecision wp(ctx.working_digits());
  for (long long n = 1; n <= q; ++n) {
    const Complex& mirror = f(q - n);
    const Complex& value = f(n);
    if (!is_negligible(sign < 0 ? mirror + value : mirror - value, ctx)) return false;
  }
  return true;
}

}  // namespace

bool is_odd(const PeriodicFunction& f, const PrecisionContext& ctx) { return parity_holds(f, -1, ctx); }

bool is_even(const PeriodicFunction& f, const PrecisionContext& ctx) { return parity_holds(f, 1, ctx); }

bool is_dirichlet_type(const PeriodicFunction& f, const PrecisionContext& ctx) {
  const std::size_t q = f.modulus();
  for (std::size_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) == 1) continue;
    if (const auto& e = f.exact()) {
      if ((*e)[a - 1] != 0) return false;
    } else if (!is_negligible(f.at_residue(a), ctx)) {
      return false;
    }
  }
  return true;
}

Complex b1(const PeriodicFunction& f) {
  Complex acc;
  for (std::size_t a = 1; a <= f.modulus(); ++a) {
    acc += f.at_residue(a) * Real(static_cast<unsigned long>(a));
  }
  return acc;
}

PeriodicFunction make_fj(long long j, long long p, const PrecisionContext& ctx) {
  if (p < 3) throw DomainError("make_fj needs p >= 3");
  if (j < 1 || 2 * j > p - 1) throw DomainError("make_fj needs 1 <= j <= (p-1)/2");
  std::vector<Rational> v(static_cast<std::size_t>(p));
  v[static_cast<std::size_t>(j - 1)] = 1;
  v[static_cast<std::size_t>(p - j - 1)] = -1;
  return PeriodicFunction::from_rationals(std::move(v), ctx);
}

}  // namespace gsc
