#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsc/numeric.hpp"
#include "gsc/precision.hpp"

namespace gsc {

/// An arithmetical function of period q, stored by residues 1..q; the
/// value at residue q is f(0). Values are immutable after construction.
/// Functions built from rationals remember the exact table as well.
class PeriodicFunction {
 public:
  explicit PeriodicFunction(std::vector<Complex> values);
  static PeriodicFunction from_rationals(std::vector<Rational> values, const PrecisionContext& ctx);
  static PeriodicFunction zero(std::size_t q);

  std::size_t modulus() const { return values_.size(); }

  /// f(n) for any integer n.
  const Complex& operator()(long long n) const;
  /// f(a) for a residue 1 <= a <= q.
  const Complex& at_residue(std::size_t a) const { return values_[a - 1]; }

  std::span<const Complex> values() const { return values_; }
  const std::optional<std::vector<Rational>>& exact() const { return exact_; }

  /// Linear combination; exactness is kept when all inputs are exact.
  PeriodicFunction operator+(const PeriodicFunction& o) const;
  PeriodicFunction operator-(const PeriodicFunction& o) const;
  PeriodicFunction scaled(const Complex& c) const;
  PeriodicFunction scaled(const Rational& c, const PrecisionContext& ctx) const;

  /// sum_{a=1}^{q} f(a)
  Complex sum() const;

  /// "(1,-1,0)" using exact values when known, otherwise 12-digit decimals.
  std::string describe() const;

 private:
  std::vector<Complex> values_;
  std::optional<std::vector<Rational>> exact_;
};

/// f^(b) = (1/q) sum_a f(a) e^{-2 pi i a b / q}
PeriodicFunction fourier_transform(const PeriodicFunction& f, const PrecisionContext& ctx);
/// f(n) = sum_b g(b) e^{2 pi i b n / q}
PeriodicFunction inverse_fourier(const PeriodicFunction& g, const PrecisionContext& ctx);

/// f(q - n) = -f(n) for all n (which forces f(q) = 0).
bool is_odd(const PeriodicFunction& f, const PrecisionContext& ctx);
/// f(q - n) = f(n) for all n.
bool is_even(const PeriodicFunction& f, const PrecisionContext& ctx);
/// f(a) = 0 whenever gcd(a, q) > 1.
bool is_dirichlet_type(const PeriodicFunction& f, const PrecisionContext& ctx);

/// B_{1,f} = sum_a a f(a)
Complex b1(const PeriodicFunction& f);

/// f_j(j) = 1, f_j(p - j) = -1, zero elsewhere; requires p >= 3 and 1 <= j <= (p-1)/2.
PeriodicFunction make_fj(long long j, long long p, const PrecisionContext& ctx);

/// |z| <= ctx.equality_tolerance()
bool is_negligible(const Complex& z, const PrecisionContext& ctx);

}  // namespace gsc
