#pragma once

#include <cstddef>
#include <vector>

#include "gsc/numeric.hpp"
#include "gsc/periodic.hpp"

namespace gsc {

/// Exact element of the group ring Q[Z/q], sum_e c_e w^e with w = e^{2 pi i / q}.
/// The representation is not unique as a complex number (1 + w + ... = 0),
/// but sums and products computed here are exact, so an identically zero
/// coefficient vector certifies an exact cancellation.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(std::size_t q) : c_(q) {}

  std::size_t modulus() const { return c_.size(); }
  const Rational& coeff(std::size_t e) const { return c_[e]; }
  void add_term(long long exponent, const Rational& value);

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber operator*(const CyclotomicNumber& o) const;
  CyclotomicNumber scaled(const Rational& r) const;

  bool is_identically_zero() const;
  Complex evaluate(const PrecisionContext& ctx) const;

 private:
  std::vector<Rational> c_;
};

inline CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
inline CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }

/// Exact Fourier transform of a rational-valued function: entry b-1 holds
/// f^(b) = (1/q) sum_a f(a) w^{-ab}. Throws DomainError if f has no exact table.
std::vector<CyclotomicNumber> exact_fourier_transform(const PeriodicFunction& f);

/// sum_a a g(a) for an exact table.
CyclotomicNumber exact_b1(const std::vector<CyclotomicNumber>& g);

}  // namespace gsc
