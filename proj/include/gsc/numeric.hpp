#pragma once

// Arbitrary-precision scalar types shared by every module.
//
// Real is an MPFR float whose precision is taken from the process-wide
// default at construction time; WorkingPrecision scopes that default.
// Binary operations produce results at the larger operand precision.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace gsc {

namespace mp = boost::multiprecision;

using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Rational = mp::mpq_rational;
using Integer = mp::mpz_int;

/// Sets the default decimal precision of newly created Reals for the
/// lifetime of the guard. Not thread-safe: the default is process-wide.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(unsigned digits10);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  unsigned saved_;
};

unsigned current_digits();

Real to_real(const Rational& r);
Real to_real(const Integer& z);
Real pow10(long exponent);

/// Copy of x rounded to the given decimal precision.
Real with_precision(const Real& x, unsigned digits10);

Real pi();
Real log2_const();

/// Nearest integer, ties away from zero.
Integer round_to_integer(const Real& x);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by intent
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT

  static Complex i() { return Complex(Real(0), Real(1)); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }
  Complex& operator/=(const Complex& o);

  bool is_real() const { return im == 0; }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator/(Complex a, const Real& s) { return a /= s; }
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
inline bool operator==(const Complex& a, const Complex& b) {
  return a.re == b.re && a.im == b.im;
}

Complex conj(const Complex& z);
Real abs(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch.
Complex log(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
/// e^{i theta}
Complex expi(const Real& theta);
/// e^{2 pi i k / n}; exact at multiples of a quarter turn.
Complex root_of_unity(long long k, long long n);
/// base^{-s} for real base > 0.
Complex pow_neg(const Real& base, const Complex& s);

/// Fixed-point decimal with `decimals` digits after the point; a value
/// that rounds to zero prints without a sign.
std::string to_fixed(const Real& x, unsigned decimals);
/// Scientific notation with `significant` digits, for residuals.
std::string to_scientific(const Real& x, unsigned significant);

/// Parses a decimal literal ("-1.25e-3") or a rational ("p/q").
Rational parse_rational(std::string_view text);
Real parse_real(std::string_view text);
/// Accepts "re", "re+imi", "re-imi" or "imi" with rational/decimal parts.
Complex parse_complex(std::string_view text);

std::string to_string(const Rational& r);

}  // namespace gsc
