#pragma once

// Reference values from routes that share no code with the library's
// Euler–Maclaurin and Stirling engines.

#include <cstddef>
#include <functional>
#include <vector>

#include "gsc/numeric.hpp"

namespace oracle {

using gsc::Complex;
using gsc::Rational;
using gsc::Real;

/// sum_{j>=0} (-1)^j a(j) by the Cohen–Villegas–Zagier weights with n terms.
Complex alternating_sum(const std::function<Complex(unsigned)>& a, unsigned n);

/// Terms needed for `digits` correct digits (error about 5.83^-n).
unsigned cvz_terms(unsigned digits);

/// eta^{(k)}(s) = sum_{n>=1} (-1)^{n-1} (-log n)^k n^{-s} at the current precision.
Complex eta_derivative(unsigned k, const Complex& s, unsigned digits);

/// zeta(s) = eta(s) / (1 - 2^{1-s}) for Re s > 0, s != 1.
Complex zeta(const Complex& s, unsigned digits);

/// zeta'(s) for real s > 1 from eta'(s).
Real zeta_prime(const Real& s, unsigned digits);

/// Euler's constant and gamma_1 from the Taylor coefficients of eta at 1.
Real euler_gamma(unsigned digits);
Real stieltjes_gamma1(unsigned digits);

/// MPFR's lngamma, digamma and zeta at the current precision.
Real mpfr_lngamma(const Rational& x);
Real mpfr_digamma(const Rational& x);
Real mpfr_zeta(const Real& s);
Real mpfr_euler();

/// (1/q) sum_a f(a) (cos - i sin)(2 pi a b / q) with per-entry trigonometry.
std::vector<Complex> naive_dft(const std::vector<Complex>& f);

/// Conductor of a table mod q: least d | q such that chi(n) = 1 whenever
/// n = 1 (mod d) and gcd(n, q) = 1. `equal_one` tests a value against 1.
std::size_t conductor(const std::vector<Complex>& chi, const std::function<bool(const Complex&)>& equal_one);

}  // namespace oracle
