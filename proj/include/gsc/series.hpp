#pragma once

#include <cstddef>
#include <vector>

#include "gsc/numeric.hpp"

namespace gsc {

/// Truncated Taylor expansion in eps around a base point s0:
/// F(s0 + eps) = sum_{j<=order} coeff(j) eps^j. The k-th derivative at s0
/// is k! * coeff(k).
class Jet {
 public:
  explicit Jet(std::size_t order) : c_(order + 1) {}
  Jet(std::size_t order, const Complex& constant) : c_(order + 1) { c_[0] = constant; }

  std::size_t order() const { return c_.size() - 1; }
  const Complex& operator[](std::size_t j) const { return c_[j]; }
  Complex& operator[](std::size_t j) { return c_[j]; }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Complex& s);
  Jet& operator*=(const Real& s);
  Jet operator*(const Jet& o) const;

  /// Multiplies in place by (a + eps).
  void mul_linear(const Complex& a);

  /// k! * coeff(k)
  Complex derivative(std::size_t k) const;

  /// Largest coefficient modulus.
  Real max_abs() const;

  /// u^{-(s0 + eps)} for real u > 0, given log u.
  static Jet power(const Real& log_u, const Complex& s0, std::size_t order);
  /// 1 / (a + eps), a != 0.
  static Jet inverse_linear(const Complex& a, std::size_t order);

 private:
  std::vector<Complex> c_;
};

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }

}  // namespace gsc
