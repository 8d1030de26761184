#include "gsc/series.hpp"

namespace gsc {

Jet& Jet::operator+=(const Jet& o) {
  for (std::size_t j = 0; j < c_.size() && j < o.c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  for (std::size_t j = 0; j < c_.size() && j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

Jet& Jet::operator*=(const Complex& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Jet& Jet::operator*=(const Real& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Jet Jet::operator*(const Jet& o) const {
  std::size_t n = std::min(c_.size(), o.c_.size());
  Jet out(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == Complex()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.c_[i + j] += c_[i] * o.c_[j];
  }
  return out;
}

void Jet::mul_linear(const Complex& a) {
  for (std::size_t j = c_.size(); j-- > 0;) {
    c_[j] *= a;
    if (j > 0) c_[j] += c_[j - 1];
  }
}

Complex Jet::derivative(std::size_t k) const {
  Real fact(1);
  for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<unsigned>(i);
  return c_[k] * fact;
}

Real Jet::max_abs() const {
  Real m(0);
  for (const auto& v : c_) {
    Real a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

Jet Jet::power(const Real& log_u, const Complex& s0, std::size_t order) {
  Jet out(order);
  Real mag = boost::multiprecision::exp(-(s0.re * log_u));
  if (s0.im == 0) {
    out.c_[0] = Complex(mag);
  } else {
    Real phase = s0.im * log_u;
    out.c_[0] = Complex(mag * boost::multiprecision::cos(phase), -(mag * boost::multiprecision::sin(phase)));
  }
  // coefficient j: u^{-s0} (-log u)^j / j!
  for (std::size_t j = 1; j <= order; ++j) {
    out.c_[j] = out.c_[j - 1] * (-log_u / Real(static_cast<unsigned>(j)));
  }
  return out;
}

Jet Jet::inverse_linear(const Complex& a, std::size_t order) {
  Jet out(order);
  Complex inv = Complex(1) / a;
  out.c_[0] = inv;
  Complex minus_inv = -inv;
  for (std::size_t j = 1; j <= order; ++j) out.c_[j] = out.c_[j - 1] * minus_inv;
  return out;
}

}  // namespace gsc
