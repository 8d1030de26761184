#include "gsc/cyclotomic.hpp"

#include "gsc/errors.hpp"

namespace gsc {

void CyclotomicNumber::add_term(long long exponent, const Rational& value) {
  const long long q = static_cast<long long>(c_.size());
  c_[static_cast<std::size_t>(((exponent % q) + q) % q)] += value;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  if (o.modulus() != modulus()) throw DomainError("cyclotomic moduli differ");
  for (std::size_t e = 0; e < c_.size(); ++e) c_[e] += o.c_[e];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  if (o.modulus() != modulus()) throw DomainError("cyclotomic moduli differ");
  for (std::size_t e = 0; e < c_.size(); ++e) c_[e] -= o.c_[e];
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
  if (o.modulus() != modulus()) throw DomainError("cyclotomic moduli differ");
  const std::size_t q = c_.size();
  CyclotomicNumber out(q);
  for (std::size_t i = 0; i < q; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < q; ++j) {
      if (o.c_[j] == 0) continue;
      out.c_[(i + j) % q] += c_[i] * o.c_[j];
    }
  }
  return out;
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& r) const {
  CyclotomicNumber out(*this);
  for (auto& v : out.c_) v *= r;
  return out;
}

bool CyclotomicNumber::is_identically_zero() const {
  for (const auto& v : c_) {
    if (v != 0) return false;
  }
  return true;
}

Complex CyclotomicNumber::evaluate(const PrecisionContext& ctx) const {
  WorkingPrecision wp(ctx.working_digits());
  const long long q = static_cast<long long>(c_.size());
  Complex acc;
  for (long long e = 0; e < q; ++e) {
    const Rational& v = c_[static_cast<std::size_t>(e)];
    if (v == 0) continue;
    acc += root_of_unity(e, q) * to_real(v);
  }
  return acc;
}

std::vector<CyclotomicNumber> exact_fourier_transform(const PeriodicFunction& f) {
  const auto& exact = f.exact();
  if (!exact) throw DomainError("exact Fourier transform needs a rational-valued function");
  const long long q = static_cast<long long>(f.modulus());
  const Rational inv_q(1, q);
  std::vector<CyclotomicNumber> out;
  out.reserve(static_cast<std::size_t>(q));
  for (long long b = 1; b <= q; ++b) {
    CyclotomicNumber v(static_cast<std::size_t>(q));
    for (long long a = 1; a <= q; ++a) {
      const Rational& fa = (*exact)[static_cast<std::size_t>(a - 1)];
      if (fa != 0) v.add_term(-a * b, fa * inv_q);
    }
    out.push_back(std::move(v));
  }
  return out;
}

CyclotomicNumber exact_b1(const std::vector<CyclotomicNumber>& g) {
  if (g.empty()) throw DomainError("empty table");
  CyclotomicNumber acc(g.front().modulus());
  for (std::size_t b = 1; b <= g.size(); ++b) acc += g[b - 1].scaled(Rational(static_cast<long long>(b)));
  return acc;
}

}  // namespace gsc
