#include "gsc/numeric.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <memory>

#include "gsc/errors.hpp"
#include "gsc/precision.hpp"

namespace gsc {

WorkingPrecision::WorkingPrecision(unsigned digits10) : saved_(Real::default_precision()) {
  Real::default_precision(digits10);
}

WorkingPrecision::~WorkingPrecision() { Real::default_precision(saved_); }

unsigned current_digits() { return Real::default_precision(); }

Real to_real(const Rational& r) {
  Real out;
  mpfr_set_q(out.backend().data(), r.backend().data(), MPFR_RNDN);
  return out;
}

Real to_real(const Integer& z) {
  Real out;
  mpfr_set_z(out.backend().data(), z.backend().data(), MPFR_RNDN);
  return out;
}

Real pow10(long exponent) {
  Real out(10);
  mpfr_pow_si(out.backend().data(), out.backend().data(), exponent, MPFR_RNDN);
  return out;
}

Real with_precision(const Real& x, unsigned digits10) {
  WorkingPrecision wp(digits10);
  Real out;
  mpfr_set(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

Real pi() {
  Real out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

Real log2_const() {
  Real out;
  mpfr_const_log2(out.backend().data(), MPFR_RNDN);
  return out;
}

Integer round_to_integer(const Real& x) {
  Real rounded;
  mpfr_set_prec(rounded.backend().data(), mpfr_get_prec(x.backend().data()));
  mpfr_round(rounded.backend().data(), x.backend().data());
  Integer out;
  mpfr_get_z(out.backend().data(), rounded.backend().data(), MPFR_RNDN);
  return out;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.im == 0) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  Real denom = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / denom;
  im = (im * o.re - re * o.im) / denom;
  re = std::move(r);
  return *this;
}

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Real abs(const Complex& z) {
  if (z.im == 0) return boost::multiprecision::abs(z.re);
  if (z.re == 0) return boost::multiprecision::abs(z.im);
  return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im);
}

Complex exp(const Complex& z) {
  Real mag = boost::multiprecision::exp(z.re);
  if (z.im == 0) return Complex(mag);
  return Complex(mag * boost::multiprecision::cos(z.im), mag * boost::multiprecision::sin(z.im));
}

Complex log(const Complex& z) {
  if (z.im == 0 && z.re > 0) return Complex(boost::multiprecision::log(z.re));
  return Complex(boost::multiprecision::log(abs(z)), boost::multiprecision::atan2(z.im, z.re));
}

Complex sin(const Complex& z) {
  if (z.im == 0) return Complex(boost::multiprecision::sin(z.re));
  return Complex(boost::multiprecision::sin(z.re) * boost::multiprecision::cosh(z.im),
                 boost::multiprecision::cos(z.re) * boost::multiprecision::sinh(z.im));
}

Complex cos(const Complex& z) {
  if (z.im == 0) return Complex(boost::multiprecision::cos(z.re));
  return Complex(boost::multiprecision::cos(z.re) * boost::multiprecision::cosh(z.im),
                 -(boost::multiprecision::sin(z.re) * boost::multiprecision::sinh(z.im)));
}

Complex expi(const Real& theta) {
  return Complex(boost::multiprecision::cos(theta), boost::multiprecision::sin(theta));
}

Complex root_of_unity(long long k, long long n) {
  long long r = ((k % n) + n) % n;
  if ((4 * r) % n == 0) {
    switch ((4 * r) / n) {
      case 0: return Complex(1);
      case 1: return Complex(Real(0), Real(1));
      case 2: return Complex(-1);
      default: return Complex(Real(0), Real(-1));
    }
  }
  Real theta = Real(2) * pi() * Real(r) / Real(n);
  return expi(theta);
}

Complex pow_neg(const Real& base, const Complex& s) {
  Real lg = boost::multiprecision::log(base);
  Real mag = boost::multiprecision::exp(-(s.re * lg));
  if (s.im == 0) return Complex(mag);
  Real phase = s.im * lg;
  return Complex(mag * boost::multiprecision::cos(phase), -(mag * boost::multiprecision::sin(phase)));
}

namespace {

struct MpfrString {
  char* ptr = nullptr;
  ~MpfrString() {
    if (ptr) mpfr_free_str(ptr);
  }
};

std::string strip_negative_zero(std::string s) {
  if (s.empty() || s[0] != '-') return s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (c == 'e' || c == 'E') break;
    if (c >= '1' && c <= '9') return s;
  }
  return s.substr(1);
}

}  // namespace

std::string to_fixed(const Real& x, unsigned decimals) {
  MpfrString buf;
  mpfr_asprintf(&buf.ptr, "%.*RNf", static_cast<int>(decimals), x.backend().data());
  return strip_negative_zero(buf.ptr);
}

std::string to_scientific(const Real& x, unsigned significant) {
  MpfrString buf;
  int prec = significant > 0 ? static_cast<int>(significant) - 1 : 0;
  mpfr_asprintf(&buf.ptr, "%.*RNe", prec, x.backend().data());
  return strip_negative_zero(buf.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw DomainError("empty number");
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long exponent = 0;
  bool seen_point = false;
  bool seen_digit = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw DomainError("malformed number: " + std::string(text));
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw DomainError("malformed number: " + std::string(text));
    std::string exp_text(s.substr(i + 1));
    if (exp_text.empty()) throw DomainError("malformed exponent: " + std::string(text));
    char* end = nullptr;
    long e = std::strtol(exp_text.c_str(), &end, 10);
    if (*end != '\0') throw DomainError("malformed exponent: " + std::string(text));
    exponent += e;
  }
  // A leading zero would make the string read as octal.
  std::size_t nz = digits.find_first_not_of('0');
  Integer mantissa(nz == std::string::npos ? std::string("0") : digits.substr(nz));
  Rational out(mantissa);
  if (exponent != 0) {
    Integer scale = mp::pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    out = exponent < 0 ? out / Rational(scale) : out * Rational(scale);
  }
  return negative ? Rational(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s);
  Rational num = parse_decimal(s.substr(0, slash));
  Rational den = parse_decimal(s.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator: " + std::string(text));
  return num / den;
}

Real parse_real(std::string_view text) { return to_real(parse_rational(text)); }

Complex parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw DomainError("empty complex literal");
  if (s.back() != 'i') return Complex(parse_real(s));
  s.remove_suffix(1);
  // Split at the last sign that is not leading and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string_view t) -> Real {
    if (t.empty() || t == "+") return Real(1);
    if (t == "-") return Real(-1);
    return parse_real(t);
  };
  if (split == std::string_view::npos) return Complex(Real(0), imag_part(s));
  return Complex(parse_real(s.substr(0, split)), imag_part(s.substr(split)));
}

std::string to_string(const Rational& r) {
  if (mp::denominator(r) == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

PrecisionContext PrecisionContext::with_digits(unsigned d) {
  PrecisionContext ctx;
  ctx.digits = d;
  return ctx;
}

void PrecisionContext::validate() const {
  if (digits < 10) throw DomainError("digits must be >= 10");
  if (guard < 20) throw DomainError("guard must be >= 20");
}

Real PrecisionContext::truncation_tolerance() const {
  return pow10(-static_cast<long>(digits + guard / 2));
}

Real PrecisionContext::equality_tolerance() const {
  return pow10(-static_cast<long>(digits + guard / 2));
}

PrecisionContext PrecisionContext::raised(unsigned extra) const {
  PrecisionContext out = *this;
  out.digits += extra;
  return out;
}

}  // namespace gsc
