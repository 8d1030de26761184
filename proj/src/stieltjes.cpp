#include "gsc/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gsc/bernoulli.hpp"
#include "gsc/errors.hpp"
#include "gsc/hurwitz.hpp"

namespace gsc {

namespace {

constexpr std::uint64_t kMaxDirectTerms = 100'000'000;
constexpr unsigned kDirectDigitsCap = 40;
constexpr std::size_t kDefaultBernoulliCap = 64;
constexpr int kMaxDoublings = 6;

Real int_power(const Real& x, unsigned k) {
  Real out(1);
  for (unsigned i = 0; i < k; ++i) out *= x;
  return out;
}

// sum_i c_i L^i
Real eval_poly(const std::vector<Integer>& c, const Real& L) {
  Real acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * L + to_real(c[i]);
  return acc;
}

}  // namespace

void StieltjesKey::validate() const {
  if (q < 1) throw DomainError("Stieltjes key needs q >= 1");
  if (a < 1 || a > q) throw DomainError("Stieltjes key needs 1 <= a <= q");
  if (k > kMaxDerivativeOrder) throw DomainError("Stieltjes order k above 8 is unsupported");
}

std::string_view to_string(StieltjesMethod m) {
  return m == StieltjesMethod::direct ? "direct" : "euler_maclaurin";
}

StieltjesValue stieltjes_direct(const StieltjesKey& key, std::uint64_t x_cut, const PrecisionContext& ctx) {
  key.validate();
  ctx.validate();
  if (x_cut < 10 * key.q) throw DomainError("direct method needs x_cut >= 10 q");
  if (2 * (x_cut / key.q) > kMaxDirectTerms) throw DomainError("direct method term count exceeds 10^8");

  // The partial sums are only accurate to O(log^k x / x); a modest precision suffices.
  WorkingPrecision wp(std::min(ctx.working_digits(), kDirectDigitsCap));
  const std::uint64_t a = key.a;
  const std::uint64_t q = key.q;
  auto aligned = [&](std::uint64_t x) { return a + (x - a) / q * q; };
  const std::uint64_t x1 = aligned(x_cut);
  const std::uint64_t x2 = aligned(2 * x_cut);

  const Real norm_den = Real(static_cast<unsigned long>(q)) * Real(key.k + 1);
  auto normalizer = [&](std::uint64_t x) {
    return int_power(boost::multiprecision::log(Real(static_cast<unsigned long>(x))), key.k + 1) / norm_den;
  };

  Real sum(0);
  Real at_x1(0);
  for (std::uint64_t n = a; n <= x2; n += q) {
    Real nr(static_cast<unsigned long>(n));
    Real term = key.k == 0 ? Real(1) / nr : int_power(boost::multiprecision::log(nr), key.k) / nr;
    sum += term;
    if (n == x1) at_x1 = sum;
  }
  Real v1 = at_x1 - normalizer(x1);
  Real v2 = sum - normalizer(x2);

  StieltjesValue out;
  out.method = StieltjesMethod::direct;
  out.value = v1;
  out.x_cut = x1;
  out.error_estimate = 2 * boost::multiprecision::abs(v1 - v2);
  double err = out.error_estimate.convert_to<double>();
  unsigned est = err > 0 ? static_cast<unsigned>(std::max(0.0, std::floor(-std::log10(err)))) : ctx.digits;
  out.digits = std::min(ctx.digits, est);
  return out;
}

StieltjesValue stieltjes_em(const StieltjesKey& key, const PrecisionContext& ctx) {
  key.validate();
  ctx.validate();
  const unsigned k = key.k;
  const std::size_t a = key.a;
  const std::size_t q = key.q;

  std::size_t m_terms = ctx.em_terms;
  if (m_terms == 0) m_terms = static_cast<std::size_t>(std::ceil(0.4 * ctx.working_digits())) + 10 + 2 * k;
  const std::size_t cap = ctx.em_bernoulli ? ctx.em_bernoulli : kDefaultBernoulliCap;

  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt) {
    double log_top = std::log(static_cast<double>(a + m_terms * q));
    double extra = k * std::log10(log_top + 1.0) + 5.0;
    WorkingPrecision wp(ctx.working_digits() + static_cast<unsigned>(std::ceil(extra)));
    const Real tol = ctx.truncation_tolerance();
    const Real qr(static_cast<unsigned long>(q));

    Real head(0);
    for (std::size_t m = 0; m < m_terms; ++m) {
      Real n(static_cast<unsigned long>(a + m * q));
      head += k == 0 ? Real(1) / n : int_power(boost::multiprecision::log(n), k) / n;
    }

    const Real u(static_cast<unsigned long>(a + m_terms * q));
    const Real L = boost::multiprecision::log(u);
    Real value = head - int_power(L, k + 1) / (qr * Real(k + 1)) + int_power(L, k) / u / 2;
    Real scale = std::max(Real(1), boost::multiprecision::abs(value));

    // h(u) = log^k(u)/u has h^{(r)}(u) = u^{-1-r} P_r(log u) with
    // P_{r+1} = P_r' - (r+1) P_r and P_0 = L^k.
    std::vector<Integer> poly(k + 1);
    poly[k] = 1;
    auto advance = [&](std::size_t r) {
      std::vector<Integer> next(k + 1);
      for (std::size_t i = 0; i <= k; ++i) {
        next[i] = -Integer(r + 1) * poly[i];
        if (i + 1 <= k) next[i] += Integer(i + 1) * poly[i + 1];
      }
      poly = std::move(next);
    };
    advance(0);  // P_1

    // g^{(2j-1)}(M) = q^{2j-1} u^{-2j} P_{2j-1}(L)
    const Real q2_over_u2 = qr * qr / (u * u);
    Real scale_pow = qr / (u * u);
    bool converged = false;
    for (std::size_t j = 1; j <= cap; ++j) {
      Real term = to_real(BernoulliCache::instance().even_over_factorial(j)) * scale_pow * eval_poly(poly, L);
      value -= term;
      if (boost::multiprecision::abs(term) < tol * scale) {
        converged = true;
        break;
      }
      advance(2 * j - 1);
      advance(2 * j);
      scale_pow *= q2_over_u2;
    }
    if (converged) {
      StieltjesValue out;
      out.method = StieltjesMethod::euler_maclaurin;
      out.digits = ctx.digits;
      out.error_estimate = tol * scale;
      out.value = with_precision(value, ctx.working_digits());
      return out;
    }
    if (ctx.em_terms != 0) break;
    m_terms *= 2;
  }
  throw PrecisionError("Euler-Maclaurin target not reached for gamma_" + std::to_string(k) + "(" +
                       std::to_string(a) + "," + std::to_string(q) + ")");
}

}  // namespace gsc
