#include "gsc/verify.hpp"

#include <array>
#include <numeric>

#include "gsc/errors.hpp"
#include "gsc/gamma.hpp"
#include "gsc/hurwitz.hpp"
#include "gsc/lseries.hpp"
#include "gsc/stieltjes.hpp"

namespace gsc {

namespace {

constexpr std::array<std::string_view, 9> kNames = {
    "lemma1_even",      "lemma1_odd",        "lemma2",       "lemma3",         "identity_lemma_k",
    "residue_sum",      "fourier_roundtrip", "pole_residue", "d_kl_expansion",
};

constexpr long kEntryBound = 100;

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

std::string describe_complex(const Rational& re, const Rational& im) {
  std::string out = to_string(re);
  if (im >= 0) out += "+";
  return out + to_string(im) + "i";
}

// Running max over instances.
class Tally {
 public:
  Tally(IdentityId id, std::size_t q, std::uint64_t seed, const PrecisionContext& ctx) {
    report_.identity_id = std::string(to_string(id));
    report_.q = q;
    report_.seed = seed;
    report_.digits = ctx.digits;
    WorkingPrecision wp(ctx.working_digits());
    report_.max_residual = Real(0);
  }

  void add(const Real& residual, const std::string& description) {
    ++report_.instances;
    if (report_.instances == 1 || residual > report_.max_residual) {
      report_.max_residual = residual;
      report_.worst_case = description;
    }
  }

  IdentityReport finish(const PrecisionContext& ctx) {
    report_.pass = report_.instances > 0 && report_.max_residual < pass_threshold(ctx);
    return std::move(report_);
  }

 private:
  IdentityReport report_;
};

void require_modulus(std::size_t q, std::size_t min_q, IdentityId id) {
  if (q < min_q) {
    throw DomainError(std::string(to_string(id)) + " needs q >= " + std::to_string(min_q) + ", got " +
                      std::to_string(q));
  }
}

Real residual_of(const Complex& a, const Complex& b) { return abs(a - b); }

void run_lemma1(Parity parity, std::size_t q, std::size_t trials, FunctionSampler& sampler,
                Tally& tally, const PrecisionContext& ctx) {
  for (std::size_t t = 0; t < trials; ++t) {
    auto table = parity == Parity::odd ? sampler.odd(q) : sampler.even(q);
    PeriodicFunction f = PeriodicFunction::from_rationals(table, ctx);
    Rational re = sampler.uniform(Rational(1, 2), Rational(3));
    Rational im = sampler.uniform(Rational(-4), Rational(4));
    WorkingPrecision wp(ctx.working_digits());
    Complex s(to_real(re), to_real(im));
    Complex lhs = l_eval(f, Complex(1) - s, 0, ctx).value;
    Complex rhs = functional_equation_rhs(f, s, parity, ctx);
    tally.add(residual_of(lhs, rhs), f.describe() + " s=" + describe_complex(re, im));
  }
}

void run_lemma2(std::size_t q, std::size_t trials, FunctionSampler& sampler, Tally& tally,
                const PrecisionContext& ctx) {
  HurwitzBasis basis(q, Complex(0), 1, ctx);
  for (std::size_t t = 0; t < trials; ++t) {
    PeriodicFunction f = PeriodicFunction::from_rationals(sampler.zero_sum(q), ctx);
    Complex series = basis.combine(f).derivative(1);
    Complex closed = l_prime_0(f, ctx);
    tally.add(residual_of(series, closed), f.describe());
  }
}

void run_lemma3(std::size_t q, std::size_t trials, FunctionSampler& sampler, Tally& tally,
                const PrecisionContext& ctx) {
  HurwitzBasis basis(q, Complex(1), 1, ctx);
  for (std::size_t t = 0; t < trials; ++t) {
    PeriodicFunction f = PeriodicFunction::from_rationals(sampler.odd(q), ctx);
    Complex series = basis.combine(f).derivative(1);
    Complex closed = l_prime_1_odd(f, ctx);
    tally.add(residual_of(series, closed), f.describe());
  }
}

void run_identity_lemma(std::size_t q, std::size_t trials, FunctionSampler& sampler, Tally& tally,
                        const PrecisionContext& ctx) {
  constexpr unsigned kMaxK = 2;
  HurwitzBasis basis(q, Complex(1), kMaxK, ctx);
  std::vector<std::vector<Real>> gammas(kMaxK + 1);
  for (unsigned k = 0; k <= kMaxK; ++k) {
    for (std::size_t a = 1; a <= q; ++a) gammas[k].push_back(stieltjes_em({k, a, q}, ctx).value);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    PeriodicFunction f = PeriodicFunction::from_rationals(sampler.zero_sum(q), ctx);
    Jet jet = basis.combine(f);
    WorkingPrecision wp(ctx.working_digits());
    for (unsigned k = 0; k <= kMaxK; ++k) {
      Complex stieltjes_side;
      for (std::size_t a = 1; a <= q; ++a) stieltjes_side += f.at_residue(a) * gammas[k][a - 1];
      if (k % 2 == 1) stieltjes_side = -stieltjes_side;
      tally.add(residual_of(jet.derivative(k), stieltjes_side), f.describe() + " k=" + std::to_string(k));
    }
  }
}

void run_residue_sum(std::size_t q, Tally& tally, const PrecisionContext& ctx) {
  for (unsigned k = 0; k <= 2; ++k) {
    WorkingPrecision wp(ctx.working_digits());
    Real total(0);
    for (std::size_t a = 1; a <= q; ++a) total += stieltjes_em({k, a, q}, ctx).value;
    Real classical = stieltjes_em({k, 1, 1}, ctx).value;
    tally.add(boost::multiprecision::abs(total - classical), "k=" + std::to_string(k));
  }
}

void run_fourier_roundtrip(std::size_t q, std::size_t trials, FunctionSampler& sampler, Tally& tally,
                           const PrecisionContext& ctx) {
  for (std::size_t t = 0; t < trials; ++t) {
    PeriodicFunction f = PeriodicFunction::from_rationals(sampler.any(q), ctx);
    PeriodicFunction back = inverse_fourier(fourier_transform(f, ctx), ctx);
    WorkingPrecision wp(ctx.working_digits());
    Real worst(0);
    for (std::size_t a = 1; a <= q; ++a) {
      Real r = residual_of(back.at_residue(a), f.at_residue(a));
      if (r > worst) worst = r;
    }
    tally.add(worst, f.describe());
  }
}

void run_pole_residue(std::size_t q, std::size_t trials, FunctionSampler& sampler, Tally& tally,
                      const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx.working_digits());
  const long shift = static_cast<long>(ctx.digits / 2 + 10);
  const Real delta = pow10(-shift);
  HurwitzBasis basis(q, Complex(Real(1) + delta), 0, ctx);
  for (std::size_t t = 0; t < trials; ++t) {
    PeriodicFunction f = PeriodicFunction::from_rationals(sampler.nonzero_sum(q), ctx);
    Complex scaled = basis.combine(f)[0] * delta;
    Complex residue = f.sum() / Real(static_cast<unsigned long>(q));
    tally.add(residual_of(scaled, residue), f.describe() + " s=1+1e-" + std::to_string(shift));
  }
}

void run_d_kl(std::size_t q, std::size_t trials, FunctionSampler& sampler, Tally& tally,
              const PrecisionContext& ctx) {
  // For prime q every odd f has f^ of Dirichlet type (f^(q) = 0 is forced).
  // Otherwise sample f^ directly as a Dirichlet-type odd table.
  const bool prime = is_prime(q);
  for (std::size_t t = 0; t < trials; ++t) {
    DklResult r;
    std::string description;
    if (prime) {
      PeriodicFunction fk = PeriodicFunction::from_rationals(sampler.odd(q), ctx);
      PeriodicFunction fl = PeriodicFunction::from_rationals(sampler.odd(q), ctx);
      r = d_kl(fk, fl, ctx);
      description = "f_k=" + fk.describe() + " f_l=" + fl.describe();
    } else {
      auto gk = sampler.odd_dirichlet(q);
      auto gl = sampler.odd_dirichlet(q);
      r = d_kl_from_transforms(gk, gl, ctx);
      description = "f^_k=" + PeriodicFunction::from_rationals(gk, ctx).describe() +
                    " f^_l=" + PeriodicFunction::from_rationals(gl, ctx).describe();
    }
    if (!r.constant_cancels) {
      WorkingPrecision wp(ctx.working_digits());
      tally.add(Real(1), description + " constant term did not cancel");
    } else {
      tally.add(r.residual, description);
    }
  }
}

DklResult d_kl_core(const PeriodicFunction& fk, const PeriodicFunction& fl, const std::vector<CyclotomicNumber>& hk,
                    const std::vector<CyclotomicNumber>& hl, const PrecisionContext& ctx) {
  const std::size_t q = fk.modulus();
  if (fl.modulus() != q) throw DomainError("d_kl needs functions of the same modulus");
  for (const PeriodicFunction* f : {&fk, &fl}) {
    if (!is_odd(*f, ctx)) throw HypothesisError("d_kl needs odd functions");
    if (!is_negligible(f->at_residue(q), ctx)) throw HypothesisError("d_kl needs f(q) = 0");
  }
  for (const auto* h : {&hk, &hl}) {
    if (!h->back().is_identically_zero()) throw HypothesisError("d_kl needs f^(q) = 0");
  }

  DklResult out;
  const CyclotomicNumber bk = exact_b1(hk);
  const CyclotomicNumber bl = exact_b1(hl);
  out.constant_coefficient = bl * bk - bk * bl;
  out.constant_cancels = out.constant_coefficient.is_identically_zero();
  for (std::size_t b = 1; b <= q; ++b) {
    out.exact_coefficients.push_back(bl * hk[b - 1] - bk * hl[b - 1]);
    out.coefficients.push_back(out.exact_coefficients.back().evaluate(ctx));
  }

  HurwitzBasis basis(q, Complex(1), 1, ctx);
  Complex lk = basis.combine(fk).derivative(1);
  Complex ll = basis.combine(fl).derivative(1);

  WorkingPrecision wp(ctx.working_digits());
  out.direct = bl.evaluate(ctx) * lk - bk.evaluate(ctx) * ll;
  Complex acc;
  for (std::size_t b = 1; b < q; ++b) {
    if (out.exact_coefficients[b - 1].is_identically_zero()) continue;
    acc += out.coefficients[b - 1] * log_gamma(Rational(static_cast<long>(b), static_cast<long>(q)), ctx);
  }
  out.expansion = Complex(Real(0), -pi()) * acc;
  out.residual = abs(out.direct - out.expansion);
  return out;
}

}  // namespace

std::string_view to_string(IdentityId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<IdentityId>(i);
  }
  return std::nullopt;
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (std::size_t i = 0; i < kNames.size(); ++i) v.push_back(static_cast<IdentityId>(i));
    return v;
  }();
  return ids;
}

Real pass_threshold(const PrecisionContext& ctx) {
  WorkingPrecision wp(ctx.working_digits());
  return pow10(-static_cast<long>(ctx.digits / 2));
}

Rational FunctionSampler::entry() {
  std::uniform_int_distribution<long> num(-kEntryBound, kEntryBound);
  std::uniform_int_distribution<long> den(1, kEntryBound);
  return Rational(num(rng_), den(rng_));
}

Rational FunctionSampler::uniform(const Rational& lo, const Rational& hi, long den) {
  std::uniform_int_distribution<long> t(0, den);
  return lo + (hi - lo) * Rational(t(rng_), den);
}

namespace {

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Rational total(const std::vector<Rational>& v) { return std::accumulate(v.begin(), v.end(), Rational(0)); }

}  // namespace

std::vector<Rational> FunctionSampler::any(std::size_t q) {
  std::vector<Rational> v(q);
  do {
    for (auto& x : v) x = entry();
  } while (all_zero(v));
  return v;
}

std::vector<Rational> FunctionSampler::zero_sum(std::size_t q) {
  if (q < 2) throw DomainError("a nonzero function with zero sum needs q >= 2");
  std::vector<Rational> v(q);
  do {
    for (std::size_t i = 0; i + 1 < q; ++i) v[i] = entry();
    v[q - 1] = 0;
    v[q - 1] = -total(v);
  } while (all_zero(v));
  return v;
}

std::vector<Rational> FunctionSampler::nonzero_sum(std::size_t q) {
  std::vector<Rational> v;
  do {
    v = any(q);
  } while (total(v) == 0);
  return v;
}

std::vector<Rational> FunctionSampler::odd(std::size_t q) {
  if (q < 3) throw DomainError("a nonzero odd function needs q >= 3");
  std::vector<Rational> v(q);
  do {
    for (std::size_t n = 1; 2 * n < q; ++n) {
      v[n - 1] = entry();
      v[q - n - 1] = -v[n - 1];
    }
  } while (all_zero(v));
  return v;
}

std::vector<Rational> FunctionSampler::even(std::size_t q) {
  std::vector<Rational> v(q);
  do {
    for (std::size_t n = 1; 2 * n <= q; ++n) {
      v[n - 1] = entry();
      v[q - n - 1] = v[n - 1];
    }
    v[q - 1] = entry();
  } while (all_zero(v));
  return v;
}

std::vector<Rational> FunctionSampler::odd_dirichlet(std::size_t q) {
  if (q < 3) throw DomainError("a nonzero odd function needs q >= 3");
  std::vector<Rational> v(q);
  do {
    for (std::size_t n = 1; 2 * n < q; ++n) {
      v[n - 1] = std::gcd(n, q) == 1 ? entry() : Rational(0);
      v[q - n - 1] = -v[n - 1];
    }
  } while (all_zero(v));
  return v;
}

IdentityReport verify_identity(IdentityId id, std::size_t q, std::size_t trials, std::uint64_t seed,
                               const PrecisionContext& ctx) {
  ctx.validate();
  FunctionSampler sampler(seed);
  Tally tally(id, q, seed, ctx);
  switch (id) {
    case IdentityId::lemma1_even:
      require_modulus(q, 3, id);
      run_lemma1(Parity::even, q, trials, sampler, tally, ctx);
      break;
    case IdentityId::lemma1_odd:
      require_modulus(q, 3, id);
      run_lemma1(Parity::odd, q, trials, sampler, tally, ctx);
      break;
    case IdentityId::lemma2:
      require_modulus(q, 2, id);
      run_lemma2(q, trials, sampler, tally, ctx);
      break;
    case IdentityId::lemma3:
      require_modulus(q, 3, id);
      run_lemma3(q, trials, sampler, tally, ctx);
      break;
    case IdentityId::identity_lemma_k:
      require_modulus(q, 2, id);
      run_identity_lemma(q, trials, sampler, tally, ctx);
      break;
    case IdentityId::residue_sum:
      require_modulus(q, 1, id);
      run_residue_sum(q, tally, ctx);
      break;
    case IdentityId::fourier_roundtrip:
      require_modulus(q, 1, id);
      run_fourier_roundtrip(q, trials, sampler, tally, ctx);
      break;
    case IdentityId::pole_residue:
      require_modulus(q, 1, id);
      run_pole_residue(q, trials, sampler, tally, ctx);
      break;
    case IdentityId::d_kl_expansion:
      require_modulus(q, 3, id);
      run_d_kl(q, trials, sampler, tally, ctx);
      break;
  }
  return tally.finish(ctx);
}

DklResult d_kl(const PeriodicFunction& fk, const PeriodicFunction& fl, const PrecisionContext& ctx) {
  ctx.validate();
  return d_kl_core(fk, fl, exact_fourier_transform(fk), exact_fourier_transform(fl), ctx);
}

DklResult d_kl_from_transforms(const std::vector<Rational>& gk, const std::vector<Rational>& gl,
                               const PrecisionContext& ctx) {
  ctx.validate();
  auto lift = [](const std::vector<Rational>& g) {
    std::vector<CyclotomicNumber> out;
    for (const auto& v : g) {
      CyclotomicNumber c(g.size());
      c.add_term(0, v);
      out.push_back(std::move(c));
    }
    return out;
  };
  PeriodicFunction fk = inverse_fourier(PeriodicFunction::from_rationals(gk, ctx), ctx);
  PeriodicFunction fl = inverse_fourier(PeriodicFunction::from_rationals(gl, ctx), ctx);
  return d_kl_core(fk, fl, lift(gk), lift(gl), ctx);
}

NonvanishingCheck check_nonvanishing(const PeriodicFunction& f, const PrecisionContext& ctx) {
  ctx.validate();
  if (!has_zero_sum(f, ctx)) throw PoleError("check_nonvanishing needs sum f(a) = 0");
  NonvanishingCheck out;
  out.value = l_eval(f, Complex(1), 0, ctx).value;
  WorkingPrecision wp(ctx.working_digits());
  out.margin = abs(out.value) - pass_threshold(ctx);
  return out;
}

}  // namespace gsc
