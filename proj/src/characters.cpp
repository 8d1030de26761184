#include "gsc/characters.hpp"

#include <numeric>
#include <string>

#include "gsc/errors.hpp"

namespace gsc {

namespace detail {

// One cyclic factor of (Z/p^e)^*: generator, order, and a discrete-log
// table over residues mod p^e (-1 for non-units).
struct CyclicFactor {
  std::size_t prime;
  std::size_t prime_power;
  std::size_t order;
  std::vector<long long> log;
};

// (Z/q)^* as a product of cyclic factors via the Chinese remainder theorem.
struct UnitGroup {
  std::size_t q = 0;
  std::size_t exponent = 1;
  std::vector<CyclicFactor> factors;
  std::vector<std::pair<std::size_t, std::size_t>> prime_powers;  // (p, p^e)
};

}  // namespace detail

namespace {

using detail::CyclicFactor;
using detail::UnitGroup;

std::size_t mul_mod(std::size_t a, std::size_t b, std::size_t m) { return (a * b) % m; }

std::size_t multiplicative_order(std::size_t g, std::size_t m) {
  std::size_t x = g % m;
  std::size_t k = 1;
  while (x != 1) {
    x = mul_mod(x, g, m);
    ++k;
  }
  return k;
}

std::vector<std::pair<std::size_t, std::size_t>> factor_prime_powers(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::size_t pe = 1;
    while (n % p == 0) {
      n /= p;
      pe *= p;
    }
    out.emplace_back(p, pe);
  }
  if (n > 1) out.emplace_back(n, n);
  return out;
}

CyclicFactor cyclic_factor(std::size_t p, std::size_t pe, std::size_t generator, std::size_t order,
                           long long sign_flip) {
  CyclicFactor f{p, pe, order, std::vector<long long>(pe, -1)};
  std::size_t x = 1;
  for (std::size_t t = 0; t < order; ++t) {
    f.log[x] = static_cast<long long>(t);
    if (sign_flip) f.log[(pe - x) % pe] = static_cast<long long>(t);
    x = mul_mod(x, generator, pe);
  }
  return f;
}

std::shared_ptr<const UnitGroup> build_group(std::size_t q) {
  auto g = std::make_shared<UnitGroup>();
  g->q = q;
  g->prime_powers = factor_prime_powers(q);
  for (auto [p, pe] : g->prime_powers) {
    if (p == 2) {
      if (pe == 4) {
        g->factors.push_back(cyclic_factor(2, 4, 3, 2, 0));
      } else if (pe >= 8) {
        // (Z/2^e)^* = <-1> x <5>
        CyclicFactor minus_one{2, pe, 2, std::vector<long long>(pe, -1)};
        for (std::size_t n = 1; n < pe; n += 2) minus_one.log[n] = (n % 4 == 3) ? 1 : 0;
        g->factors.push_back(std::move(minus_one));
        g->factors.push_back(cyclic_factor(2, pe, 5, pe / 4, 1));
      }
      continue;
    }
    std::size_t phi = pe / p * (p - 1);
    std::size_t generator = 0;
    for (std::size_t c = 2; c < pe; ++c) {
      if (c % p == 0) continue;
      if (multiplicative_order(c, pe) == phi) {
        generator = c;
        break;
      }
    }
    g->factors.push_back(cyclic_factor(p, pe, generator, phi, 0));
  }
  for (const auto& f : g->factors) g->exponent = std::lcm(g->exponent, f.order);
  return g;
}

}  // namespace

std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (auto [p, pe] : factor_prime_powers(n)) result = result / p * (p - 1);
  return n == 0 ? 0 : result;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<std::size_t> exps)
    : group_(std::move(group)), exps_(std::move(exps)) {
  const std::size_t q = group_->q;
  const long long half = static_cast<long long>(group_->exponent) / 2;
  odd_ = group_->exponent % 2 == 0 && phase(static_cast<long long>(q) - 1) == half;

  // Conductor: product over primes of the least p^f with the local
  // component trivial on {n = 1 mod p^f}, found by exhaustive check.
  conductor_ = 1;
  for (auto [p, pe] : group_->prime_powers) {
    std::size_t d = 1;
    while (true) {
      bool trivial = true;
      for (std::size_t n = 1; n < pe && trivial; n += d) {
        if (n % p == 0) continue;
        std::size_t acc = 0;
        for (std::size_t i = 0; i < group_->factors.size(); ++i) {
          const auto& f = group_->factors[i];
          if (f.prime != p) continue;
          acc += exps_[i] * static_cast<std::size_t>(f.log[n]) * (group_->exponent / f.order);
        }
        trivial = acc % group_->exponent == 0;
      }
      if (trivial) break;
      d *= p;
    }
    conductor_ *= d;
  }
}

std::size_t DirichletCharacter::modulus() const { return group_->q; }

std::size_t DirichletCharacter::exponent() const { return group_->exponent; }

long long DirichletCharacter::phase(long long n) const {
  const long long q = static_cast<long long>(group_->q);
  long long r = ((n % q) + q) % q;
  if (std::gcd(r, q) != 1) return -1;
  std::size_t acc = 0;
  for (std::size_t i = 0; i < group_->factors.size(); ++i) {
    const auto& f = group_->factors[i];
    long long l = f.log[static_cast<std::size_t>(r) % f.prime_power];
    acc += exps_[i] * static_cast<std::size_t>(l) * (group_->exponent / f.order);
  }
  return static_cast<long long>(acc % group_->exponent);
}

bool DirichletCharacter::is_principal() const {
  for (auto e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

PeriodicFunction DirichletCharacter::values(const PrecisionContext& ctx) const {
  WorkingPrecision wp(ctx.working_digits());
  const long long q = static_cast<long long>(group_->q);
  const long long ex = static_cast<long long>(group_->exponent);
  std::vector<Complex> v(static_cast<std::size_t>(q));
  std::vector<Rational> exact;
  bool rational = true;
  for (long long n = 1; n <= q; ++n) {
    long long ph = phase(n);
    if (ph < 0) continue;
    v[static_cast<std::size_t>(n - 1)] = root_of_unity(ph, ex);
    if (2 * ph % ex != 0) rational = false;
  }
  if (rational) {
    // Real characters take values in {-1, 0, 1}; keep them exact.
    for (const auto& z : v) exact.emplace_back(z.re == 0 ? 0 : (z.re > 0 ? 1 : -1));
    return PeriodicFunction::from_rationals(std::move(exact), ctx);
  }
  return PeriodicFunction(std::move(v));
}

CharacterTable::CharacterTable(std::size_t q) : q_(q) {
  if (q < 3 || q > kMaxCharacterModulus) {
    throw DomainError("dirichlet_characters needs 3 <= q <= " + std::to_string(kMaxCharacterModulus) +
                      ", got " + std::to_string(q));
  }
  auto group = build_group(q);
  std::vector<std::size_t> exps(group->factors.size(), 0);
  while (true) {
    entries_.push_back(DirichletCharacter(group, exps));
    std::size_t i = 0;
    for (; i < exps.size(); ++i) {
      if (++exps[i] < group->factors[i].order) break;
      exps[i] = 0;
    }
    if (i == exps.size()) break;
  }
}

}  // namespace gsc
