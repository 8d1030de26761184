#include <numeric>

#include "check.hpp"
#include "gsc/characters.hpp"
#include "gsc/errors.hpp"
#include "oracles.hpp"

using namespace gsc;

namespace {

PrecisionContext ctx30() { return PrecisionContext::with_digits(30); }

std::vector<Complex> table(const DirichletCharacter& chi, const PrecisionContext& ctx) {
  auto f = chi.values(ctx);
  return std::vector<Complex>(f.values().begin(), f.values().end());
}

bool near(const Complex& a, const Complex& b) { return abs(a - b) < check::tol(25); }

std::size_t brute_phi(std::size_t q) {
  std::size_t n = 0;
  for (std::size_t a = 1; a <= q; ++a) n += std::gcd(a, q) == 1;
  return n;
}

}  // namespace

TEST_CASE("small moduli") {
  const auto ctx = ctx30();
  WorkingPrecision wp(ctx.working_digits());

  auto t3 = dirichlet_characters(3);
  REQUIRE(t3.size() == 2);
  CHECK(t3[0].is_principal());
  std::size_t odd = 0;
  for (const auto& chi : t3.entries()) {
    if (!chi.is_odd()) continue;
    ++odd;
    CHECK(chi.is_primitive());
    auto v = table(chi, ctx);
    CHECK(near(v[0], Complex(1)));
    CHECK(near(v[1], Complex(-1)));
    CHECK(near(v[2], Complex(0)));
  }
  CHECK(odd == 1);

  auto t4 = dirichlet_characters(4);
  REQUIRE(t4.size() == 2);
  for (const auto& chi : t4.entries()) {
    if (!chi.is_odd()) continue;
    auto v = table(chi, ctx);
    CHECK(near(v[0], Complex(1)));
    CHECK(near(v[1], Complex(0)));
    CHECK(near(v[2], Complex(-1)));
    CHECK(near(v[3], Complex(0)));
  }

  auto t5 = dirichlet_characters(5);
  REQUIRE(t5.size() == 4);
  odd = 0;
  for (const auto& chi : t5.entries()) {
    if (chi.is_odd()) {
      ++odd;
      CHECK(chi.is_primitive());
    }
  }
  CHECK(odd == 2);
}

TEST_CASE("property: character tables for 3 <= q <= 40") {
  const auto ctx = ctx30();
  WorkingPrecision wp(ctx.working_digits());
  auto equal_one = [](const Complex& z) { return abs(z - Complex(1)) < check::tol(25); };
  for (std::size_t q = 3; q <= 40; ++q) {
    INFO("q = " << q);
    auto t = dirichlet_characters(q);
    const std::size_t phi = brute_phi(q);
    CHECK(euler_phi(q) == phi);
    REQUIRE(t.size() == phi);
    std::size_t odd = 0;
    std::size_t principal = 0;
    for (const auto& chi : t.entries()) {
      auto v = table(chi, ctx);
      auto at = [&](std::size_t n) { return v[(n - 1) % q]; };
      principal += chi.is_principal();
      for (std::size_t a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) {
          CHECK(v[a - 1] == Complex(0));
          continue;
        }
        CHECK(abs(abs(v[a - 1]) - 1) < check::tol(25));
        for (std::size_t b = 1; b <= q; ++b) {
          if (std::gcd(b, q) == 1) CHECK(near(at(a * b), at(a) * at(b)));
        }
      }
      // Parity flag against chi(q-1) = -1.
      CHECK(chi.is_odd() == near(at(q - 1), Complex(-1)));
      odd += chi.is_odd();
      CHECK(q % chi.conductor() == 0);
      CHECK(chi.conductor() == oracle::conductor(v, equal_one));
      CHECK(chi.is_primitive() == (chi.conductor() == q));
    }
    CHECK(principal == 1);
    CHECK(odd == phi / 2);
    // Distinct characters have distinct tables.
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        auto vi = table(t[i], ctx);
        auto vj = table(t[j], ctx);
        bool same = true;
        for (std::size_t a = 0; a < q; ++a) same = same && near(vi[a], vj[a]);
        CHECK_FALSE(same);
      }
    }
  }
}

TEST_CASE("primitive counts follow the multiplicative formula") {
  // Number of primitive characters mod q is sum_{d | q} mu(d) phi(q/d).
  auto mobius = [](std::size_t n) {
    int m = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
    return n > 1 ? -m : m;
  };
  for (std::size_t q = 3; q <= 60; ++q) {
    long expected = 0;
    for (std::size_t d = 1; d <= q; ++d) {
      if (q % d == 0) expected += mobius(d) * static_cast<long>(brute_phi(q / d));
    }
    auto t = dirichlet_characters(q);
    long count = 0;
    for (const auto& chi : t.entries()) count += chi.is_primitive();
    CHECK_MESSAGE(count == expected, "q = " << q);
  }
}

TEST_CASE("range errors and the upper bound") {
  CHECK_THROWS_AS(dirichlet_characters(2), DomainError);
  CHECK_THROWS_AS(dirichlet_characters(0), DomainError);
  CHECK_THROWS_AS(dirichlet_characters(kMaxCharacterModulus + 1), DomainError);
  auto t = dirichlet_characters(kMaxCharacterModulus);
  CHECK(t.size() == euler_phi(kMaxCharacterModulus));
  CHECK(t.size() == 4000);
}
