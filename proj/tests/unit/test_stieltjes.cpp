#include "check.hpp"
#include "gsc/errors.hpp"
#include "gsc/hurwitz.hpp"
#include "gsc/stieltjes.hpp"
#include "oracles.hpp"

using namespace gsc;

namespace {

PrecisionContext ctx50() { return PrecisionContext::with_digits(50); }

Real em(unsigned k, std::size_t a, std::size_t q, const PrecisionContext& ctx) {
  return stieltjes_em(StieltjesKey{k, a, q}, ctx).value;
}

}  // namespace

TEST_CASE("classical constants against the alternating-series oracle") {
  const auto ctx = ctx50();
  Real g0 = em(0, 1, 1, ctx);
  Real g1 = em(1, 1, 1, ctx);
  WorkingPrecision wp(ctx.working_digits());
  CHECK_CLOSE(g0, oracle::euler_gamma(60), check::tol(50));
  CHECK_CLOSE(g0, oracle::mpfr_euler(), check::tol(50));
  CHECK_CLOSE(g1, oracle::stieltjes_gamma1(60), check::tol(50));
  CHECK_CLOSE(g0, euler_gamma(ctx), check::tol(50));
  CHECK(to_fixed(g0, 19) == "0.5772156649015328606");
  CHECK(to_fixed(g1, 20) == "-0.07281584548367672486");
}

TEST_CASE("gamma_0(2, 2) = (gamma - log 2) / 2") {
  const auto ctx = ctx50();
  Real v = em(0, 2, 2, ctx);
  WorkingPrecision wp(ctx.working_digits());
  CHECK_CLOSE(v, (oracle::mpfr_euler() - log2_const()) / 2, check::tol(50));
}

TEST_CASE("gamma_0(a, q) = -(log q + psi(a/q)) / q") {
  // Follows from the harmonic sum over n = a mod q.
  const auto ctx = ctx50();
  for (std::size_t q = 1; q <= 9; ++q) {
    for (std::size_t a = 1; a <= q; ++a) {
      Real v = em(0, a, q, ctx);
      WorkingPrecision wp(ctx.working_digits());
      Real qr(static_cast<unsigned long>(q));
      Real ref = -(boost::multiprecision::log(qr) + oracle::mpfr_digamma(Rational(a, q))) / qr;
      CHECK_CLOSE(v, ref, check::tol(50));
    }
  }
}

TEST_CASE("property: residue sums reproduce the classical constants") {
  const auto ctx = ctx50();
  for (unsigned k = 0; k <= 2; ++k) {
    Real classical = em(k, 1, 1, ctx);
    for (std::size_t q = 2; q <= 7; ++q) {
      Real total(0);
      for (std::size_t a = 1; a <= q; ++a) total += em(k, a, q, ctx);
      WorkingPrecision wp(ctx.working_digits());
      INFO("k = " << k << ", q = " << q);
      CHECK_CLOSE(total, classical, check::tol(50));
    }
  }
}

TEST_CASE("property: direct limit converges towards the accelerated value") {
  const auto ctx = PrecisionContext::with_digits(30);
  for (unsigned k = 0; k <= 2; ++k) {
    for (std::size_t q = 1; q <= 10; ++q) {
      for (std::size_t a = 1; a <= q; ++a) {
        const StieltjesKey key{k, a, q};
        Real target = stieltjes_em(key, ctx).value;
        auto coarse = stieltjes_direct(key, 2000 * q, ctx);
        auto fine = stieltjes_direct(key, 4000 * q, ctx);
        WorkingPrecision wp(ctx.working_digits());
        Real e_coarse = boost::multiprecision::abs(coarse.value - target);
        Real e_fine = boost::multiprecision::abs(fine.value - target);
        INFO("key (" << k << "," << a << "," << q << ")");
        CHECK(e_fine < e_coarse);
        CHECK(e_coarse <= 2 * coarse.error_estimate);
        CHECK(e_fine <= 2 * fine.error_estimate);
        CHECK(coarse.digits <= ctx.digits);
      }
    }
  }
}

TEST_CASE("direct method examples") {
  const auto ctx = PrecisionContext::with_digits(20);
  auto g = stieltjes_direct(StieltjesKey{0, 1, 1}, 1000000, ctx);
  auto g1 = stieltjes_direct(StieltjesKey{1, 1, 1}, 1000000, ctx);
  WorkingPrecision wp(ctx.working_digits());
  CHECK(g.method == StieltjesMethod::direct);
  CHECK(g.x_cut == 1000000);
  CHECK_CLOSE(g.value, oracle::mpfr_euler(), Real(5e-7));
  CHECK(g.error_estimate < Real(5e-6));
  CHECK(g.digits >= 5);
  CHECK_CLOSE(g1.value, oracle::stieltjes_gamma1(30), Real(1e-4));

  // The cut is aligned to the progression.
  auto h = stieltjes_direct(StieltjesKey{0, 2, 3}, 1000, ctx);
  CHECK(h.x_cut % 3 == 2);
  CHECK(h.x_cut <= 1000);
}

TEST_CASE("accelerated values are real, reported at full digits and stable under raised precision") {
  const auto ctx = PrecisionContext::with_digits(40);
  for (unsigned k : {0u, 3u, 8u}) {
    auto lo = stieltjes_em(StieltjesKey{k, 2, 5}, ctx);
    auto hi = stieltjes_em(StieltjesKey{k, 2, 5}, ctx.raised(20));
    CHECK(lo.method == StieltjesMethod::euler_maclaurin);
    CHECK(lo.digits == ctx.digits);
    WorkingPrecision wp(ctx.working_digits() + 20);
    CHECK_CLOSE(lo.value, hi.value, check::tol(40) * (1 + boost::multiprecision::abs(hi.value)));
  }
}

TEST_CASE("key validation") {
  const auto ctx = PrecisionContext::with_digits(20);
  CHECK_THROWS_AS(stieltjes_em(StieltjesKey{0, 0, 3}, ctx), DomainError);
  CHECK_THROWS_AS(stieltjes_em(StieltjesKey{0, 4, 3}, ctx), DomainError);
  CHECK_THROWS_AS(stieltjes_em(StieltjesKey{9, 1, 1}, ctx), DomainError);
  CHECK_THROWS_AS(stieltjes_direct(StieltjesKey{0, 1, 5}, 49, ctx), DomainError);
  CHECK_THROWS_AS(stieltjes_direct(StieltjesKey{0, 1, 1}, 200000000ULL, ctx), DomainError);
  CHECK(to_string(StieltjesMethod::direct) == "direct");
  CHECK(to_string(StieltjesMethod::euler_maclaurin) == "euler_maclaurin");
}
