#include <numeric>
#include <random>

#include "check.hpp"
#include "gsc/errors.hpp"
#include "gsc/gamma.hpp"
#include "gsc/hurwitz.hpp"
#include "gsc/relations.hpp"

using namespace gsc;
namespace bmp = boost::multiprecision;

namespace {

std::vector<Integer> ints(std::initializer_list<long> c) {
  std::vector<Integer> out;
  for (long x : c) out.emplace_back(x);
  return out;
}

bool same_up_to_sign(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.size() != b.size()) return false;
  bool plus = true;
  bool minus = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    plus = plus && a[i] == b[i];
    minus = minus && a[i] == -b[i];
  }
  return plus || minus;
}

std::vector<Real> lg_vector(std::initializer_list<Rational> xs, const PrecisionContext& ctx) {
  std::vector<Real> v;
  for (const auto& x : xs) v.push_back(log_gamma(x, ctx));
  return v;
}

}  // namespace

TEST_CASE("gamma(1/2) = sqrt(pi)") {
  const auto ctx = PrecisionContext::with_digits(60);
  auto v = lg_vector({Rational(1, 2)}, ctx);
  {
    WorkingPrecision wp(ctx.working_digits());
    v.push_back(bmp::log(pi()));
  }
  auto r = pslq(v, Integer(100), ctx);
  REQUIRE(r.status == RelationStatus::found);
  CHECK(r.coefficients == ints({2, -1}));
  CHECK(r.residual < check::tol(30));
  CHECK(r.verified_digits == 80);
  CHECK(r.digits == 60);
}

TEST_CASE("reflection relation for 1/4 and 3/4") {
  const auto ctx = PrecisionContext::with_digits(80);
  auto v = lg_vector({Rational(1, 4), Rational(3, 4)}, ctx);
  {
    WorkingPrecision wp(ctx.working_digits());
    v.push_back(bmp::log(pi()));
    v.push_back(log2_const());
  }
  auto r = pslq(v, Integer(100), ctx);
  REQUIRE(r.status == RelationStatus::found);
  CHECK(r.coefficients == ints({2, 2, -2, -1}));
}

TEST_CASE("no small relation between 1 and gamma") {
  const auto ctx = PrecisionContext::with_digits(60);
  std::vector<Real> v;
  {
    WorkingPrecision wp(ctx.working_digits());
    v.push_back(Real(1));
  }
  v.push_back(euler_gamma(ctx));
  auto r = pslq(v, Integer(10000), ctx);
  CHECK(r.status == RelationStatus::excluded_at_bound);
  CHECK(r.coefficients.empty());
  WorkingPrecision wp(ctx.working_digits());
  CHECK(r.norm_lower_bound > bmp::sqrt(Real(2)) * 10000);
}

TEST_CASE("property: planted relations are recovered") {
  std::mt19937_64 rng(61);
  const auto ctx = PrecisionContext::with_digits(60);
  std::uniform_int_distribution<long> coeff(-100, 100);
  std::uniform_int_distribution<long> base(2, 10000);
  int recovered = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    std::size_t n = 2 + rng() % 3;
    std::vector<long> c(n);
    long g = 0;
    do {
      for (auto& x : c) x = coeff(rng);
      g = 0;
      for (long x : c) g = std::gcd(g, x);
    } while (c.back() == 0 || g != 1);
    std::vector<Real> v(n);
    {
      WorkingPrecision wp(ctx.working_digits() + 20);
      Real acc(0);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        v[i] = bmp::sqrt(Real(base(rng)));
        acc += c[i] * v[i];
      }
      v[n - 1] = -acc / c.back();
    }
    auto r = pslq(v, Integer(100), ctx);
    std::vector<Integer> expected;
    for (long x : c) expected.emplace_back(x);
    bool ok = r.status == RelationStatus::found && same_up_to_sign(r.coefficients, expected);
    recovered += ok;
  }
  CHECK(recovered == trials);
}

TEST_CASE("property: scaling the vector leaves the relation unchanged") {
  std::mt19937_64 rng(62);
  const auto ctx = PrecisionContext::with_digits(60);
  for (int t = 0; t < 10; ++t) {
    std::vector<Real> v;
    std::vector<Real> scaled;
    {
      WorkingPrecision wp(ctx.working_digits() + 20);
      Real a = bmp::sqrt(Real(2 + static_cast<long>(rng() % 1000)));
      Real b = bmp::sqrt(Real(2 + static_cast<long>(rng() % 1000)));
      long c1 = 1 + static_cast<long>(rng() % 50);
      long c2 = -static_cast<long>(1 + rng() % 50);
      v = {a, b, (c1 * a + c2 * b) / 7};
      Real lambda = bmp::exp(Real(static_cast<long>(rng() % 9)) - 4) * pi();
      for (const auto& x : v) scaled.push_back(x * lambda);
    }
    auto r1 = pslq(v, Integer(100), ctx);
    auto r2 = pslq(scaled, Integer(100), ctx);
    REQUIRE(r1.status == RelationStatus::found);
    REQUIRE(r2.status == RelationStatus::found);
    CHECK(same_up_to_sign(r1.coefficients, r2.coefficients));
  }
}

TEST_CASE("precision guard refuses inadequate digits") {
  CHECK(required_digits(4, Integer(10000)) == 72);
  CHECK(required_digits(2, Integer(1)) == 20);
  const auto ctx = PrecisionContext::with_digits(50);
  std::vector<Real> v;
  {
    WorkingPrecision wp(ctx.working_digits());
    v = {Real(1), bmp::sqrt(Real(2)), bmp::sqrt(Real(3)), bmp::sqrt(Real(5))};
  }
  CHECK_THROWS_AS(pslq(v, Integer(10000), ctx), PrecisionError);
  CHECK_NOTHROW(pslq(v, Integer(10000), PrecisionContext::with_digits(72)));
}

TEST_CASE("input errors") {
  const auto ctx = PrecisionContext::with_digits(60);
  WorkingPrecision wp(ctx.working_digits());
  std::vector<Real> one{Real(1)};
  std::vector<Real> with_zero{Real(1), Real(0)};
  std::vector<Real> pair{Real(1), bmp::sqrt(Real(2))};
  CHECK_THROWS_AS(pslq(one, Integer(10), ctx), DomainError);
  CHECK_THROWS_AS(pslq(with_zero, Integer(10), ctx), DomainError);
  CHECK_THROWS_AS(pslq(pair, Integer(0), ctx), DomainError);
  CHECK_THROWS_AS(probe_conjecture(2, Integer(10), ctx), DomainError);
}

TEST_CASE("recomputation rejects relations that only hold at low precision") {
  // The second entry drifts away from the first as precision grows.
  VectorSource drifting = [](const PrecisionContext& c) {
    WorkingPrecision wp(c.working_digits());
    return std::vector<Real>{Real(1), 1 + pow10(-(60 - static_cast<long>(c.digits)))};
  };
  const auto ctx = PrecisionContext::with_digits(30);
  CHECK_THROWS_AS(find_relation(drifting, Integer(10), ctx), PrecisionError);

  VectorSource stable = [](const PrecisionContext& c) {
    WorkingPrecision wp(c.working_digits());
    return std::vector<Real>{bmp::log(Real(8)), bmp::log(Real(2))};
  };
  auto r = find_relation(stable, Integer(10), ctx);
  REQUIRE(r.status == RelationStatus::found);
  CHECK(r.coefficients == ints({1, -3}));
  CHECK(r.verified_digits == 50);
}

TEST_CASE("log Gamma values at reduced residues show no small relation") {
  auto p5 = probe_conjecture(5, Integer(10000), PrecisionContext::with_digits(200));
  CHECK(p5.relation.status == RelationStatus::excluded_at_bound);
  CHECK_FALSE(p5.flagged);
  CHECK(p5.residues == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(p5.relation.digits == 200);
  CHECK(p5.relation.norm_bound == 10000);

  auto p7 = probe_conjecture(7, Integer(10000), PrecisionContext::with_digits(300));
  CHECK(p7.relation.status == RelationStatus::excluded_at_bound);
  CHECK_FALSE(p7.flagged);
  CHECK(p7.residues.size() == 6);

  auto p12 = probe_conjecture(12, Integer(100), PrecisionContext::with_digits(60));
  CHECK(p12.residues == std::vector<std::size_t>{1, 5, 7, 11});
}

TEST_CASE("a relation appears once a non-reduced residue is added") {
  const auto ctx = PrecisionContext::with_digits(100);
  auto v = lg_vector({Rational(1, 4), Rational(3, 4), Rational(1, 2)}, ctx);
  {
    WorkingPrecision wp(ctx.working_digits());
    v.push_back(bmp::log(pi()));
    v.push_back(log2_const());
  }
  auto r = pslq(v, Integer(10000), ctx);
  REQUIRE(r.status == RelationStatus::found);
  CHECK(r.residual < check::tol(50));
  Integer biggest(0);
  for (const auto& c : r.coefficients) biggest = std::max(biggest, Integer(bmp::abs(c)));
  CHECK(biggest > 0);
  CHECK(biggest <= 10000);
}

TEST_CASE("status names and scope note") {
  CHECK(to_string(RelationStatus::found) == "found");
  CHECK(to_string(RelationStatus::excluded_at_bound) == "excluded_at_bound");
  CHECK(relation_scope_note().find("integer relations") != std::string_view::npos);
}
