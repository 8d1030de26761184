#include "gsc/relations.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "gsc/errors.hpp"
#include "gsc/gamma.hpp"

namespace gsc {

namespace {

constexpr std::size_t kMaxIterations = 200000;

using RealMatrix = std::vector<std::vector<Real>>;
using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Real dot(const std::vector<Integer>& c, std::span<const Real> v) {
  Real acc(0);
  for (std::size_t i = 0; i < c.size(); ++i) acc += to_real(c[i]) * v[i];
  return acc;
}

void normalize_sign(std::vector<Integer>& c) {
  for (const auto& x : c) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : c) y = -y;
    }
    return;
  }
}

Integer max_abs(const std::vector<Integer>& c) {
  Integer m(0);
  for (const auto& x : c) m = std::max(m, Integer(mp::abs(x)));
  return m;
}

// State of the Ferguson–Bailey iteration, 0-based. H is n x (n-1).
class Pslq {
 public:
  Pslq(std::span<const Real> x) : n_(x.size()), y_(x.begin(), x.end()), a_(identity(n_)), b_(identity(n_)) {
    H_.assign(n_, std::vector<Real>(n_ - 1, Real(0)));
    std::vector<Real> s(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      Real t(0);
      for (std::size_t j = k; j < n_; ++j) t += x[j] * x[j];
      s[k] = boost::multiprecision::sqrt(t);
    }
    const Real norm = s[0];
    for (std::size_t k = 0; k < n_; ++k) {
      y_[k] /= norm;
      s[k] /= norm;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i < n_ - 1) H_[i][i] = s[i + 1] / s[i];
      for (std::size_t j = 0; j < i && j < n_ - 1; ++j) H_[i][j] = -y_[i] * y_[j] / (s[j] * s[j + 1]);
    }
    for (std::size_t i = 1; i < n_; ++i) reduce_row(i, i - 1);
  }

  // One iteration; returns the swap index.
  void step(const Real& gamma) {
    std::size_t m = 0;
    Real best(-1);
    Real g_pow = gamma;
    for (std::size_t i = 0; i < n_ - 1; ++i) {
      Real v = g_pow * boost::multiprecision::abs(H_[i][i]);
      if (v > best) {
        best = v;
        m = i;
      }
      g_pow *= gamma;
    }
    std::swap(y_[m], y_[m + 1]);
    std::swap(H_[m], H_[m + 1]);
    std::swap(a_[m], a_[m + 1]);
    for (std::size_t i = 0; i < n_; ++i) std::swap(b_[i][m], b_[i][m + 1]);

    if (m + 2 < n_) {
      Real t0 = boost::multiprecision::sqrt(H_[m][m] * H_[m][m] + H_[m][m + 1] * H_[m][m + 1]);
      if (t0 != 0) {
        Real t1 = H_[m][m] / t0;
        Real t2 = H_[m][m + 1] / t0;
        for (std::size_t i = m; i < n_; ++i) {
          Real t3 = H_[i][m];
          Real t4 = H_[i][m + 1];
          H_[i][m] = t1 * t3 + t2 * t4;
          H_[i][m + 1] = t1 * t4 - t2 * t3;
        }
      }
    }
    for (std::size_t i = m + 1; i < n_; ++i) reduce_row(i, std::min(i - 1, m + 1));
  }

  const Real& y(std::size_t i) const { return y_[i]; }

  std::vector<Integer> column(std::size_t i) const {
    std::vector<Integer> c(n_);
    for (std::size_t j = 0; j < n_; ++j) c[j] = b_[j][i];
    return c;
  }

  // Any relation has Euclidean norm >= 1 / max_j |H_jj|.
  Real norm_lower_bound() const {
    Real m(0);
    for (std::size_t j = 0; j < n_ - 1; ++j) m = std::max(m, Real(boost::multiprecision::abs(H_[j][j])));
    if (m == 0) return Real(0);
    return Real(1) / m;
  }

 private:
  void reduce_row(std::size_t i, std::size_t top) {
    for (std::size_t jj = top + 1; jj-- > 0;) {
      const std::size_t j = jj;
      if (H_[j][j] == 0) continue;
      Integer t = round_to_integer(H_[i][j] / H_[j][j]);
      if (t == 0) continue;
      const Real tr = to_real(t);
      y_[j] += tr * y_[i];
      for (std::size_t k = 0; k <= j; ++k) H_[i][k] -= tr * H_[j][k];
      for (std::size_t k = 0; k < n_; ++k) {
        a_[i][k] -= t * a_[j][k];
        b_[k][j] += t * b_[k][i];
      }
    }
  }

  std::size_t n_;
  std::vector<Real> y_;
  RealMatrix H_;
  IntMatrix a_;
  IntMatrix b_;
};

}  // namespace

std::string_view to_string(RelationStatus s) { return s == RelationStatus::found ? "found" : "excluded_at_bound"; }

std::string_view relation_scope_note() {
  return "integer relations only: a bound-limited search at fixed precision, which cannot decide linear "
         "dependence over algebraic numbers of higher degree";
}

unsigned required_digits(std::size_t n, const Integer& norm_bound) {
  double log_b = std::log10(std::max(1.0, norm_bound.convert_to<double>()));
  return static_cast<unsigned>(std::ceil(10.0 * n + 2.0 * log_b * n));
}

IntegerRelation pslq(std::span<const Real> v, const Integer& norm_bound, const PrecisionContext& ctx) {
  ctx.validate();
  const std::size_t n = v.size();
  if (n < 2) throw DomainError("pslq needs at least two entries");
  if (norm_bound < 1) throw DomainError("pslq needs a positive coefficient bound");
  const unsigned need = required_digits(n, norm_bound);
  if (ctx.digits < need) {
    throw PrecisionError("pslq on " + std::to_string(n) + " entries with bound " + norm_bound.str() + " needs " +
                         std::to_string(need) + " digits, got " + std::to_string(ctx.digits));
  }

  WorkingPrecision wp(ctx.working_digits());
  std::vector<Real> x;
  Real largest(0);
  for (const auto& e : v) largest = std::max(largest, Real(boost::multiprecision::abs(e)));
  for (const auto& e : v) x.push_back(with_precision(e, ctx.working_digits()) / largest);
  const Real zero_tol = ctx.truncation_tolerance();
  for (const auto& e : x) {
    if (boost::multiprecision::abs(e) <= zero_tol) throw DomainError("pslq needs nonzero entries");
  }

  IntegerRelation out;
  out.norm_bound = norm_bound;
  out.digits = ctx.digits;
  const Real detect = pow10(-static_cast<long>(3 * ctx.digits / 4));
  const Real exclusion = boost::multiprecision::sqrt(Real(static_cast<unsigned long>(n))) * to_real(norm_bound);
  const Real gamma = boost::multiprecision::sqrt(Real(4) / 3);

  Pslq state(x);
  // A relation can already show after the initial reduction; steps past that
  // point act on a degenerate H, so every tiny y is checked before stepping.
  auto accept = [&]() {
    std::vector<Integer> best;
    for (std::size_t i = 0; i < n; ++i) {
      if (boost::multiprecision::abs(state.y(i)) >= detect) continue;
      std::vector<Integer> c = state.column(i);
      if (max_abs(c) > norm_bound) continue;
      if (best.empty() || max_abs(c) < max_abs(best)) best = std::move(c);
    }
    if (best.empty()) return false;
    normalize_sign(best);
    out.coefficients = std::move(best);
    out.status = RelationStatus::found;
    out.norm_lower_bound = state.norm_lower_bound();
    WorkingPrecision verify(ctx.working_digits() + 20);
    out.residual = boost::multiprecision::abs(dot(out.coefficients, v));
    out.verified_digits = ctx.digits + 20;
    if (out.residual >= pow10(-static_cast<long>(ctx.digits / 2))) {
      throw PrecisionError("pslq candidate relation failed re-evaluation; the input precision is too low");
    }
    return true;
  };
  if (accept()) return out;
  for (std::size_t it = 1; it <= kMaxIterations; ++it) {
    state.step(gamma);
    out.iterations = it;
    if (accept()) return out;
    Real lower = state.norm_lower_bound();
    if (lower > exclusion) {
      out.status = RelationStatus::excluded_at_bound;
      out.norm_lower_bound = lower;
      return out;
    }
  }
  throw PrecisionError("pslq did not settle within the iteration limit");
}

IntegerRelation find_relation(const VectorSource& source, const Integer& norm_bound, const PrecisionContext& ctx,
                              unsigned verify_extra) {
  std::vector<Real> v = source(ctx);
  IntegerRelation out = pslq(v, norm_bound, ctx);
  if (out.status != RelationStatus::found) return out;
  PrecisionContext fine = ctx.raised(verify_extra);
  std::vector<Real> again = source(fine);
  WorkingPrecision wp(fine.working_digits());
  out.residual = boost::multiprecision::abs(dot(out.coefficients, again));
  out.verified_digits = fine.digits;
  if (out.residual >= pow10(-static_cast<long>(ctx.digits / 2))) {
    throw PrecisionError("relation did not survive recomputation at " + std::to_string(fine.digits) + " digits");
  }
  return out;
}

ConjectureProbe probe_conjecture(std::size_t q, const Integer& norm_bound, const PrecisionContext& ctx) {
  if (q <= 2) throw DomainError("probe_conjecture needs q > 2");
  ConjectureProbe probe;
  probe.q = q;
  for (std::size_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) == 1) probe.residues.push_back(a);
  }
  const auto residues = probe.residues;
  VectorSource source = [q, residues](const PrecisionContext& c) {
    std::vector<Real> v;
    for (std::size_t a : residues) v.push_back(log_gamma(Rational(static_cast<long>(a), static_cast<long>(q)), c));
    return v;
  };
  probe.relation = find_relation(source, norm_bound, ctx, ctx.digits);
  probe.flagged = probe.relation.status == RelationStatus::found;
  return probe;
}

}  // namespace gsc
