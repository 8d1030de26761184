#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/cyclotomic.hpp"
#include "gsc/numeric.hpp"
#include "gsc/periodic.hpp"
#include "gsc/precision.hpp"

namespace gsc {

enum class IdentityId {
  lemma1_even,
  lemma1_odd,
  lemma2,
  lemma3,
  identity_lemma_k,
  residue_sum,
  fourier_roundtrip,
  pole_residue,
  d_kl_expansion,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
const std::vector<IdentityId>& all_identities();

/// Outcome of one identity over a batch of generated inputs. The residual of
/// an instance is |left - right| with both sides computed by separate routes.
struct IdentityReport {
  std::string identity_id;
  std::size_t q = 0;
  std::size_t instances = 0;
  Real max_residual;
  /// Input and parameters of the instance with the largest residual.
  std::string worst_case;
  unsigned digits = 0;
  std::uint64_t seed = 0;
  /// max_residual < 10^{-digits/2}
  bool pass = false;
};

/// 10^{-digits/2}, the verdict threshold.
Real pass_threshold(const PrecisionContext& ctx);

/// Runs `trials` random admissible instances of an identity for modulus q.
/// residue_sum checks k = 0, 1, 2 once each and ignores `trials`;
/// identity_lemma_k checks k = 0, 1, 2 on every trial.
/// Throws DomainError when q cannot satisfy the identity's hypotheses.
IdentityReport verify_identity(IdentityId id, std::size_t q, std::size_t trials, std::uint64_t seed,
                               const PrecisionContext& ctx);

/// Random rational tables with numerators and denominators bounded by 100.
class FunctionSampler {
 public:
  explicit FunctionSampler(std::uint64_t seed) : rng_(seed) {}

  Rational entry();
  /// Any table (at least one nonzero entry).
  std::vector<Rational> any(std::size_t q);
  /// sum f(a) = 0: q-1 free entries and the last one solved.
  std::vector<Rational> zero_sum(std::size_t q);
  /// sum f(a) != 0.
  std::vector<Rational> nonzero_sum(std::size_t q);
  /// f(q - n) = -f(n), not identically zero; q >= 3.
  std::vector<Rational> odd(std::size_t q);
  /// f(q - n) = f(n), not identically zero.
  std::vector<Rational> even(std::size_t q);
  /// Odd and zero on residues sharing a factor with q.
  std::vector<Rational> odd_dirichlet(std::size_t q);
  /// Uniform rational in [lo, hi] with denominator `den`.
  Rational uniform(const Rational& lo, const Rational& hi, long den = 1000);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// The quantity d = B_{1,f^_l} L'(1, f_k) - B_{1,f^_k} L'(1, f_l)
/// computed twice: from L'(1, .) evaluated by the Hurwitz engine, and from its
/// log-Gamma expansion -i pi sum_b coeff(b) log Gamma(b/q) with
/// coeff(b) = B_{1,f^_l} f^_k(b) - B_{1,f^_k} f^_l(b).
struct DklResult {
  Complex direct;
  Complex expansion;
  std::vector<Complex> coefficients;
  std::vector<CyclotomicNumber> exact_coefficients;
  /// The coefficient of the constant, B_{1,f^_l} B_{1,f^_k} - B_{1,f^_k} B_{1,f^_l},
  /// formed in exact cyclotomic arithmetic.
  CyclotomicNumber constant_coefficient{1};
  bool constant_cancels = false;
  Real residual;
};

/// Both functions odd with rational tables and the same modulus.
DklResult d_kl(const PeriodicFunction& fk, const PeriodicFunction& fl, const PrecisionContext& ctx);

/// Same quantity for f_k = inverse_fourier(g_k), given the exact rational
/// transforms g. Used when f^ must be of Dirichlet type for composite q.
DklResult d_kl_from_transforms(const std::vector<Rational>& gk, const std::vector<Rational>& gl,
                               const PrecisionContext& ctx);

struct NonvanishingCheck {
  Complex value;
  /// |L(1, f)| - 10^{-digits/2}; positive means certified nonzero.
  Real margin;
};

/// L(1, f) for sum f(a) = 0 (PoleError otherwise) with its certification margin.
NonvanishingCheck check_nonvanishing(const PeriodicFunction& f, const PrecisionContext& ctx);

}  // namespace gsc
