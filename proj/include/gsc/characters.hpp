#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gsc/periodic.hpp"

namespace gsc {

/// Largest modulus dirichlet_characters accepts.
inline constexpr std::size_t kMaxCharacterModulus = 10000;

namespace detail {
struct UnitGroup;
}

/// One Dirichlet character mod q, stored as exact phases: chi(n) is
/// e^{2 pi i phase(n) / exponent} for gcd(n, q) = 1 and 0 otherwise.
class DirichletCharacter {
 public:
  std::size_t modulus() const;
  /// Common denominator of all phases (the exponent of (Z/q)^*).
  std::size_t exponent() const;
  /// Phase numerator in [0, exponent), or -1 when gcd(n, q) > 1.
  long long phase(long long n) const;

  bool is_odd() const { return odd_; }
  bool is_primitive() const { return conductor_ == modulus(); }
  std::size_t conductor() const { return conductor_; }
  bool is_principal() const;

  /// Value table at the working precision of ctx.
  PeriodicFunction values(const PrecisionContext& ctx) const;

 private:
  friend class CharacterTable;
  DirichletCharacter(std::shared_ptr<const detail::UnitGroup> group, std::vector<std::size_t> exps);

  std::shared_ptr<const detail::UnitGroup> group_;
  std::vector<std::size_t> exps_;
  bool odd_ = false;
  std::size_t conductor_ = 1;
};

/// All phi(q) characters mod q. Entry 0 is the principal character.
class CharacterTable {
 public:
  /// 3 <= q <= 10^4.
  explicit CharacterTable(std::size_t q);

  std::size_t modulus() const { return q_; }
  const std::vector<DirichletCharacter>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const DirichletCharacter& operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::size_t q_;
  std::vector<DirichletCharacter> entries_;
};

inline CharacterTable dirichlet_characters(std::size_t q) { return CharacterTable(q); }

/// Euler's totient by trial division.
std::size_t euler_phi(std::size_t n);

}  // namespace gsc
