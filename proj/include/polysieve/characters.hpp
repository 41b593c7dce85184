#pragma once

/**
 * @file characters.hpp
 * @brief Dirichlet characters modulo d and the character-sum form
 *
 *   sum_{d <= D} phi(d)/d sum_{chi primitive mod d} |sum_{i in I} a_i chi(P(i))|^2.
 *
 * Characters are built from the CRT decomposition of (Z/dZ)^*: a primitive
 * root for odd prime powers and for 2, 4, and the generators -1, 5 for 2^e
 * with e >= 3. Values are kept as exponents v in [0, L) meaning e(v / L),
 * where L is the exponent of the group; -1 marks residues not coprime to d.
 */

#include <complex>
#include <cstdint>
#include <vector>

#include "polysieve/polynomial.hpp"
#include "polysieve/sieve.hpp"

namespace polysieve {

struct DirichletCharacter {
  std::vector<std::int64_t> exponents;  // per residue; -1 where gcd(x, d) > 1
  std::uint64_t conductor = 1;
  bool primitive = false;
};

class CharacterTable {
 public:
  explicit CharacterTable(std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  /// Exponent L of (Z/dZ)^*; character values are L-th roots of unity.
  std::uint64_t group_exponent() const { return group_exponent_; }
  const std::vector<DirichletCharacter>& characters() const { return chars_; }
  std::size_t size() const { return chars_.size(); }
  std::size_t primitive_count() const;

  /// chi(x) as a complex number; 0 when gcd(x, d) > 1.
  std::complex<double> value(std::size_t index, std::uint64_t residue) const;

 private:
  std::uint64_t modulus_;
  std::uint64_t group_exponent_ = 1;
  std::vector<DirichletCharacter> chars_;
};

inline CharacterTable character_table(std::uint64_t modulus) { return CharacterTable(modulus); }

/// Number of primitive characters mod d: sum_{e | d} mu(d/e) phi(e).
std::int64_t primitive_character_count(std::uint64_t modulus);

/// The character-sum form over an interval with weights; the SieveInstance's
/// order field is reused as D.
double corollary_lhs(const SieveInstance& inst, const EvalBudget& budget = {});

struct CorollaryReport {
  double lhs = 0.0;
  double norm2 = 0.0;
  unsigned envelope_exponent = 0;
  double log_factor = 0.0;
  bool log_guarded = false;
  double rhs_envelope = 0.0;  // D (N + D) (log D)^(omega(c0) + theta(k)) ||a||^2
  double ratio = 0.0;
};

CorollaryReport corollary_report(const SieveInstance& inst, const EvalBudget& budget = {});

}  // namespace polysieve
