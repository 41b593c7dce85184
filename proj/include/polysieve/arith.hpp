#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer kernels: factorization and the multiplicative
 * functions (phi, mu, omega) that the sieve bounds are written in.
 *
 * Everything here works on 64-bit words. Factorization uses trial division
 * below 10^6 and deterministic Miller-Rabin plus Brent's variant of
 * Pollard rho above, which covers every n <= 2^63.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "polysieve/integer.hpp"

namespace polysieve {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class Factorization {
 public:
  Factorization() = default;
  /// Validates that `factors` is strictly increasing in prime, every prime
  /// passes is_prime, and the product equals `value`.
  Factorization(std::uint64_t value, std::vector<PrimePower> factors);

  std::uint64_t value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  auto begin() const { return factors_.begin(); }
  auto end() const { return factors_.end(); }
  std::size_t size() const { return factors_.size(); }

  /// All positive divisors in increasing order.
  std::vector<std::uint64_t> divisors() const;

 private:
  std::uint64_t value_ = 1;
  std::vector<PrimePower> factors_;
};

inline constexpr std::uint64_t kMaxFactorizable = std::uint64_t{1} << 63;

bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
unsigned omega(std::int64_t n);
unsigned omega(const Integer& n);

/// theta(k) = k * C(k+1, 2), the exponent of log Q contributed by degree k.
std::uint64_t theta(std::uint64_t k);
std::uint64_t binomial2(std::uint64_t k);  // C(k+1, 2)

/// gcd(|a|, q) with the convention gcd(0, q) = q.
std::uint64_t gcd_conv(std::int64_t a, std::uint64_t q);
std::uint64_t gcd_conv(const Integer& a, std::uint64_t q);

unsigned valuation(std::int64_t n, std::uint64_t p);
unsigned valuation(const Integer& n, std::uint64_t p);

/// Ramanujan sum c_q(n) via mu(q/g) phi(q) / phi(q/g), g = gcd_conv(n, q).
std::int64_t ramanujan_sum(std::uint64_t q, std::int64_t n);
std::int64_t ramanujan_sum(std::uint64_t q, const Integer& n);

/// Sieved phi and mu on [0, limit]; used by the hot loops in farey/sieve
/// where the per-call factorization would dominate.
class ArithTable {
 public:
  explicit ArithTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::uint64_t phi(std::uint64_t n) const { return phi_[n]; }
  int mu(std::uint64_t n) const { return mu_[n]; }
  std::uint64_t smallest_prime_factor(std::uint64_t n) const { return spf_[n]; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  /// c_q(n) given only the residue r = n mod q (0 <= r < q <= limit).
  std::int64_t ramanujan_from_residue(std::uint64_t q, std::uint64_t r) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> phi_;
  std::vector<int> mu_;
  std::vector<std::uint64_t> spf_;
  std::vector<std::uint64_t> primes_;
};

}  // namespace polysieve
