#pragma once

/**
 * @file sharpness.hpp
 * @brief Exponential sums of P(T) = T^n over a prime field, used to show
 * the sieve envelope cannot be improved beyond the logarithmic factor.
 */

#include <complex>
#include <cstdint>

#include "polysieve/errors.hpp"

namespace polysieve {

/// P(T) = T^n twisted as e((p i^n + k i) / q), q prime, gcd(p, q) = 1.
struct PowerSumInstance {
  std::uint64_t exponent;  // n >= 2
  std::uint64_t prime;     // q
  std::uint64_t twist;     // p in [1, q-1]
  std::uint64_t linear;    // k in [0, q-1]

  void validate() const;
};

/// sum_{1 <= i <= m} e((p i^n + k i) / q), 1 <= m <= q.
std::complex<double> complete_sum(const PowerSumInstance& inst, std::uint64_t m);

/// #{(i, j) in [1, q]^2 : i^n = j^n mod q}, by enumeration.
std::uint64_t solution_count(std::uint64_t n, std::uint64_t q);
/// 1 + gcd(n, q-1) (q-1).
std::uint64_t solution_count_closed_form(std::uint64_t n, std::uint64_t q);

/// q N_q - q^2 = sum_{1 <= p < q} |sum_{i <= q} e(p i^n / q)|^2, exactly.
std::int64_t power_sum_energy(std::uint64_t n, std::uint64_t q);

struct Ex1Result {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;  // (n-1) q (q-1)
  bool ok = false;
};

/// Thrown by ex1_check when q != 1 mod n; carries q N_q - q^2 = (g-1) q (q-1).
class Ex1Inapplicable : public PreconditionError {
 public:
  Ex1Inapplicable(const std::string& what, std::int64_t general_value)
      : PreconditionError(what), general_value_(general_value) {}
  std::int64_t general_value() const { return general_value_; }

 private:
  std::int64_t general_value_;
};

Ex1Result ex1_check(std::uint64_t n, std::uint64_t q);

inline constexpr double kSharpnessSlack = 1e-6;

/// |complete_sum| <= (n-1) sqrt(q) for all p in [1, q-1], k in [0, q-1].
bool weil_check(std::uint64_t n, std::uint64_t q);
/// |sum_{i <= m} e(p i^n / q)| <= 2 (n-1) sqrt(q) log q for all p, m.
bool incomplete_check(std::uint64_t n, std::uint64_t q);

/// Largest |complete sum| over all twists; reported alongside weil_check.
double max_complete_sum(std::uint64_t n, std::uint64_t q);
double max_incomplete_sum(std::uint64_t n, std::uint64_t q);

struct LowerBoundResult {
  double lhs = 0.0;
  double floor = 0.0;  // (n-1) N^2 Q / (16 log Q)
  bool ok = false;
};

LowerBoundResult lower_bound_demo(std::uint64_t n, std::uint64_t order, std::uint64_t length);

}  // namespace polysieve
