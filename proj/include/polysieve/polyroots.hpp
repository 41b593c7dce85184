#pragma once

/**
 * @file polyroots.hpp
 * @brief Zeros of an integer polynomial modulo m.
 *
 * rho(m) = #{ l mod m : P(l) = 0 mod m } is multiplicative, so it is
 * computed one prime power at a time. Roots modulo p^(j+1) are found among
 * the p preimages of each root modulo p^j; every preimage is evaluated,
 * which also covers roots where P' vanishes and Hensel's lemma says nothing.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polysieve/integer.hpp"
#include "polysieve/polynomial.hpp"

namespace polysieve {

/// Largest modulus for which roots are enumerated exactly.
inline constexpr std::uint64_t kMaxRootModulus = std::uint64_t{1} << 62;
/// Cap on polynomial evaluations spent in a single lift.
inline constexpr std::uint64_t kDefaultLiftWork = 50'000'000;
/// Primes below this are scanned exhaustively; above it roots come from
/// gcd(P, T^p - T) and equal-degree splitting.
inline constexpr std::uint64_t kScanLimit = 4096;
/// Modulus cap for the spacing check.
inline constexpr std::uint64_t kMaxSpacingModulus = 1'000'000;

struct RootSetModM {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> roots;  // sorted, each in [0, modulus)

  std::size_t count() const { return roots.size(); }
};

/// An exact rational when the accumulation stayed small enough, and its
/// double value either way.
struct SeriesValue {
  std::optional<Rational> exact;
  double value = 0.0;
};

/// Compares two series values exactly when both carry an exact part.
bool series_less_equal(const SeriesValue& a, const SeriesValue& b);

RootSetModM roots_mod_prime(const IntPolynomial& poly, std::uint64_t p);
/// rho(p) without materializing the roots when p is large.
std::uint64_t count_roots_mod_prime(const IntPolynomial& poly, std::uint64_t p);
RootSetModM lift_roots(const IntPolynomial& poly, std::uint64_t p, unsigned exponent,
                       std::uint64_t work_budget = kDefaultLiftWork);

std::uint64_t rho(const IntPolynomial& poly, std::uint64_t m);
/// rho of P(T) - P(j) at m.
std::uint64_t rho_shifted(const IntPolynomial& poly, const Integer& j, std::uint64_t m);

/// Memoizes rho(p^e) for one polynomial. Not thread-safe; use one per thread.
class RhoCounter {
 public:
  explicit RhoCounter(IntPolynomial poly) : poly_(std::move(poly)) {}

  const IntPolynomial& polynomial() const { return poly_; }
  std::uint64_t prime_power(std::uint64_t p, unsigned e);
  std::uint64_t operator()(std::uint64_t m);
  /// Roots modulo p^e; reuses the lifting frontier when it sits at e.
  RootSetModM roots(std::uint64_t p, unsigned e);

 private:
  struct Frontier {
    RootSetModM roots;
    unsigned exponent;
  };
  IntPolynomial poly_;
  std::map<std::pair<std::uint64_t, unsigned>, std::uint64_t> counts_;
  std::map<std::uint64_t, Frontier> frontier_;
};

/// ceil(m / C(k+1, 2)).
std::uint64_t a_exponent(std::uint64_t m, std::uint64_t k);

struct VandermondeResult {
  Integer lhs;  // c0 * prod_{i<j} (x_i - x_j)
  Integer det;
  bool ok = false;  // |lhs| == |det|
};

VandermondeResult vandermonde_check(const IntPolynomial& poly, const std::vector<Integer>& xs);

/// True iff every closed window of length p^a(m,k) holds at most k+2 roots of
/// P modulo p^m, roots extended periodically over [0, 2 p^m).
bool spacing_check(const IntPolynomial& poly, std::uint64_t p, unsigned m);
/// Same check, drawing root counts and roots from a shared counter.
bool spacing_check(RhoCounter& counter, std::uint64_t p, unsigned m);

struct RhoProfile {
  IntPolynomial polynomial;
  std::uint64_t bound = 1;
  std::vector<std::uint64_t> rho;  // rho[m] for 1 <= m <= bound; rho[0] unused
  SeriesValue partial_sum;         // sum_{m <= bound} rho(m) / m
};

/// Exact rational accumulation up to this bound, compensated doubles above.
inline constexpr std::uint64_t kExactSeriesLimit = 1000;

RhoProfile rho_profile(const IntPolynomial& poly, std::uint64_t bound);
SeriesValue prop1_sum(const IntPolynomial& poly, std::uint64_t bound);

/// prod_{p <= Q} sum_{p^m <= Q} rho(p^m) / p^m.
SeriesValue euler_majorant(const IntPolynomial& poly, std::uint64_t bound);

struct LocalFactorCheck {
  Rational partial;  // sum_{p^m <= limit} rho(p^m) / p^m, m >= 0
  Rational bound;    // 1 + theta(k)/p + (k+2) C(k+1,2) / (p (p-1))
  bool ok = false;
};

/// Per-prime series bound for p not dividing c0.
LocalFactorCheck local_factor_check(const IntPolynomial& poly, std::uint64_t p,
                                    std::uint64_t limit = kMaxSpacingModulus);

}  // namespace polysieve
