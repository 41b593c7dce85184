#pragma once

/**
 * @file sieve.hpp
 * @brief The quadratic form  sum_{x in F(Q)} |sum_{i in I} a_i e(x P(i))|^2
 * evaluated two ways, and the chain of majorants leading to the
 * Q (N + Q) (log Q)^(omega(c0) + theta(k)) ||a||^2 envelope.
 *
 * The numeric path sums exponentials directly, reducing p P(i) mod q
 * exactly before any floating-point work. The exact path expands the
 * square into sum a_i a_j K(i, j) with integer kernels; it needs integer
 * weights.
 */

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "polysieve/integer.hpp"
#include "polysieve/polynomial.hpp"

namespace polysieve {

struct EvalBudget {
  /// Cap on |F(Q)| * N for the numeric path and on N^2 for the kernel path.
  std::uint64_t max_terms = 10'000'000;
};

/// Interval I = {M+1, ..., M+N} with one weight per point.
class SieveInstance {
 public:
  SieveInstance(IntPolynomial poly, std::uint64_t order, std::int64_t start, std::uint64_t length,
                std::vector<std::complex<double>> weights);
  static SieveInstance with_unit_weights(IntPolynomial poly, std::uint64_t order, std::int64_t start,
                                         std::uint64_t length);
  static SieveInstance with_integer_weights(IntPolynomial poly, std::uint64_t order, std::int64_t start,
                                            const std::vector<std::int64_t>& weights);

  const IntPolynomial& polynomial() const { return poly_; }
  std::uint64_t order() const { return order_; }
  std::int64_t start() const { return start_; }
  std::uint64_t length() const { return length_; }
  const std::vector<std::complex<double>>& weights() const { return weights_; }

  /// The integer i = M + 1 + t for position t in [0, N).
  std::int64_t point(std::size_t t) const { return start_ + 1 + static_cast<std::int64_t>(t); }
  double norm2() const;
  /// The weights as integers when every weight is an exact integer.
  std::optional<std::vector<std::int64_t>> integer_weights() const;

 private:
  IntPolynomial poly_;
  std::uint64_t order_;
  std::int64_t start_;
  std::uint64_t length_;
  std::vector<std::complex<double>> weights_;
};

double lhs_numeric(const SieveInstance& inst, const EvalBudget& budget = {});
Integer lhs_exact(const SieveInstance& inst, const EvalBudget& budget = {});

struct RowSup {
  std::int64_t index = 0;  // the maximizing j (smallest on ties)
  std::int64_t value = 0;  // sum_i |K(i, j)|
};
RowSup row_sup(const SieveInstance& inst, const EvalBudget& budget = {});

struct RowSupMajorant {
  std::int64_t index = 0;
  double value = 0.0;  // 2Q (N+Q) sum_{k <= Q} rho_j(k) / k
};
RowSupMajorant row_sup_majorant(const SieveInstance& inst);

/// log Q for Q >= 3; for Q in {1, 2} returns 1 and sets `guarded`.
double guarded_log(std::uint64_t q, bool& guarded);

struct SieveReport {
  double lhs = 0.0;
  std::optional<Integer> lhs_exact;
  double norm2 = 0.0;
  unsigned envelope_exponent = 0;  // omega(c0) + theta(k)
  double log_factor = 0.0;
  bool log_guarded = false;
  double rhs_envelope = 0.0;
  double ratio = 0.0;
  std::optional<RowSup> row_sup;
  RowSupMajorant row_sup_bound;
  /// lhs <= row_sup ||a||^2 <= row_sup_bound ||a||^2, when row_sup was computed.
  std::optional<bool> chain_ok;
};

SieveReport theorem1_report(const SieveInstance& inst, const EvalBudget& budget = {});

/// omega(c0) + theta(deg P); requires deg P >= 1.
unsigned envelope_exponent(const IntPolynomial& poly);

}  // namespace polysieve
