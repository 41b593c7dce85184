#include "polysieve/sharpness.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "polysieve/arith.hpp"
#include "polysieve/polynomial.hpp"
#include "polysieve/sieve.hpp"

namespace polysieve {

namespace {

void require_power_prime(std::uint64_t n, std::uint64_t q, const char* who) {
  if (n < 2) throw DomainError(std::string(who) + ": exponent must be >= 2");
  if (!is_prime(q)) throw DomainError(std::string(who) + ": q must be prime");
  if (q > 1'000'000) throw ResourceError(std::string(who) + ": q exceeds enumeration budget");
}

std::vector<std::complex<double>> unit_roots(std::uint64_t q) {
  std::vector<std::complex<double>> roots(q);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
  for (std::uint64_t t = 0; t < q; ++t) roots[t] = std::polar(1.0, step * static_cast<double>(t));
  return roots;
}

std::vector<std::uint64_t> powers_mod(std::uint64_t n, std::uint64_t q) {
  std::vector<std::uint64_t> pw(q + 1);
  for (std::uint64_t i = 0; i <= q; ++i) pw[i] = pow_mod(i, n, q);
  return pw;
}

}  // namespace

void PowerSumInstance::validate() const {
  require_power_prime(exponent, prime, "PowerSumInstance");
  if (twist == 0 || twist >= prime) throw DomainError("PowerSumInstance: twist p must lie in [1, q-1]");
  if (linear >= prime) throw DomainError("PowerSumInstance: linear twist k must lie in [0, q-1]");
}

std::complex<double> complete_sum(const PowerSumInstance& inst, std::uint64_t m) {
  inst.validate();
  const std::uint64_t q = inst.prime;
  if (m == 0 || m > q) throw DomainError("complete_sum: m must lie in [1, q]");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
  std::complex<double> s = 0.0;
  for (std::uint64_t i = 1; i <= m; ++i) {
    const std::uint64_t phase =
        add_mod(mul_mod(inst.twist, pow_mod(i, inst.exponent, q), q), mul_mod(inst.linear, i % q, q), q);
    s += std::polar(1.0, step * static_cast<double>(phase));
  }
  return s;
}

std::uint64_t solution_count(std::uint64_t n, std::uint64_t q) {
  require_power_prime(n, q, "solution_count");
  const auto pw = powers_mod(n, q);
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= q; ++i) {
    for (std::uint64_t j = 1; j <= q; ++j) count += pw[i] == pw[j];
  }
  return count;
}

std::uint64_t solution_count_closed_form(std::uint64_t n, std::uint64_t q) {
  require_power_prime(n, q, "solution_count_closed_form");
  return 1 + std::gcd(n, q - 1) * (q - 1);
}

std::int64_t power_sum_energy(std::uint64_t n, std::uint64_t q) {
  const auto nq = static_cast<std::int64_t>(solution_count(n, q));
  const auto qq = static_cast<std::int64_t>(q);
  return qq * nq - qq * qq;
}

Ex1Result ex1_check(std::uint64_t n, std::uint64_t q) {
  const std::int64_t energy = power_sum_energy(n, q);
  if ((q - 1) % n != 0) {
    throw Ex1Inapplicable("ex1_check: requires q = 1 mod n; general value is (gcd(n, q-1) - 1) q (q-1)", energy);
  }
  const auto qq = static_cast<std::int64_t>(q);
  Ex1Result out{energy, static_cast<std::int64_t>(n - 1) * qq * (qq - 1), false};
  out.ok = out.lhs == out.rhs;
  return out;
}

double max_complete_sum(std::uint64_t n, std::uint64_t q) {
  require_power_prime(n, q, "weil_check");
  if (q <= n) throw PreconditionError("weil_check: requires q > n");
  const auto roots = unit_roots(q);
  const auto pw = powers_mod(n, q);
  double worst = 0.0;
  for (std::uint64_t p = 1; p < q; ++p) {
    for (std::uint64_t k = 0; k < q; ++k) {
      std::complex<double> s = 0.0;
      for (std::uint64_t i = 1; i <= q; ++i) s += roots[add_mod(mul_mod(p, pw[i], q), mul_mod(k, i % q, q), q)];
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

bool weil_check(std::uint64_t n, std::uint64_t q) {
  const double bound = static_cast<double>(n - 1) * std::sqrt(static_cast<double>(q));
  return max_complete_sum(n, q) <= bound + kSharpnessSlack;
}

double max_incomplete_sum(std::uint64_t n, std::uint64_t q) {
  require_power_prime(n, q, "incomplete_check");
  if (q <= n) throw PreconditionError("incomplete_check: requires q > n");
  const auto roots = unit_roots(q);
  const auto pw = powers_mod(n, q);
  double worst = 0.0;
  for (std::uint64_t p = 1; p < q; ++p) {
    std::complex<double> s = 0.0;
    for (std::uint64_t m = 1; m <= q; ++m) {
      s += roots[mul_mod(p, pw[m], q)];
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

bool incomplete_check(std::uint64_t n, std::uint64_t q) {
  const double sq = std::sqrt(static_cast<double>(q));
  const double bound = 2.0 * static_cast<double>(n - 1) * sq * std::log(static_cast<double>(q));
  return max_incomplete_sum(n, q) <= bound + kSharpnessSlack;
}

LowerBoundResult lower_bound_demo(std::uint64_t n, std::uint64_t order, std::uint64_t length) {
  if (n < 2) throw DomainError("lower_bound_demo: exponent must be >= 2");
  if (order < n * n) throw PreconditionError("lower_bound_demo: requires Q >= n^2");
  const double log_q = std::log(static_cast<double>(order));
  const double q = static_cast<double>(order);
  const double len = static_cast<double>(length);
  if (len < 8.0 * static_cast<double>(n - 1) * q * log_q)
    throw PreconditionError("lower_bound_demo: requires N >= 8 (n-1) Q log Q");

  std::vector<Integer> coeffs(n + 1, Integer(0));
  coeffs.front() = 1;
  const auto inst = SieveInstance::with_unit_weights(IntPolynomial(std::move(coeffs)), order, 0, length);
  LowerBoundResult out;
  out.lhs = lhs_numeric(inst);
  out.floor = static_cast<double>(n - 1) * len * len * q / (16.0 * log_q);
  out.ok = out.lhs >= out.floor;
  return out;
}

}  // namespace polysieve
