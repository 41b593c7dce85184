#include "polysieve/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polysieve/arith.hpp"
#include "polysieve/detail/compensated_sum.hpp"
#include "polysieve/detail/gfp_poly.hpp"
#include "polysieve/errors.hpp"

namespace polysieve {

namespace {

void require_prime(std::uint64_t p, const char* who) {
  if (!is_prime(p)) throw DomainError(std::string(who) + ": modulus base must be prime");
}

Integer lcm_up_to(std::uint64_t n) {
  Integer l = 1;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t pk = p;
    while (pk <= n / p) pk *= p;
    l *= pk;
  }
  return l;
}

}  // namespace

bool series_less_equal(const SeriesValue& a, const SeriesValue& b) {
  if (a.exact && b.exact) return *a.exact <= *b.exact;
  return a.value <= b.value * (1.0 + 1e-12);
}

namespace {

detail::GfpPoly reduced_ascending(const IntPolynomial& poly, std::uint64_t p) {
  const auto& c = poly.coefficients();
  detail::GfpPoly f(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) f[c.size() - 1 - i] = mod_u64(c[i], p);
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

}  // namespace

RootSetModM roots_mod_prime(const IntPolynomial& poly, std::uint64_t p) {
  require_prime(p, "roots_mod_prime");
  if (p > kMaxRootModulus) throw ResourceError("roots_mod_prime: prime exceeds budget");
  RootSetModM out{p, {}};
  const auto f = reduced_ascending(poly, p);
  if (p < kScanLimit || f.empty()) {
    if (p > kDefaultLiftWork) throw ResourceError("roots_mod_prime: every residue is a root and p exceeds the work budget");
    const ModPolynomial reduced(poly, p);
    for (std::uint64_t x = 0; x < p; ++x) {
      if (reduced(x) == 0) out.roots.push_back(x);
    }
    return out;
  }
  out.roots = detail::split_linear(detail::split_part(f, p), p);
  return out;
}

std::uint64_t count_roots_mod_prime(const IntPolynomial& poly, std::uint64_t p) {
  require_prime(p, "count_roots_mod_prime");
  if (p < kScanLimit) return roots_mod_prime(poly, p).count();
  const auto f = reduced_ascending(poly, p);
  if (f.empty()) return p;
  const std::size_t d = detail::degree(f);
  if (d <= 1) return d == 1 ? 1 : 0;
  if (d == 2) {
    // p is odd here; the count is 1 + (disc / p).
    const std::uint64_t disc = add_mod(mul_mod(f[1], f[1], p), p - mul_mod(4 % p, mul_mod(f[2], f[0], p), p), p);
    if (disc == 0) return 1;
    return pow_mod(disc, (p - 1) / 2, p) == 1 ? 2 : 0;
  }
  return detail::degree(detail::split_part(f, p));
}

namespace {

// Roots modulo p * current.modulus among the p preimages of each current root.
RootSetModM lift_once(const IntPolynomial& poly, std::uint64_t p, const RootSetModM& current) {
  const std::uint64_t level = current.modulus;
  const std::uint64_t next_level = level * p;
  const ModPolynomial reduced(poly, next_level);
  RootSetModM next{next_level, {}};
  for (std::uint64_t r : current.roots) {
    for (std::uint64_t t = 0; t < p; ++t) {
      const std::uint64_t x = r + t * level;
      if (reduced(x) == 0) next.roots.push_back(x);
    }
  }
  std::sort(next.roots.begin(), next.roots.end());
  return next;
}

std::uint64_t checked_prime_power(std::uint64_t p, unsigned exponent) {
  std::uint64_t modulus = p;
  for (unsigned j = 1; j < exponent; ++j) {
    if (modulus > kMaxRootModulus / p) throw ResourceError("lift_roots: p^m exceeds exact-arithmetic budget");
    modulus *= p;
  }
  return modulus;
}

}  // namespace

RootSetModM lift_roots(const IntPolynomial& poly, std::uint64_t p, unsigned exponent,
                       std::uint64_t work_budget) {
  require_prime(p, "lift_roots");
  if (exponent == 0) throw DomainError("lift_roots: exponent must be positive");
  checked_prime_power(p, exponent);
  RootSetModM current = roots_mod_prime(poly, p);
  std::uint64_t work = 0;
  for (unsigned j = 1; j < exponent; ++j) {
    work += current.roots.size() * p;
    if (work > work_budget) throw ResourceError("lift_roots: work budget exceeded");
    current = lift_once(poly, p, current);
  }
  return current;
}

std::uint64_t RhoCounter::prime_power(std::uint64_t p, unsigned e) {
  if (e == 0) return 1;
  if (auto it = counts_.find({p, e}); it != counts_.end()) return it->second;
  require_prime(p, "rho");
  checked_prime_power(p, e);
  if (e == 1 && p >= kScanLimit && !frontier_.contains(p)) {
    return counts_[{p, 1}] = count_roots_mod_prime(poly_, p);
  }
  auto it = frontier_.find(p);
  if (it == frontier_.end()) {
    it = frontier_.emplace(p, Frontier{roots_mod_prime(poly_, p), 1}).first;
    counts_[{p, 1}] = it->second.roots.count();
  }
  auto& f = it->second;
  while (f.exponent < e) {
    if (f.roots.roots.size() * p > kDefaultLiftWork) throw ResourceError("rho: work budget exceeded");
    f.roots = lift_once(poly_, p, f.roots);
    ++f.exponent;
    counts_[{p, f.exponent}] = f.roots.count();
  }
  return counts_.at({p, e});
}

RootSetModM RhoCounter::roots(std::uint64_t p, unsigned e) {
  if (e == 0) return RootSetModM{1, {0}};
  auto it = frontier_.find(p);
  if (it == frontier_.end() && e == 1) return roots_mod_prime(poly_, p);
  if (it != frontier_.end() && it->second.exponent > e) return lift_roots(poly_, p, e);
  prime_power(p, e);
  return frontier_.at(p).roots;
}

std::uint64_t RhoCounter::operator()(std::uint64_t m) {
  if (m == 0) throw DomainError("rho: modulus must be positive");
  std::uint64_t result = 1;
  for (const auto& [p, e] : factorize(m)) {
    result *= prime_power(p, e);
    if (result == 0) break;
  }
  return result;
}

std::uint64_t rho(const IntPolynomial& poly, std::uint64_t m) {
  RhoCounter counter(poly);
  return counter(m);
}

std::uint64_t rho_shifted(const IntPolynomial& poly, const Integer& j, std::uint64_t m) {
  return rho(poly.shifted_by_value_at(j), m);
}

std::uint64_t a_exponent(std::uint64_t m, std::uint64_t k) {
  if (m == 0 || k == 0) throw DomainError("a_exponent: m and k must be positive");
  const std::uint64_t c = binomial2(k);
  return (m + c - 1) / c;
}

namespace {

// Fraction-free Gaussian elimination; exact for integer matrices.
Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

VandermondeResult vandermonde_check(const IntPolynomial& poly, const std::vector<Integer>& xs) {
  const std::size_t k = poly.degree();
  if (k == 0) throw DomainError("vandermonde_check: polynomial must have degree >= 1");
  if (xs.size() != k + 1) throw DomainError("vandermonde_check: need deg(P)+1 nodes");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) throw DomainError("vandermonde_check: nodes must be distinct");
    }
  }
  VandermondeResult out;
  out.lhs = poly.leading();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) out.lhs *= xs[i] - xs[j];
  }
  std::vector<std::vector<Integer>> m(k + 1, std::vector<Integer>(k + 1));
  for (std::size_t col = 0; col <= k; ++col) {
    Integer power = 1;
    for (std::size_t row = 0; row < k; ++row) {
      m[row][col] = power;
      power *= xs[col];
    }
    m[k][col] = poly(xs[col]);
  }
  out.det = bareiss_determinant(std::move(m));
  out.ok = abs(out.lhs) == abs(out.det);
  return out;
}

bool spacing_check(const IntPolynomial& poly, std::uint64_t p, unsigned m) {
  RhoCounter counter(poly);
  return spacing_check(counter, p, m);
}

bool spacing_check(RhoCounter& counter, std::uint64_t p, unsigned m) {
  const IntPolynomial& poly = counter.polynomial();
  require_prime(p, "spacing_check");
  const std::uint64_t k = poly.degree();
  if (k == 0) throw DomainError("spacing_check: polynomial must have degree >= 1");
  if (m == 0) throw DomainError("spacing_check: exponent must be positive");
  if (mod_u64(poly.leading(), p) == 0) throw PreconditionError("spacing_check: p divides the leading coefficient");
  std::uint64_t modulus = 1;
  for (unsigned i = 0; i < m; ++i) {
    modulus *= p;
    if (modulus > kMaxSpacingModulus) throw ResourceError("spacing_check: p^m exceeds 10^6");
  }
  std::uint64_t window = 1;
  for (std::uint64_t i = 0; i < a_exponent(m, k); ++i) window *= p;

  if (window >= modulus) {
    // A closed window of one full period starting at a root holds every root
    // of that period plus the root's translate.
    const std::uint64_t r = counter.prime_power(p, m);
    return (r == 0 ? 0 : r + 1) <= k + 2;
  }
  const auto roots = counter.roots(p, m).roots;
  std::vector<std::uint64_t> doubled(roots);
  for (std::uint64_t r : roots) doubled.push_back(r + modulus);
  // A worst window can be assumed to start at a root.
  std::size_t hi = 0;
  for (std::size_t lo = 0; lo < roots.size(); ++lo) {
    if (hi < lo) hi = lo;
    while (hi < doubled.size() && doubled[hi] <= doubled[lo] + window) ++hi;
    if (hi - lo > k + 2) return false;
  }
  return true;
}

RhoProfile rho_profile(const IntPolynomial& poly, std::uint64_t bound) {
  if (bound == 0) throw DomainError("rho_profile: bound must be positive");
  RhoProfile profile{poly, bound, std::vector<std::uint64_t>(bound + 1, 0), {}};
  RhoCounter counter(poly);
  for (std::uint64_t m = 1; m <= bound; ++m) profile.rho[m] = counter(m);

  if (bound <= kExactSeriesLimit) {
    const Integer l = lcm_up_to(bound);
    Integer numerator = 0;
    for (std::uint64_t m = 1; m <= bound; ++m) {
      if (profile.rho[m] != 0) numerator += (l / m) * profile.rho[m];
    }
    Rational exact(numerator, l);
    profile.partial_sum.value = exact.convert_to<double>();
    profile.partial_sum.exact = std::move(exact);
  } else {
    detail::CompensatedSum sum;
    for (std::uint64_t m = 1; m <= bound; ++m) {
      sum.add(static_cast<double>(profile.rho[m]) / static_cast<double>(m));
    }
    profile.partial_sum.value = sum.value();
  }
  return profile;
}

SeriesValue prop1_sum(const IntPolynomial& poly, std::uint64_t bound) {
  return rho_profile(poly, bound).partial_sum;
}

SeriesValue euler_majorant(const IntPolynomial& poly, std::uint64_t bound) {
  if (bound == 0) throw DomainError("euler_majorant: bound must be positive");
  RhoCounter counter(poly);
  const bool exact = bound <= kExactSeriesLimit;
  Rational product = 1;
  double approx = 1.0;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    Rational factor = 1;
    double factor_approx = 1.0;
    std::uint64_t pm = 1;
    for (unsigned e = 1; pm <= bound / p; ++e) {
      pm *= p;
      const std::uint64_t r = counter.prime_power(p, e);
      if (exact) factor += Rational(r, pm);
      factor_approx += static_cast<double>(r) / static_cast<double>(pm);
    }
    if (exact) product *= factor;
    approx *= factor_approx;
  }
  SeriesValue out;
  if (exact) {
    out.value = product.convert_to<double>();
    out.exact = std::move(product);
  } else {
    out.value = approx;
  }
  return out;
}

LocalFactorCheck local_factor_check(const IntPolynomial& poly, std::uint64_t p, std::uint64_t limit) {
  require_prime(p, "local_factor_check");
  const std::uint64_t k = poly.degree();
  if (k == 0) throw DomainError("local_factor_check: polynomial must have degree >= 1");
  if (mod_u64(poly.leading(), p) == 0) throw PreconditionError("local_factor_check: p divides the leading coefficient");
  RhoCounter counter(poly);
  LocalFactorCheck out;
  out.partial = 1;
  std::uint64_t pm = 1;
  for (unsigned e = 1; pm <= limit / p; ++e) {
    pm *= p;
    out.partial += Rational(counter.prime_power(p, e), pm);
  }
  const auto c = binomial2(k);
  out.bound = Rational(1) + Rational(theta(k), p) + Rational((k + 2) * c, p * (p - 1));
  out.ok = out.partial <= out.bound;
  return out;
}

}  // namespace polysieve
