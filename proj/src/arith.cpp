#include "polysieve/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "polysieve/errors.hpp"

namespace polysieve {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t abs_u64(std::int64_t n) {
  return n < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned r) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor
// of the odd composite n.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return add_mod(mul_mod(x, x, n), c % n, n); };
    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    const std::uint64_t batch = 128;
    for (std::uint64_t len = 1; g == 1; len <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < len; ++i) y = f(y);
      for (std::uint64_t k = 0; k < len && g == 1; k += batch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(batch, len - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // Batched product collapsed; step one at a time from the saved point.
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (n < kTrialLimit || is_prime(n)) {
    if (n < kTrialLimit) {
      for (std::uint64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
          out.push_back(d);
          n /= d;
        }
      }
      if (n > 1) out.push_back(n);
    } else {
      out.push_back(n);
    }
    return;
  }
  std::uint64_t d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

Factorization::Factorization(std::uint64_t value, std::vector<PrimePower> factors)
    : value_(value), factors_(std::move(factors)) {
  if (value_ == 0) throw DomainError("Factorization: value must be positive");
  unsigned __int128 product = 1;
  std::uint64_t prev = 0;
  for (const auto& [p, e] : factors_) {
    if (p <= prev || e == 0 || !is_prime(p))
      throw DomainError("Factorization: factors must be increasing primes with positive exponents");
    prev = p;
    for (unsigned i = 0; i < e; ++i) {
      product *= p;
      if (product > value_) throw DomainError("Factorization: product exceeds value");
    }
  }
  if (product != value_) throw DomainError("Factorization: product does not match value");
}

std::vector<std::uint64_t> Factorization::divisors() const {
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : factors_) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  if (n < (std::uint64_t{1} << 32)) {
    // Deterministic below 4759123141.
    for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
      if (!miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
  }
  // Deterministic for all 64-bit n.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (!miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  if (n > kMaxFactorizable) throw DomainError("factorize: n exceeds 2^63");
  std::vector<std::uint64_t> primes;
  // Strip small primes first so the rho stage only sees large cofactors.
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  split(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> factors;
  std::uint64_t value = 1;
  for (std::uint64_t p : primes) {
    value *= p;
    if (!factors.empty() && factors.back().prime == p) {
      ++factors.back().exponent;
    } else {
      factors.push_back({p, 1});
    }
  }
  return Factorization(value, std::move(factors));
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi: n must be positive");
  std::uint64_t result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

int moebius(std::uint64_t n) {
  if (n == 0) throw DomainError("moebius: n must be positive");
  const auto f = factorize(n);
  for (const auto& [p, e] : f) {
    if (e > 1) return 0;
  }
  return f.size() % 2 == 0 ? 1 : -1;
}

unsigned omega(std::int64_t n) {
  if (n == 0) throw DomainError("omega: undefined at 0");
  return static_cast<unsigned>(factorize(abs_u64(n)).size());
}

unsigned omega(const Integer& n) {
  if (n == 0) throw DomainError("omega: undefined at 0");
  Integer a = abs(n);
  if (a > Integer(kMaxFactorizable)) throw ResourceError("omega: |n| exceeds 2^63");
  return static_cast<unsigned>(factorize(a.convert_to<std::uint64_t>()).size());
}

std::uint64_t binomial2(std::uint64_t k) { return k * (k + 1) / 2; }

std::uint64_t theta(std::uint64_t k) {
  if (k == 0) throw DomainError("theta: k must be positive");
  return k * binomial2(k);
}

std::uint64_t gcd_conv(std::int64_t a, std::uint64_t q) {
  if (q == 0) throw DomainError("gcd_conv: q must be positive");
  return std::gcd(mod_u64(a, q), q);
}

std::uint64_t gcd_conv(const Integer& a, std::uint64_t q) {
  if (q == 0) throw DomainError("gcd_conv: q must be positive");
  return std::gcd(mod_u64(a, q), q);
}

unsigned valuation(std::int64_t n, std::uint64_t p) { return valuation(Integer(n), p); }

unsigned valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) throw DomainError("valuation: n must be nonzero");
  if (!is_prime(p)) throw DomainError("valuation: p must be prime");
  Integer a = abs(n);
  unsigned e = 0;
  while (a % p == 0) {
    a /= p;
    ++e;
  }
  return e;
}

namespace {

std::int64_t ramanujan_closed_form(std::uint64_t q, std::uint64_t g) {
  const std::uint64_t r = q / g;
  const int mu = moebius(r);
  if (mu == 0) return 0;
  return mu * static_cast<std::int64_t>(euler_phi(q) / euler_phi(r));
}

}  // namespace

std::int64_t ramanujan_sum(std::uint64_t q, std::int64_t n) {
  return ramanujan_closed_form(q, gcd_conv(n, q));
}

std::int64_t ramanujan_sum(std::uint64_t q, const Integer& n) {
  return ramanujan_closed_form(q, gcd_conv(n, q));
}

ArithTable::ArithTable(std::uint64_t limit)
    : limit_(limit), phi_(limit + 1), mu_(limit + 1, 1), spf_(limit + 1, 0) {
  // Linear sieve.
  if (limit >= 1) phi_[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
      phi_[i] = i - 1;
      mu_[i] = -1;
    }
    for (std::uint64_t p : primes_) {
      if (p > spf_[i] || p * i > limit) break;
      spf_[p * i] = p;
      if (p == spf_[i]) {
        phi_[p * i] = phi_[i] * p;
        mu_[p * i] = 0;
      } else {
        phi_[p * i] = phi_[i] * (p - 1);
        mu_[p * i] = -mu_[i];
      }
    }
  }
}

std::int64_t ArithTable::ramanujan_from_residue(std::uint64_t q, std::uint64_t r) const {
  const std::uint64_t g = std::gcd(r, q);
  const std::uint64_t m = q / g;
  if (mu_[m] == 0) return 0;
  return mu_[m] * static_cast<std::int64_t>(phi_[q] / phi_[m]);
}

}  // namespace polysieve
