#include "polysieve/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "polysieve/arith.hpp"
#include "polysieve/characters.hpp"
#include "polysieve/errors.hpp"
#include "polysieve/farey.hpp"
#include "polysieve/polyroots.hpp"
#include "polysieve/sharpness.hpp"

namespace polysieve::acceptance {

namespace {

constexpr double kKernelTolerance = 1e-6;
constexpr double kQuadraticFormRelTolerance = 1e-8;
constexpr double kRatioCeiling = 10.0;
constexpr double kOrthogonalityTolerance = 1e-9;
constexpr std::uint64_t kRootModulusLimit = 1'000'000;

// Uniform integer in [lo, hi]; modulo mapping keeps the corpus identical
// across standard library implementations.
std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

std::vector<std::int64_t> random_coefficients(std::mt19937_64& rng, int degree, std::int64_t bound) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = uniform(rng, -bound, bound);
  while (c[0] == 0) c[0] = uniform(rng, -bound, bound);
  return c;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

// sum_{x in F(Q)} e(x c) summed term by term; c is reduced mod q exactly.
std::complex<double> kernel_by_direct_sum(const Integer& c, std::uint64_t order) {
  std::complex<double> s = 0.0;
  for (const auto& x : farey_sequence(order)) {
    const std::uint64_t r = mul_mod(x.p, mod_u64(c, x.q), x.q);
    s += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(x.q));
  }
  return s;
}

Integer weight_norm(const SieveInstance& inst) {
  Integer n = 0;
  for (auto a : *inst.integer_weights()) n += Integer(a) * a;
  return n;
}

bool kernel_identity(std::string& detail) {
  std::mt19937_64 rng(1);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const Integer c = uniform(rng, -1'000'000'000, 1'000'000'000);
    const auto order = static_cast<std::uint64_t>(uniform(rng, 1, 60));
    const auto exact = static_cast<double>(kernel_exact(c, order));
    worst = std::max(worst, std::abs(kernel_by_direct_sum(c, order) - exact));
  }
  detail = "500 draws, max |direct - exact| = " + fmt(worst);
  return worst <= kKernelTolerance;
}

bool quadratic_form(std::string& detail) {
  double worst = 0.0;
  for (const auto& inst : sieve_corpus()) {
    const double exact = lhs_exact(inst).convert_to<double>();
    const double numeric = lhs_numeric(inst);
    worst = std::max(worst, std::abs(numeric - exact) / std::max(1.0, exact));
  }
  detail = "200 instances, max relative gap = " + fmt(worst);
  return worst <= kQuadraticFormRelTolerance;
}

bool power_sum_identity(std::string& detail) {
  int exact_cases = 0, general_cases = 0;
  bool ok = true;
  for (std::uint64_t q = 2; q <= 199; ++q) {
    if (!is_prime(q)) continue;
    for (std::uint64_t n = 2; n <= 5; ++n) {
      const auto qq = static_cast<std::int64_t>(q);
      if ((q - 1) % n == 0) {
        const auto r = ex1_check(n, q);
        ok &= r.ok && r.lhs == static_cast<std::int64_t>(n - 1) * qq * (qq - 1);
        ++exact_cases;
      } else {
        try {
          ex1_check(n, q);
          ok = false;
        } catch (const Ex1Inapplicable& e) {
          const auto g = static_cast<std::int64_t>(std::gcd(n, q - 1));
          ok &= e.general_value() == (g - 1) * qq * (qq - 1);
        }
        ++general_cases;
      }
    }
  }
  detail = std::to_string(exact_cases) + " cases with q = 1 mod n, " + std::to_string(general_cases) +
           " general-gcd cases";
  return ok;
}

bool root_bounds(std::string& detail) {
  const auto corpus = root_corpus();
  const std::vector<std::uint64_t> primes = ArithTable(kRootModulusLimit).primes();
  std::uint64_t checked = 0;
  std::string failure;
  for (const auto& poly : corpus) {
    const std::uint64_t k = poly.degree();
    RhoCounter counter(poly);
    for (std::uint64_t p : primes) {
      if (mod_u64(poly.leading(), p) == 0) continue;
      const std::uint64_t rho_p = counter.prime_power(p, 1);
      if (rho_p > k) failure = "rho(p) > k at p = " + std::to_string(p);
      std::uint64_t pm = 1;
      std::uint64_t prev_rho = 1;
      for (unsigned m = 1; pm <= kRootModulusLimit / p; ++m) {
        pm *= p;
        const std::uint64_t r = counter.prime_power(p, m);
        // rho(p^m)/p^m <= rho(p^(m-1))/p^(m-1)
        if (m > 1 && r > p * prev_rho) failure = "monotonicity fails at p^m = " + std::to_string(pm);
        std::uint64_t pa = 1;
        for (std::uint64_t i = 0; i < a_exponent(m, k); ++i) pa *= p;
        if (static_cast<unsigned __int128>(r) * pa > static_cast<unsigned __int128>(k + 2) * pm)
          failure = "prime-power bound fails at p^m = " + std::to_string(pm);
        if (!spacing_check(counter, p, m)) failure = "spacing fails at p^m = " + std::to_string(pm);
        prev_rho = r;
        ++checked;
      }
      if (!failure.empty()) {
        detail = failure + " for P = " + poly.to_string();
        return false;
      }
    }
  }
  detail = std::to_string(corpus.size()) + " polynomials, " + std::to_string(checked) + " prime powers <= 10^6";
  return true;
}

bool root_sum_structure(std::string& detail) {
  const auto corpus = root_corpus();
  std::uint64_t local_checks = 0;
  for (const auto& poly : corpus) {
    for (std::uint64_t q : {50, 200, 500}) {
      const auto sum = prop1_sum(poly, q);
      const auto majorant = euler_majorant(poly, q);
      if (!sum.exact || !majorant.exact || *sum.exact > *majorant.exact) {
        detail = "partial sum exceeds Euler product at Q = " + std::to_string(q) + " for P = " + poly.to_string();
        return false;
      }
    }
    for (std::uint64_t p = 2; p <= 100; ++p) {
      if (!is_prime(p) || mod_u64(poly.leading(), p) == 0) continue;
      if (!local_factor_check(poly, p).ok) {
        detail = "local factor bound fails at p = " + std::to_string(p) + " for P = " + poly.to_string();
        return false;
      }
      ++local_checks;
    }
  }
  detail = std::to_string(corpus.size()) + " polynomials x Q in {50, 200, 500}; " + std::to_string(local_checks) +
           " local factors";
  return true;
}

bool bound_chain(std::string& detail) {
  double tightest = 0.0;
  for (const auto& inst : sieve_corpus()) {
    const Integer exact = lhs_exact(inst);
    const Integer norm = weight_norm(inst);
    const auto rs = row_sup(inst);
    const auto majorant = row_sup_majorant(inst);
    if (exact > rs.value * norm || static_cast<double>(rs.value) > majorant.value) {
      detail = "chain broken for P = " + inst.polynomial().to_string() + ", Q = " + std::to_string(inst.order());
      return false;
    }
    tightest = std::max(tightest, static_cast<double>(rs.value) / majorant.value);
  }
  detail = "200 instances, max row_sup / majorant = " + fmt(tightest);
  return true;
}

bool envelope(std::string& detail) {
  auto corpus = sieve_corpus();
  for (std::int64_t start : {0LL, 1000LL, -1000LL, 1000000LL, -1000000LL}) {
    corpus.push_back(SieveInstance::with_unit_weights(IntPolynomial{1, 0, 0}, 20, start, 50));
    corpus.push_back(SieveInstance::with_unit_weights(IntPolynomial{2, -3, 0, 5}, 30, start, 60));
  }
  double worst = 0.0;
  for (const auto& inst : corpus) worst = std::max(worst, theorem1_report(inst).ratio);
  detail = std::to_string(corpus.size()) + " instances, max ratio = " + fmt(worst);
  return worst <= kRatioCeiling;
}

bool weil_bounds(std::string& detail) {
  int cases = 0;
  for (std::uint64_t n = 2; n <= 4; ++n) {
    for (std::uint64_t q = n + 1; q <= 97; ++q) {
      if (!is_prime(q)) continue;
      if (!weil_check(n, q) || !incomplete_check(n, q)) {
        detail = "bound fails at n = " + std::to_string(n) + ", q = " + std::to_string(q);
        return false;
      }
      ++cases;
    }
  }
  detail = std::to_string(cases) + " (n, q) pairs";
  return true;
}

bool lower_bound(std::string& detail) {
  const auto r = lower_bound_demo(2, 5, 65);
  detail = "lhs = " + fmt(r.lhs) + ", floor = " + fmt(r.floor);
  return r.ok && std::abs(r.floor - 820.4) < 0.05;
}

bool character_sums(std::string& detail) {
  // Orthogonality in both directions, and the primitive count.
  for (std::uint64_t d = 1; d <= 200; ++d) {
    const CharacterTable t(d);
    const std::size_t h = t.size();
    std::vector<std::complex<double>> v(h * d);
    for (std::size_t c = 0; c < h; ++c) {
      for (std::uint64_t x = 0; x < d; ++x) v[c * d + x] = t.value(c, x);
    }
    const auto phi = static_cast<double>(h);
    for (std::size_t a = 0; a < h; ++a) {
      for (std::size_t b = a; b < h; ++b) {
        std::complex<double> s = 0.0;
        for (std::uint64_t x = 0; x < d; ++x) s += v[a * d + x] * std::conj(v[b * d + x]);
        if (std::abs(s - (a == b ? phi : 0.0)) > kOrthogonalityTolerance) {
          detail = "row orthogonality fails at d = " + std::to_string(d);
          return false;
        }
      }
    }
    for (std::uint64_t x = 0; x < d; ++x) {
      if (std::gcd(x, d) != 1) continue;
      for (std::uint64_t y = x; y < d; ++y) {
        if (std::gcd(y, d) != 1) continue;
        std::complex<double> s = 0.0;
        for (std::size_t c = 0; c < h; ++c) s += v[c * d + x] * std::conj(v[c * d + y]);
        if (std::abs(s - (x == y ? phi : 0.0)) > kOrthogonalityTolerance) {
          detail = "column orthogonality fails at d = " + std::to_string(d);
          return false;
        }
      }
    }
    if (static_cast<std::int64_t>(t.primitive_count()) != primitive_character_count(d)) {
      detail = "primitive count mismatch at d = " + std::to_string(d);
      return false;
    }
  }

  std::mt19937_64 rng(77);
  double worst = 0.0;
  int instances = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int degree = 2 + trial % 2;
    const auto coeffs = random_coefficients(rng, degree, 10);
    const auto order = static_cast<std::uint64_t>(uniform(rng, 1, 30));
    const auto length = static_cast<std::size_t>(uniform(rng, 1, 60));
    const std::int64_t start = uniform(rng, -1'000'000, 1'000'000);
    std::vector<std::int64_t> a(length);
    for (auto& w : a) w = trial % 3 == 0 ? 1 : uniform(rng, -10, 10);
    const auto inst = SieveInstance::with_integer_weights(IntPolynomial::from_int64(coeffs), order, start, a);
    worst = std::max(worst, corollary_report(inst).ratio);
    ++instances;
  }
  detail = "tables d <= 200 orthogonal; " + std::to_string(instances) + " instances, max ratio = " + fmt(worst);
  return worst <= kRatioCeiling;
}

bool vandermonde(std::string& detail) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int degree = 1 + trial % 4;
    const auto coeffs = random_coefficients(rng, degree, 1'000'000);
    std::vector<Integer> xs;
    while (xs.size() < static_cast<std::size_t>(degree) + 1) {
      Integer x = uniform(rng, -100'000, 100'000);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(std::move(x));
    }
    if (!vandermonde_check(IntPolynomial::from_int64(coeffs), xs).ok) {
      detail = "identity fails for P = " + IntPolynomial::from_int64(coeffs).to_string();
      return false;
    }
  }
  detail = "1000 instances, degrees 1-4";
  return true;
}

}  // namespace

std::vector<SieveInstance> sieve_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SieveInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int degree = 1 + static_cast<int>(i % 4);
    const auto coeffs = random_coefficients(rng, degree, 10);
    const auto order = static_cast<std::uint64_t>(uniform(rng, 1, 40));
    const auto length = static_cast<std::size_t>(uniform(rng, 1, 60));
    const std::int64_t start = uniform(rng, -1'000'000, 1'000'000);
    std::vector<std::int64_t> a(length);
    for (auto& w : a) w = uniform(rng, -10, 10);
    out.push_back(SieveInstance::with_integer_weights(IntPolynomial::from_int64(coeffs), order, start, a));
  }
  return out;
}

std::vector<IntPolynomial> root_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<IntPolynomial> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(IntPolynomial::from_int64(random_coefficients(rng, 1 + static_cast<int>(i % 4), 20)));
  }
  return out;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "exact kernel identity", "Farey kernel = sum of Ramanujan sums", 5.0, kernel_identity},
      {2, "quadratic-form equivalence", "direct exponential sum = sum a_i a_j K(i,j)", 60.0, quadratic_form},
      {3, "complete power-sum energy", "sum_p |sum_i e(p i^n/q)|^2 = (n-1) q (q-1)", 10.0, power_sum_identity},
      {4, "root-count bounds", "rho(p) <= k, monotone rho(p^m)/p^m, spacing of roots", 60.0, root_bounds},
      {5, "root-sum structure", "partial sum <= Euler product; local factor bound", 30.0, root_sum_structure},
      {6, "bound-chain monotonicity", "lhs <= row sup ||a||^2 <= divisor majorant ||a||^2", 0.0, bound_chain},
      {7, "large sieve envelope", "lhs / Q(N+Q)(log Q)^(omega(c0)+theta(k))||a||^2 <= 10", 0.0, envelope},
      {8, "Weil and incomplete-sum bounds", "(n-1) sqrt q and 2(n-1) sqrt q log q", 20.0, weil_bounds},
      {9, "sharpness lower bound", "lhs >= (n-1) N^2 Q / (16 log Q)", 5.0, lower_bound},
      {10, "character-sum envelope", "orthogonality, primitive counts, envelope ratio <= 10", 60.0, character_sums},
      {11, "Vandermonde identity", "|c0 prod (x_i - x_j)| = |det|", 0.0, vandermonde},
  };
  return all;
}

CriterionResult run(const Criterion& c) {
  CriterionResult r{c.id, c.name, c.statement, false, false, 0.0, c.time_limit, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.checks_ok = c.body(r.detail);
  } catch (const std::exception& e) {
    r.checks_ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.ok = r.checks_ok && (c.time_limit == 0.0 || r.seconds < c.time_limit);
  return r;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.ok ? "[PASS] " : "[FAIL] ") << "C" << r.id << " " << r.name << ": " << r.detail << " ("
     << std::fixed << std::setprecision(2) << r.seconds << " s";
  if (r.time_limit > 0.0) os << " / limit " << std::setprecision(0) << r.time_limit << " s";
  os << ")";
  return os.str();
}

std::vector<CriterionResult> run_all(std::ostream* log) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    out.push_back(run(c));
    if (log) *log << format_line(out.back()) << std::endl;
  }
  return out;
}

}  // namespace polysieve::acceptance
