#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polysieve/arith.hpp"
#include "polysieve/errors.hpp"
#include "polysieve/polyroots.hpp"

using namespace polysieve;

namespace {

std::vector<std::uint64_t> roots_of(const RootSetModM& r) { return r.roots; }

}  // namespace

TEST_SUITE("polyroots") {

TEST_CASE("IntPolynomial construction and evaluation") {
  CHECK_THROWS_AS(IntPolynomial({0, 1}), DomainError);
  CHECK_THROWS_AS(IntPolynomial(std::vector<Integer>{}), DomainError);
  const IntPolynomial p{1, 0, 0, 0, 7};
  CHECK(p.degree() == 4);
  // exact past 64 bits: (10^6)^4 + 7
  CHECK(p(std::int64_t{1000000}) == Integer("1000000000000000000000007"));
  CHECK(IntPolynomial{0}.degree() == 0);
}

TEST_CASE("eval_mod") {
  CHECK(eval_mod(IntPolynomial{1, 0, 0}, 3, 4) == 1);
  CHECK(eval_mod(IntPolynomial{1, 0, 1}, 2, 5) == 0);
  CHECK(eval_mod(IntPolynomial{2, 1}, 0, 2) == 1);
  CHECK(eval_mod(IntPolynomial{-3, 5}, -7, 11) == 4);  // 26 mod 11
  CHECK_THROWS_AS(eval_mod(IntPolynomial{1}, 0, 0), DomainError);
  // Modulus near 2^62 with a large argument stays exact.
  const std::uint64_t m = (std::uint64_t{1} << 62) - 57;
  const IntPolynomial p{3, -2, 1, 9};
  const Integer x("123456789012345678901");
  Integer expected = p(x) % m;
  if (expected < 0) expected += m;
  CHECK(eval_mod(p, x, m) == expected.convert_to<std::uint64_t>());
}

TEST_CASE("roots_mod_prime") {
  CHECK(roots_of(roots_mod_prime(IntPolynomial{1, 0, 1}, 5)) == std::vector<std::uint64_t>{2, 3});
  CHECK(roots_mod_prime(IntPolynomial{1, 0, 1}, 3).roots.empty());
  CHECK(roots_of(roots_mod_prime(IntPolynomial{2, 0}, 2)) == std::vector<std::uint64_t>{0, 1});
  CHECK_THROWS_AS(roots_mod_prime(IntPolynomial{1, 0}, 4), DomainError);
}

TEST_CASE("lift_roots") {
  const auto a = lift_roots(IntPolynomial{1, 0, 0}, 2, 2);
  CHECK(a.modulus == 4);
  CHECK(a.roots == std::vector<std::uint64_t>{0, 2});
  CHECK(lift_roots(IntPolynomial{1, 0, -1}, 2, 3).roots == std::vector<std::uint64_t>{1, 3, 5, 7});
  CHECK(lift_roots(IntPolynomial{1, 0, 1}, 5, 2).roots == std::vector<std::uint64_t>{7, 18});
  // Degenerate lift: P = T^2 + 4 has P' = 0 mod 2 at every root.
  CHECK(lift_roots(IntPolynomial{1, 0, 4}, 2, 4).count() == oracle::rho_scan({1, 0, 4}, 16));
  CHECK_THROWS_AS(lift_roots(IntPolynomial{1, 0}, 2, 63), ResourceError);
}

TEST_CASE("rho examples") {
  for (const IntPolynomial& p : {IntPolynomial{1, 0}, IntPolynomial{3, 1, 4, 1}, IntPolynomial{0}}) {
    CHECK(rho(p, 1) == 1);
  }
  CHECK(rho(IntPolynomial{1, 0, 1}, 65) == 4);
  CHECK(oracle::rho_scan({1, 0, 1}, 65) == 4);
  CHECK(rho(IntPolynomial{1, 0, 0}, 4) == 2);
  CHECK(rho(IntPolynomial{0}, 12) == 12);  // zero polynomial: every residue
  CHECK(rho(IntPolynomial{6}, 12) == 0);
  CHECK_THROWS_AS(rho(IntPolynomial{1, 0}, 0), DomainError);
}

TEST_CASE("rho_shifted examples") {
  CHECK(rho_shifted(IntPolynomial{1, 0, 0}, 0, 4) == 2);
  CHECK(rho_shifted(IntPolynomial{1, 0, 0}, 1, 5) == 2);
  CHECK(rho_shifted(IntPolynomial{2, -3, 7}, Integer(123456789), 1) == 1);
}

TEST_CASE("a_exponent follows the ceiling definition") {
  CHECK(a_exponent(1, 2) == 1);
  CHECK(a_exponent(3, 2) == 1);
  CHECK(a_exponent(4, 2) == 2);
  // a(l + d C, k) = d only at l = 0; for 0 < l < C it is d + 1.
  CHECK(a_exponent(6, 2) == 2);
  CHECK(a_exponent(7, 2) == 3);
}

TEST_CASE("vandermonde_check examples") {
  const auto a = vandermonde_check(IntPolynomial{2, 0, 1}, {0, 1, 2});
  CHECK(a.lhs == -4);
  CHECK(a.det == 4);
  CHECK(a.ok);
  const auto b = vandermonde_check(IntPolynomial{3, 5}, {0, 1});
  CHECK(b.lhs == -3);
  CHECK(b.det == 3);
  CHECK(b.ok);
  CHECK_THROWS_AS(vandermonde_check(IntPolynomial{1, 0, 0}, {1, 1, 2}), DomainError);
  CHECK_THROWS_AS(vandermonde_check(IntPolynomial{1, 0, 0}, {1, 2}), DomainError);
}

TEST_CASE("vandermonde identity on random exact instances") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> xs_dist(-1000, 1000);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + trial % 4;
    const auto c = oracle::random_poly(rng, k, 1000000);
    std::vector<Integer> xs;
    while (xs.size() < static_cast<std::size_t>(k + 1)) {
      Integer x = xs_dist(rng);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    const auto r = vandermonde_check(IntPolynomial::from_int64(c), xs);
    REQUIRE(r.ok);
    // Sign: det = c0 prod_{i<j} (x_j - x_i) = (-1)^C(k+1,2) lhs.
    REQUIRE(r.det == (binomial2(k) % 2 == 0 ? r.lhs : Integer(-r.lhs)));
  }
}

TEST_CASE("spacing_check") {
  CHECK(spacing_check(IntPolynomial{1, 0, 0}, 3, 2));
  CHECK(spacing_check(IntPolynomial{1, 0, 1}, 3, 1));
  CHECK(spacing_check(IntPolynomial{1, 0, 0, -1}, 7, 2));
  CHECK_THROWS_AS(spacing_check(IntPolynomial{3, 0, 1}, 3, 2), PreconditionError);
  CHECK_THROWS_AS(spacing_check(IntPolynomial{1, 0, 1}, 7, 8), ResourceError);
}

TEST_CASE("prop1_sum") {
  const auto h10 = prop1_sum(IntPolynomial{1, 0}, 10);
  REQUIRE(h10.exact);
  CHECK(*h10.exact == Rational(7381, 2520));
  CHECK(h10.value == doctest::Approx(2.9289682539682538));
  CHECK(prop1_sum(IntPolynomial{5, 0, 3}, 1).value == 1.0);
  // Brute-force scan of each m <= 20.
  const auto s = prop1_sum(IntPolynomial{1, 0, 1}, 20);
  REQUIRE(s.exact);
  CHECK(*s.exact == Rational(5241, 2210));
  // Above the exact limit the compensated path is used.
  const auto big = prop1_sum(IntPolynomial{1, 0}, 2000);
  CHECK_FALSE(big.exact);
  double h = 0.0;
  for (int m = 2000; m >= 1; --m) h += 1.0 / m;
  CHECK(big.value == doctest::Approx(h).epsilon(1e-14));
}

TEST_CASE("euler_majorant") {
  CHECK(euler_majorant(IntPolynomial{1, 0, 1}, 1).value == 1.0);
  CHECK(*euler_majorant(IntPolynomial{1, 0}, 3).exact == Rational(2));
  CHECK(*euler_majorant(IntPolynomial{1, 0, 0}, 4).exact == Rational(8, 3));
}

TEST_CASE("rho equals exhaustive scan for m <= 5000 on random polynomials") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = oracle::random_poly(rng, 1 + trial % 4, 20);
    RhoCounter counter(IntPolynomial::from_int64(c));
    for (std::int64_t m = 1; m <= 5000; ++m) {
      REQUIRE(counter(static_cast<std::uint64_t>(m)) == oracle::rho_scan(c, m));
    }
  }
}

TEST_CASE("gcd and splitting path matches a scan for primes above the scan limit") {
  std::mt19937_64 rng(4097);
  std::uniform_int_distribution<std::uint64_t> pick(kScanLimit, 100'000);
  std::vector<std::vector<std::int64_t>> polys = {
      {1, -6, 11, -6},          // (T-1)(T-2)(T-3): splits completely
      {1, -4, 4},               // (T-2)^2: zero discriminant
      {1, 0, 1},                // T^2 + 1
      {1, 0, 0, 0, 0, -1},      // T^5 - 1
      {3, 0, -7},
  };
  for (int i = 0; i < 20; ++i) polys.push_back(oracle::random_poly(rng, 1 + i % 5, 1000));
  int primes_seen = 0;
  while (primes_seen < 30) {
    const std::uint64_t p = pick(rng);
    if (!is_prime(p)) continue;
    ++primes_seen;
    for (const auto& c : polys) {
      const auto pp = static_cast<std::int64_t>(p);
      std::vector<std::uint64_t> expected;
      for (std::int64_t x = 0; x < pp; ++x) {
        if (oracle::eval_small(c, x, pp) == 0) expected.push_back(static_cast<std::uint64_t>(x));
      }
      const IntPolynomial poly = IntPolynomial::from_int64(c);
      REQUIRE(roots_mod_prime(poly, p).roots == expected);
      REQUIRE(count_roots_mod_prime(poly, p) == expected.size());
    }
  }
}

TEST_CASE("rho is multiplicative and the profile records it") {
  const auto profile = rho_profile(IntPolynomial{1, 3, 0, -2}, 300);
  CHECK(profile.rho[1] == 1);
  for (std::uint64_t a = 1; a <= 300; ++a) {
    for (std::uint64_t b = 1; a * b <= 300; ++b) {
      if (std::gcd(a, b) == 1) REQUIRE(profile.rho[a * b] == profile.rho[a] * profile.rho[b]);
    }
  }
}

TEST_CASE("local factor check") {
  const auto r = local_factor_check(IntPolynomial{1, 0, 1}, 5, 10000);
  CHECK(r.ok);
  // 1 + 2/5 + 2/25 + ... + 2/5^5 for T^2+1 (two simple roots lift uniquely)
  Rational expected = 1;
  Integer pm = 1;
  for (int e = 1; e <= 5; ++e) {
    pm *= 5;
    expected += Rational(Integer(2), pm);
  }
  CHECK(r.partial == expected);
  CHECK_THROWS_AS(local_factor_check(IntPolynomial{5, 0, 1}, 5), PreconditionError);
}

}  // TEST_SUITE
