#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polysieve/errors.hpp"
#include "polysieve/farey.hpp"
#include "polysieve/sieve.hpp"

using namespace polysieve;

namespace {

// |sum_i a_i e(x P(i))|^2 summed over F(Q) with the phase x P(i) reduced in
// long double; only usable where P(i) stays small.
double lhs_brute(const std::vector<std::int64_t>& c, std::int64_t order, std::int64_t start,
                 const std::vector<std::complex<double>>& a) {
  double total = 0.0;
  for (auto [p, q] : oracle::farey_unsorted(order)) {
    std::complex<double> s = 0.0;
    for (std::size_t t = 0; t < a.size(); ++t) {
      const std::int64_t r = oracle::eval_small(c, start + 1 + static_cast<std::int64_t>(t), q);
      s += a[t] * oracle::e(static_cast<double>(p * r % q) / static_cast<double>(q));
    }
    total += std::norm(s);
  }
  return total;
}

}  // namespace

TEST_SUITE("sieve") {

TEST_CASE("SieveInstance validation") {
  CHECK_THROWS_AS(SieveInstance(IntPolynomial{1, 0}, 0, 0, 1, {1.0}), DomainError);
  CHECK_THROWS_AS(SieveInstance(IntPolynomial{1, 0}, 3, 0, 2, {1.0}), DomainError);
  CHECK_THROWS_AS(SieveInstance(IntPolynomial{1, 0}, 3, 0, 0, {}), DomainError);
  const auto inst = SieveInstance(IntPolynomial{1, 0}, 3, 5, 2, {{1.0, 0.0}, {0.5, 0.0}});
  CHECK(inst.point(0) == 6);
  CHECK_FALSE(inst.integer_weights());
  CHECK(inst.norm2() == doctest::Approx(1.25));
}

TEST_CASE("lhs_numeric examples") {
  CHECK(lhs_numeric(SieveInstance::with_unit_weights(IntPolynomial{1, 0}, 1, 0, 17)) == doctest::Approx(289.0));
  CHECK(lhs_numeric(SieveInstance::with_unit_weights(IntPolynomial{2, -7, 1}, 3, 0, 1)) == doctest::Approx(4.0));
  const auto inst = SieveInstance::with_unit_weights(IntPolynomial{1, 0, 0}, 5, 0, 10);
  CHECK(lhs_numeric(inst) == doctest::Approx(354.0).epsilon(1e-12));
  CHECK(lhs_exact(inst) == 354);
}

TEST_CASE("lhs_numeric budget") {
  const auto inst = SieveInstance::with_unit_weights(IntPolynomial{1, 0, 0}, 30, 0, 100);
  CHECK_THROWS_AS(lhs_numeric(inst, EvalBudget{1000}), ResourceError);
  CHECK_THROWS_AS(lhs_exact(inst, EvalBudget{1000}), ResourceError);
}

TEST_CASE("lhs_exact examples") {
  CHECK(lhs_exact(SieveInstance::with_integer_weights(IntPolynomial{1, 0, 0}, 7, 0, {0, 0, 0})) == 0);
  CHECK(lhs_exact(SieveInstance::with_integer_weights(IntPolynomial{1, 0, 0}, 7, 0, {0, 1, 0})) ==
        static_cast<std::int64_t>(farey_size(7)));
  CHECK_THROWS_AS(lhs_exact(SieveInstance(IntPolynomial{1, 0}, 3, 0, 1, {{0.0, 1.0}})), PreconditionError);
}

TEST_CASE("numeric path agrees with brute force, including complex weights") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = oracle::random_poly(rng, 1 + trial % 3, 5);
    const std::int64_t order = 2 + trial % 9;
    const std::int64_t start = trial * 3 - 30;
    std::vector<std::complex<double>> a(12);
    for (auto& w : a) w = {g(rng), g(rng)};
    const SieveInstance inst(IntPolynomial::from_int64(c), order, start, a.size(), a);
    REQUIRE(lhs_numeric(inst) == doctest::Approx(lhs_brute(c, order, start, a)).epsilon(1e-10));
  }
}

TEST_CASE("global phase invariance") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> w(-4, 4);
  std::vector<std::complex<double>> a(30);
  for (auto& x : a) x = {static_cast<double>(w(rng)), static_cast<double>(w(rng))};
  const IntPolynomial p{2, 0, -3, 1};
  const double base = lhs_numeric(SieveInstance(p, 17, -123456, a.size(), a));
  for (double phase : {0.1, 0.25, 0.77}) {
    auto b = a;
    for (auto& x : b) x *= oracle::e(phase);
    CHECK(lhs_numeric(SieveInstance(p, 17, -123456, b.size(), b)) == doctest::Approx(base).epsilon(1e-10));
  }
}

TEST_CASE("row_sup") {
  const auto single = SieveInstance::with_unit_weights(IntPolynomial{1, 0, 0}, 9, 41, 1);
  const auto r = row_sup(single);
  CHECK(r.index == 42);
  CHECK(r.value == static_cast<std::int64_t>(farey_size(9)));

  // Direct |K| summation: values by j = 1..20 are 183, 139, 166, ...; max 183 at j = 1 and 17.
  const auto inst = SieveInstance::with_unit_weights(IntPolynomial{1, 0, 0}, 10, 0, 20);
  const auto s = row_sup(inst);
  CHECK(s.value == 183);
  CHECK(s.index == 1);
  std::int64_t direct = 0;
  for (std::int64_t i = 1; i <= 20; ++i) direct += std::llround(std::abs(oracle::kernel_direct(i * i - 1, 10).real()));
  CHECK(direct == 183);
}

TEST_CASE("row_sup_majorant") {
  // Linear monic: rho_j = 1, so the majorant is 2Q (N+Q) H_Q.
  const auto inst = SieveInstance::with_unit_weights(IntPolynomial{1, 7}, 6, 100, 9);
  const double h6 = 1.0 + 1.0 / 2 + 1.0 / 3 + 1.0 / 4 + 1.0 / 5 + 1.0 / 6;
  CHECK(row_sup_majorant(inst).value == doctest::Approx(2.0 * 6 * 15 * h6));
  const auto q1 = SieveInstance::with_unit_weights(IntPolynomial{4, 0, 1}, 1, -5, 12);
  CHECK(row_sup_majorant(q1).value == doctest::Approx(2.0 * 13));
}

TEST_CASE("bound chain on random integer-weight instances") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> ms(-1000000, 1000000);
  std::uniform_int_distribution<std::int64_t> ws(-3, 3);
  for (int trial = 0; trial < 15; ++trial) {
    const auto c = oracle::random_poly(rng, 1 + trial % 4, 10);
    std::vector<std::int64_t> a(20 + trial);
    for (auto& x : a) x = ws(rng);
    const auto inst = SieveInstance::with_integer_weights(IntPolynomial::from_int64(c), 3 + trial, ms(rng), a);
    const Integer exact = lhs_exact(inst);
    const double numeric = lhs_numeric(inst);
    REQUIRE(std::abs(numeric - exact.convert_to<double>()) <= 1e-8 * std::max(1.0, exact.convert_to<double>()));
    Integer norm = 0;
    for (auto x : a) norm += x * x;
    const auto rs = row_sup(inst);
    REQUIRE(exact <= rs.value * norm);
    REQUIRE(static_cast<double>(rs.value) <= row_sup_majorant(inst).value);
  }
}

TEST_CASE("theorem1_report") {
  const auto t = theorem1_report(SieveInstance::with_unit_weights(IntPolynomial{1, 0}, 3, 0, 1));
  CHECK(t.lhs == doctest::Approx(4.0));
  CHECK(t.envelope_exponent == 1);
  CHECK(t.rhs_envelope == doctest::Approx(3.0 * 4.0 * std::log(3.0)));
  CHECK_FALSE(t.log_guarded);

  const auto r = theorem1_report(SieveInstance::with_unit_weights(IntPolynomial{1, 0, 0}, 20, 0, 50));
  CHECK(r.lhs == doctest::Approx(32304.0));
  REQUIRE(r.lhs_exact);
  CHECK(*r.lhs_exact == 32304);
  CHECK(r.envelope_exponent == 6);
  CHECK(r.ratio <= 10.0);
  REQUIRE(r.chain_ok);
  CHECK(*r.chain_ok);

  const auto z = theorem1_report(SieveInstance::with_integer_weights(IntPolynomial{1, 0, 0}, 5, 0, {0, 0, 0}));
  CHECK(z.ratio == 0.0);

  const auto g = theorem1_report(SieveInstance::with_unit_weights(IntPolynomial{1, 0, 0}, 2, 0, 5));
  CHECK(g.log_guarded);
  CHECK(g.log_factor == 1.0);

  CHECK_THROWS_AS(theorem1_report(SieveInstance::with_unit_weights(IntPolynomial{5}, 3, 0, 2)), DomainError);
}

}  // TEST_SUITE
