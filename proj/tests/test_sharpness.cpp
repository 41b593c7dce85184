#include "doctest.h"
#include "oracles.hpp"
#include "polysieve/arith.hpp"
#include "polysieve/sharpness.hpp"

using namespace polysieve;

TEST_SUITE("sharpness") {

TEST_CASE("complete_sum") {
  CHECK(std::abs(complete_sum({2, 5, 1, 0}, 5)) == doctest::Approx(std::sqrt(5.0)));
  const double expected = 1.0 + 6.0 * std::cos(2.0 * std::numbers::pi / 7.0);
  CHECK(std::abs(complete_sum({3, 7, 1, 0}, 7)) == doctest::Approx(expected));
  CHECK(expected == doctest::Approx(4.7409).epsilon(1e-4));
  CHECK_THROWS_AS(complete_sum({1, 7, 1, 0}, 7), DomainError);
  CHECK_THROWS_AS(complete_sum({2, 9, 1, 0}, 3), DomainError);
  CHECK_THROWS_AS(complete_sum({2, 7, 0, 0}, 3), DomainError);
  CHECK_THROWS_AS(complete_sum({2, 7, 1, 0}, 8), DomainError);
}

TEST_CASE("solution_count") {
  CHECK(solution_count(2, 5) == 9);
  CHECK(solution_count(3, 7) == 19);
  CHECK(solution_count(3, 5) == 5);
  for (std::uint64_t q = 2; q <= 199; ++q) {
    if (!is_prime(q)) continue;
    for (std::uint64_t n = 2; n <= 6; ++n) REQUIRE(solution_count(n, q) == solution_count_closed_form(n, q));
  }
}

TEST_CASE("ex1_check") {
  const auto a = ex1_check(2, 5);
  CHECK(a.lhs == 20);
  CHECK(a.rhs == 20);
  CHECK(a.ok);
  const auto b = ex1_check(3, 7);
  CHECK(b.lhs == 84);
  CHECK(b.ok);
  try {
    ex1_check(3, 5);
    FAIL("expected Ex1Inapplicable");
  } catch (const Ex1Inapplicable& e) {
    CHECK(e.general_value() == 0);
  }
}

TEST_CASE("Parseval consistency against floating sums") {
  for (std::uint64_t q = 3; q <= 97; ++q) {
    if (!is_prime(q)) continue;
    for (std::uint64_t n = 2; n <= 5; ++n) {
      double s = 0.0;
      for (std::uint64_t p = 1; p < q; ++p) s += std::norm(complete_sum({n, q, p, 0}, q));
      REQUIRE(std::abs(s - static_cast<double>(power_sum_energy(n, q))) <= 1e-6 * static_cast<double>(q * q));
    }
  }
}

TEST_CASE("weil and incomplete checks") {
  CHECK(weil_check(3, 7));
  CHECK(weil_check(2, 5));
  CHECK(max_complete_sum(2, 5) == doctest::Approx(std::sqrt(5.0)));
  CHECK_THROWS_AS(weil_check(4, 3), PreconditionError);
  CHECK_THROWS_AS(weil_check(4, 4), DomainError);
  CHECK(weil_check(4, 5));  // q > n holds, so this instance is admissible
  CHECK(incomplete_check(2, 11));
  CHECK(incomplete_check(3, 7));
  CHECK(incomplete_check(2, 3));
}

TEST_CASE("lower_bound_demo") {
  const auto a = lower_bound_demo(2, 5, 65);
  CHECK(a.floor == doctest::Approx(820.3562807857376));
  CHECK(a.lhs == doctest::Approx(14738.0));
  CHECK(a.ok);
  const auto b = lower_bound_demo(2, 4, 45);
  CHECK(b.lhs == doctest::Approx(5402.0));
  CHECK(b.ok);
  CHECK_THROWS_AS(lower_bound_demo(2, 3, 10), PreconditionError);
  CHECK_THROWS_AS(lower_bound_demo(2, 5, 60), PreconditionError);
}

}  // TEST_SUITE
