#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polysieve/arith.hpp"
#include "polysieve/characters.hpp"
#include "polysieve/errors.hpp"

using namespace polysieve;

namespace {

// Conductor straight from the definition: the least f | d such that chi is
// trivial on every unit x = 1 mod f.
std::uint64_t conductor_brute(const CharacterTable& t, std::size_t index) {
  const std::uint64_t d = t.modulus();
  for (std::uint64_t f = 1; f <= d; ++f) {
    if (d % f != 0) continue;
    bool trivial = true;
    for (std::uint64_t x = 1; x < d && trivial; x += f) {
      if (std::gcd(x, d) == 1) trivial = t.characters()[index].exponents[x] == 0;
    }
    if (trivial) return f;
  }
  return d;
}

// Second route for the character-sum form: all characters mod d, filtered
// by the brute-force conductor, with plain (uncompensated) summation.
double corollary_lhs_filtered(const SieveInstance& inst) {
  double total = 0.0;
  for (std::uint64_t d = 1; d <= inst.order(); ++d) {
    const CharacterTable t(d);
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (conductor_brute(t, c) != d) continue;
      std::complex<double> s = 0.0;
      for (std::size_t i = 0; i < inst.length(); ++i) {
        const auto r = eval_mod(inst.polynomial(), inst.point(i), d);
        s += inst.weights()[i] * t.value(c, r);
      }
      total += static_cast<double>(euler_phi(d)) / static_cast<double>(d) * std::norm(s);
    }
  }
  return total;
}

}  // namespace

TEST_SUITE("characters") {

TEST_CASE("small tables") {
  const CharacterTable one(1);
  CHECK(one.size() == 1);
  CHECK(one.characters()[0].primitive);
  CHECK(one.value(0, 0) == std::complex<double>(1.0, 0.0));
  CHECK(CharacterTable(5).size() == 4);
  const CharacterTable four(4);
  CHECK(four.size() == 2);
  CHECK(four.primitive_count() == 1);
  CHECK(primitive_character_count(4) == 1);
  CHECK_THROWS_AS(CharacterTable(0), DomainError);
}

TEST_CASE("orthogonality over residues and over characters, d <= 50") {
  for (std::uint64_t d = 1; d <= 50; ++d) {
    const CharacterTable t(d);
    const auto phi = static_cast<double>(euler_phi(d));
    REQUIRE(t.size() == euler_phi(d));
    for (std::size_t a = 0; a < t.size(); ++a) {
      REQUIRE(t.value(a, 1 % d) == std::complex<double>(1.0, 0.0));
      for (std::size_t b = 0; b < t.size(); ++b) {
        std::complex<double> s = 0.0;
        for (std::uint64_t x = 0; x < d; ++x) s += t.value(a, x) * std::conj(t.value(b, x));
        REQUIRE(std::abs(s - (a == b ? phi : 0.0)) < 1e-9);
      }
    }
    for (std::uint64_t x = 0; x < d; ++x) {
      if (std::gcd(x, d) != 1) continue;
      for (std::uint64_t y = 0; y < d; ++y) {
        if (std::gcd(y, d) != 1) continue;
        std::complex<double> s = 0.0;
        for (std::size_t c = 0; c < t.size(); ++c) s += t.value(c, x) * std::conj(t.value(c, y));
        REQUIRE(std::abs(s - (x == y ? phi : 0.0)) < 1e-9);
      }
    }
  }
}

TEST_CASE("complete multiplicativity") {
  for (std::uint64_t d : {8, 15, 16, 27, 60, 64, 97, 100}) {
    const CharacterTable t(d);
    const auto L = static_cast<std::int64_t>(t.group_exponent());
    for (const auto& chi : t.characters()) {
      for (std::uint64_t x = 0; x < d; ++x) {
        for (std::uint64_t y = 0; y < d; ++y) {
          const auto vx = chi.exponents[x], vy = chi.exponents[y], vxy = chi.exponents[x * y % d];
          if (vx < 0 || vy < 0) {
            REQUIRE(vxy < 0);
          } else {
            REQUIRE(vxy == (vx + vy) % L);
          }
        }
      }
    }
  }
}

TEST_CASE("conductors agree with the definition and primitive counts with the Moebius formula") {
  for (std::uint64_t d = 1; d <= 200; ++d) {
    const CharacterTable t(d);
    REQUIRE(static_cast<std::int64_t>(t.primitive_count()) == primitive_character_count(d));
    if (d > 100) continue;
    for (std::size_t c = 0; c < t.size(); ++c) REQUIRE(t.characters()[c].conductor == conductor_brute(t, c));
  }
}

TEST_CASE("each imprimitive character is induced by a primitive one of its conductor") {
  for (std::uint64_t d = 2; d <= 100; ++d) {
    const CharacterTable t(d);
    for (const auto& chi : t.characters()) {
      if (chi.primitive) continue;
      const CharacterTable base(chi.conductor);
      const auto Ld = t.group_exponent(), Lf = base.group_exponent();
      int matches = 0;
      for (const auto& psi : base.characters()) {
        if (!psi.primitive) continue;
        bool same = true;
        for (std::uint64_t x = 1; x < d && same; ++x) {
          if (std::gcd(x, d) != 1) continue;
          // Compare e(v/Ld) with e(w/Lf) exactly: v * Lf == w * Ld.
          same = static_cast<std::uint64_t>(chi.exponents[x]) * Lf ==
                 static_cast<std::uint64_t>(psi.exponents[x % chi.conductor]) * Ld;
        }
        matches += same;
      }
      REQUIRE(matches == 1);
    }
  }
}

TEST_CASE("corollary_lhs examples") {
  const auto d1 = SieveInstance(IntPolynomial{1, 0, 0}, 1, 0, 3, {{1.0, 0.0}, {2.0, 1.0}, {-0.5, 0.0}});
  CHECK(corollary_lhs(d1) == doctest::Approx(std::norm(std::complex<double>(2.5, 1.0))));
  CHECK(corollary_lhs(SieveInstance::with_integer_weights(IntPolynomial{1, 0, 0}, 9, 0, {0, 0, 0, 0})) == 0.0);
  const auto inst = SieveInstance::with_unit_weights(IntPolynomial{1, 0, 0}, 10, 0, 20);
  CHECK(corollary_lhs(inst) == doctest::Approx(corollary_lhs_filtered(inst)).epsilon(1e-12));
}

TEST_CASE("corollary_report") {
  const auto inst = SieveInstance::with_unit_weights(IntPolynomial{1, 0}, 5, 0, 5);
  const auto r = corollary_report(inst);
  CHECK(std::abs(r.lhs - corollary_lhs_filtered(inst)) <= 1e-8 * r.lhs);
  CHECK(r.rhs_envelope == doctest::Approx(5.0 * 10.0 * std::log(5.0) * 5.0));
  CHECK(corollary_report(SieveInstance::with_integer_weights(IntPolynomial{1, 0, 1}, 7, 0, {0, 0})).ratio == 0.0);
  CHECK(corollary_report(SieveInstance::with_unit_weights(IntPolynomial{1, 0, 1}, 2, 0, 4)).log_guarded);
}

}  // TEST_SUITE
