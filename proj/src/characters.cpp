#include "polysieve/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "polysieve/arith.hpp"
#include "polysieve/detail/compensated_sum.hpp"
#include "polysieve/errors.hpp"

namespace polysieve {

namespace {

// One cyclic factor of (Z/p^e Z)^*: index[x] is the discrete log of the
// unit x mod p^e with respect to the factor's generator (-1 for non-units).
struct CyclicFactor {
  std::size_t component;
  std::uint64_t order;
  std::vector<std::int64_t> index;
};

struct Component {
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t modulus;
};

std::uint64_t primitive_root_mod_prime(std::uint64_t p) {
  if (p == 2) return 1;
  const auto f = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [r, e] : f) {
      if (pow_mod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw DomainError("primitive_root_mod_prime: no primitive root");
}

std::vector<CyclicFactor> cyclic_factors(const Component& c, std::size_t component_index) {
  const std::uint64_t m = c.modulus;
  std::vector<CyclicFactor> out;
  auto log_table = [m](std::uint64_t generator, std::uint64_t order) {
    std::vector<std::int64_t> ind(m, -1);
    std::uint64_t x = 1 % m;
    for (std::uint64_t t = 0; t < order; ++t) {
      ind[x] = static_cast<std::int64_t>(t);
      x = mul_mod(x, generator, m);
    }
    return ind;
  };

  if (c.prime != 2) {
    std::uint64_t g = primitive_root_mod_prime(c.prime);
    // A primitive root mod p lifts to one mod p^2 (and hence every p^e)
    // unless g^(p-1) = 1 mod p^2, in which case g + p works.
    if (c.exponent > 1 && pow_mod(g, c.prime - 1, c.prime * c.prime) == 1) g += c.prime;
    const std::uint64_t order = m / c.prime * (c.prime - 1);
    out.push_back({component_index, order, log_table(g % m, order)});
  } else if (c.exponent == 1) {
    out.push_back({component_index, 1, log_table(1, 1)});
  } else if (c.exponent == 2) {
    out.push_back({component_index, 2, log_table(3, 2)});
  } else {
    // x = (-1)^s 5^t with s determined by x mod 4.
    const std::uint64_t order5 = m / 4;
    const auto five = log_table(5, order5);
    std::vector<std::int64_t> sign(m, -1), power(m, -1);
    for (std::uint64_t x = 1; x < m; x += 2) {
      const bool negative = x % 4 == 3;
      sign[x] = negative ? 1 : 0;
      power[x] = five[negative ? m - x : x];
    }
    out.push_back({component_index, 2, std::move(sign)});
    out.push_back({component_index, order5, std::move(power)});
  }
  return out;
}

}  // namespace

CharacterTable::CharacterTable(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw DomainError("character_table: modulus must be positive");
  if (modulus == 1) {
    chars_.push_back({{0}, 1, true});
    return;
  }
  std::vector<Component> components;
  for (const auto& [p, e] : factorize(modulus)) {
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    components.push_back({p, e, pe});
  }
  std::vector<CyclicFactor> factors;
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (auto& f : cyclic_factors(components[c], c)) factors.push_back(std::move(f));
  }
  for (const auto& f : factors) group_exponent_ = std::lcm(group_exponent_, f.order);
  const std::uint64_t L = group_exponent_;

  // Enumerate exponent tuples (t_f) in mixed radix.
  std::vector<std::uint64_t> t(factors.size(), 0);
  const std::uint64_t count = euler_phi(modulus);
  chars_.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    DirichletCharacter chi;
    chi.exponents.assign(modulus, -1);
    for (std::uint64_t x = 0; x < modulus; ++x) {
      if (std::gcd(x, modulus) != 1) continue;
      std::uint64_t v = 0;
      for (std::size_t f = 0; f < factors.size(); ++f) {
        const auto& cf = factors[f];
        const auto ind = static_cast<std::uint64_t>(cf.index[x % components[cf.component].modulus]);
        v = (v + t[f] * ind % cf.order * (L / cf.order)) % L;
      }
      chi.exponents[x] = static_cast<std::int64_t>(v);
    }

    // Conductor, one component at a time: the least p^j such that the
    // component character is trivial on units = 1 mod p^j.
    chi.conductor = 1;
    for (std::size_t c = 0; c < components.size(); ++c) {
      const auto& comp = components[c];
      auto component_value = [&](std::uint64_t y) {
        std::uint64_t v = 0;
        for (std::size_t f = 0; f < factors.size(); ++f) {
          if (factors[f].component != c) continue;
          const auto ind = static_cast<std::uint64_t>(factors[f].index[y]);
          v = (v + t[f] * ind % factors[f].order * (L / factors[f].order)) % L;
        }
        return v;
      };
      std::uint64_t pj = 1;
      for (unsigned j = 0; j <= comp.exponent; ++j, pj *= comp.prime) {
        bool trivial = true;
        for (std::uint64_t y = 1; y < comp.modulus && trivial; y += pj) {
          if (y % comp.prime == 0) continue;
          trivial = component_value(y) == 0;
        }
        if (trivial) break;
      }
      chi.conductor *= pj;
    }
    chi.primitive = chi.conductor == modulus;
    chars_.push_back(std::move(chi));

    for (std::size_t f = 0; f < t.size(); ++f) {
      if (++t[f] < factors[f].order) break;
      t[f] = 0;
    }
  }
}

std::size_t CharacterTable::primitive_count() const {
  std::size_t n = 0;
  for (const auto& chi : chars_) n += chi.primitive;
  return n;
}

std::complex<double> CharacterTable::value(std::size_t index, std::uint64_t residue) const {
  const std::int64_t v = chars_.at(index).exponents[residue % modulus_];
  if (v < 0) return 0.0;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(group_exponent_));
}

std::int64_t primitive_character_count(std::uint64_t modulus) {
  if (modulus == 0) throw DomainError("primitive_character_count: modulus must be positive");
  std::int64_t total = 0;
  for (std::uint64_t e : factorize(modulus).divisors()) {
    total += moebius(modulus / e) * static_cast<std::int64_t>(euler_phi(e));
  }
  return total;
}

double corollary_lhs(const SieveInstance& inst, const EvalBudget& budget) {
  const std::uint64_t D = inst.order();
  std::uint64_t work = 0;
  for (std::uint64_t d = 1; d <= D; ++d) work += euler_phi(d) * inst.length();
  if (work > budget.max_terms) throw ResourceError("corollary_lhs: work exceeds budget");

  const auto& a = inst.weights();
  detail::CompensatedSum total;
  for (std::uint64_t d = 1; d <= D; ++d) {
    const CharacterTable table(d);
    const ModPolynomial reduced(inst.polynomial(), d);
    std::vector<std::uint64_t> residues(inst.length());
    for (std::size_t t = 0; t < residues.size(); ++t) residues[t] = reduced(mod_u64(inst.point(t), d));
    const double weight = static_cast<double>(euler_phi(d)) / static_cast<double>(d);
    for (std::size_t c = 0; c < table.size(); ++c) {
      if (!table.characters()[c].primitive) continue;
      detail::CompensatedComplexSum s;
      for (std::size_t t = 0; t < residues.size(); ++t) s.add(a[t] * table.value(c, residues[t]));
      total.add(weight * std::norm(s.value()));
    }
  }
  return total.value();
}

CorollaryReport corollary_report(const SieveInstance& inst, const EvalBudget& budget) {
  CorollaryReport report;
  report.envelope_exponent = envelope_exponent(inst.polynomial());
  report.lhs = corollary_lhs(inst, budget);
  report.norm2 = inst.norm2();
  report.log_factor = guarded_log(inst.order(), report.log_guarded);
  const double d = static_cast<double>(inst.order());
  const double n = static_cast<double>(inst.length());
  report.rhs_envelope = d * (n + d) * std::pow(report.log_factor, report.envelope_exponent) * report.norm2;
  report.ratio = report.norm2 == 0.0 ? 0.0 : report.lhs / report.rhs_envelope;
  return report;
}

}  // namespace polysieve
