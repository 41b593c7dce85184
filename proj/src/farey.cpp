#include "polysieve/farey.hpp"

#include "polysieve/arith.hpp"
#include "polysieve/errors.hpp"

namespace polysieve {

std::vector<FareyFraction> farey_sequence(std::uint64_t order) {
  if (order == 0) throw DomainError("farey_sequence: order must be positive");
  std::vector<FareyFraction> out;
  out.reserve(farey_size(order));
  // Consecutive neighbours a/b < c/d; the next term is (k c - a)/(k d - b)
  // with k = floor((Q + b) / d).
  std::uint64_t a = 0, b = 1, c = 1, d = order;
  out.push_back({a, b});
  while (c < d) {
    out.push_back({c, d});
    const std::uint64_t k = (order + b) / d;
    const std::uint64_t next_c = k * c - a;
    const std::uint64_t next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
  }
  return out;
}

std::uint64_t farey_size(std::uint64_t order) {
  if (order == 0) throw DomainError("farey_size: order must be positive");
  const ArithTable table(order);
  std::uint64_t total = 0;
  for (std::uint64_t q = 1; q <= order; ++q) total += table.phi(q);
  return total;
}

std::int64_t kernel_exact(const Integer& c, std::uint64_t order) {
  if (order == 0) throw DomainError("kernel_exact: order must be positive");
  const ArithTable table(order);
  std::int64_t total = 0;
  for (std::uint64_t q = 1; q <= order; ++q) total += table.ramanujan_from_residue(q, mod_u64(c, q));
  return total;
}

std::int64_t kernel_K(const IntPolynomial& poly, std::uint64_t order, const Integer& i, const Integer& j) {
  return kernel_exact(poly(i) - poly(j), order);
}

std::uint64_t gcd_sum_bound(const Integer& c, std::uint64_t order) {
  if (order == 0) throw DomainError("gcd_sum_bound: order must be positive");
  std::uint64_t total = 0;
  for (std::uint64_t q = 1; q <= order; ++q) total += gcd_conv(c, q);
  return total;
}

}  // namespace polysieve
