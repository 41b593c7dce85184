#pragma once

#include <cstdint>
#include <vector>

#include "polysieve/integer.hpp"
#include "polysieve/polynomial.hpp"

namespace polysieve {

/// p/q in lowest terms with 0 <= p < q; the sequence lives in [0, 1) so each
/// residue class p mod q appears once.
struct FareyFraction {
  std::uint64_t p = 0;
  std::uint64_t q = 1;

  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
};

/// F(Q) in increasing order, generated by the neighbour recurrence.
std::vector<FareyFraction> farey_sequence(std::uint64_t order);
std::uint64_t farey_size(std::uint64_t order);

/// sum_{x in F(Q)} e(x c) = sum_{q <= Q} c_q(c), an integer.
std::int64_t kernel_exact(const Integer& c, std::uint64_t order);
inline std::int64_t kernel_exact(std::int64_t c, std::uint64_t order) {
  return kernel_exact(Integer(c), order);
}

/// K(i, j) = kernel_exact(P(i) - P(j), Q).
std::int64_t kernel_K(const IntPolynomial& poly, std::uint64_t order, const Integer& i, const Integer& j);

/// sum_{q <= Q} gcd_conv(c, q), the majorant of |K| from |c_q(c)| <= (c, q).
std::uint64_t gcd_sum_bound(const Integer& c, std::uint64_t order);
inline std::uint64_t gcd_sum_bound(std::int64_t c, std::uint64_t order) {
  return gcd_sum_bound(Integer(c), order);
}

}  // namespace polysieve
