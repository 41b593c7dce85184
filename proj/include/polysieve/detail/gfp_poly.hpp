#pragma once

// Dense polynomials over F_p (ascending coefficients, no trailing zeros) and
// the few operations needed to find roots for primes too large to scan.

#include <cstdint>
#include <vector>

namespace polysieve::detail {

using GfpPoly = std::vector<std::uint64_t>;

/// gcd(f, T^p - T): the product of (T - r) over the distinct roots r of f.
/// f must be nonzero.
GfpPoly split_part(const GfpPoly& f, std::uint64_t p);

/// Distinct roots of a monic squarefree f that splits into linear factors,
/// by equal-degree splitting with a fixed seed sequence. p odd.
std::vector<std::uint64_t> split_linear(const GfpPoly& f, std::uint64_t p);

std::size_t degree(const GfpPoly& f);

}  // namespace polysieve::detail
