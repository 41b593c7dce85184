#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polysieve {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Least nonnegative residue of x modulo m (m >= 1).
inline std::uint64_t mod_u64(const Integer& x, std::uint64_t m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

inline std::uint64_t mod_u64(std::int64_t x, std::uint64_t m) {
  const auto mm = static_cast<__int128>(m);
  __int128 r = static_cast<__int128>(x) % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if ((a | b) >> 32 == 0) return a * b % m;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // a, b < m <= 2^63 so the sum cannot wrap.
  std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace polysieve
