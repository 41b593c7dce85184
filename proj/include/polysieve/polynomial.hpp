#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "polysieve/integer.hpp"

namespace polysieve {

/// P(T) = c0 T^k + c1 T^(k-1) + ... + ck with arbitrary-precision
/// coefficients, stored in descending powers. The leading coefficient is
/// nonzero whenever k >= 1; a degree-0 polynomial may be any constant.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{Integer(0)} {}
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<std::int64_t> coefficients);
  static IntPolynomial from_int64(const std::vector<std::int64_t>& coefficients);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const Integer& leading() const { return coeffs_.front(); }
  const Integer& constant_term() const { return coeffs_.back(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  Integer operator()(const Integer& x) const;
  Integer operator()(std::int64_t x) const { return (*this)(Integer(x)); }

  /// P(T) - P(j): same polynomial with a shifted constant term.
  IntPolynomial shifted_by_value_at(const Integer& j) const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Coefficients of P reduced into [0, m); evaluation stays in 64-bit words
/// with 128-bit products, so m may be as large as 2^63.
class ModPolynomial {
 public:
  ModPolynomial(const IntPolynomial& poly, std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t operator()(std::uint64_t x) const;
  bool is_zero() const;

 private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> coeffs_;
};

/// P(x) mod m in [0, m).
std::uint64_t eval_mod(const IntPolynomial& poly, const Integer& x, std::uint64_t m);
std::uint64_t eval_mod(const IntPolynomial& poly, std::int64_t x, std::uint64_t m);

}  // namespace polysieve
