#include "polysieve/polynomial.hpp"

#include <sstream>

#include "polysieve/errors.hpp"

namespace polysieve {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw DomainError("IntPolynomial: empty coefficient list");
  if (coeffs_.size() > 1 && coeffs_.front() == 0)
    throw DomainError("IntPolynomial: leading coefficient must be nonzero");
}

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coefficients)
    : IntPolynomial(from_int64(std::vector<std::int64_t>(coefficients))) {}

IntPolynomial IntPolynomial::from_int64(const std::vector<std::int64_t>& coefficients) {
  std::vector<Integer> c(coefficients.begin(), coefficients.end());
  return IntPolynomial(std::move(c));
}

Integer IntPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (const auto& c : coeffs_) acc = acc * x + c;
  return acc;
}

IntPolynomial IntPolynomial::shifted_by_value_at(const Integer& j) const {
  auto c = coeffs_;
  c.back() -= (*this)(j);
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i];
  }
  return os.str();
}

ModPolynomial::ModPolynomial(const IntPolynomial& poly, std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw DomainError("ModPolynomial: modulus must be positive");
  coeffs_.reserve(poly.coefficients().size());
  for (const auto& c : poly.coefficients()) coeffs_.push_back(mod_u64(c, modulus));
}

std::uint64_t ModPolynomial::operator()(std::uint64_t x) const {
  x %= modulus_;
  std::uint64_t acc = 0;
  for (std::uint64_t c : coeffs_) acc = add_mod(mul_mod(acc, x, modulus_), c, modulus_);
  return acc;
}

bool ModPolynomial::is_zero() const {
  for (std::uint64_t c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::uint64_t eval_mod(const IntPolynomial& poly, const Integer& x, std::uint64_t m) {
  if (m == 0) throw DomainError("eval_mod: modulus must be positive");
  return ModPolynomial(poly, m)(mod_u64(x, m));
}

std::uint64_t eval_mod(const IntPolynomial& poly, std::int64_t x, std::uint64_t m) {
  if (m == 0) throw DomainError("eval_mod: modulus must be positive");
  return ModPolynomial(poly, m)(mod_u64(x, m));
}

}  // namespace polysieve
