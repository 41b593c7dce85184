#include "polysieve/sieve.hpp"

#include <cmath>
#include <algorithm>
#include <map>
#include <numbers>
#include <numeric>

#include "polysieve/arith.hpp"
#include "polysieve/detail/compensated_sum.hpp"
#include "polysieve/errors.hpp"
#include "polysieve/farey.hpp"
#include "polysieve/polyroots.hpp"

namespace polysieve {

SieveInstance::SieveInstance(IntPolynomial poly, std::uint64_t order, std::int64_t start, std::uint64_t length,
                             std::vector<std::complex<double>> weights)
    : poly_(std::move(poly)), order_(order), start_(start), length_(length), weights_(std::move(weights)) {
  if (order_ == 0) throw DomainError("SieveInstance: Q must be positive");
  if (length_ == 0) throw DomainError("SieveInstance: N must be positive");
  if (weights_.size() != length_) throw DomainError("SieveInstance: one weight per point of I is required");
  for (const auto& w : weights_) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw DomainError("SieveInstance: weights must be finite");
  }
}

SieveInstance SieveInstance::with_unit_weights(IntPolynomial poly, std::uint64_t order, std::int64_t start,
                                               std::uint64_t length) {
  return SieveInstance(std::move(poly), order, start, length, std::vector<std::complex<double>>(length, 1.0));
}

SieveInstance SieveInstance::with_integer_weights(IntPolynomial poly, std::uint64_t order, std::int64_t start,
                                                  const std::vector<std::int64_t>& weights) {
  std::vector<std::complex<double>> w;
  w.reserve(weights.size());
  for (std::int64_t a : weights) w.emplace_back(static_cast<double>(a), 0.0);
  return SieveInstance(std::move(poly), order, start, weights.size(), std::move(w));
}

double SieveInstance::norm2() const {
  detail::CompensatedSum s;
  for (const auto& w : weights_) s.add(std::norm(w));
  return s.value();
}

std::optional<std::vector<std::int64_t>> SieveInstance::integer_weights() const {
  std::vector<std::int64_t> out;
  out.reserve(weights_.size());
  for (const auto& w : weights_) {
    const double re = w.real();
    if (w.imag() != 0.0 || std::trunc(re) != re || std::abs(re) > 9.0e15) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(re));
  }
  return out;
}

namespace {

// P(M+1+t) mod q for every t.
std::vector<std::uint64_t> residues_mod(const SieveInstance& inst, std::uint64_t q) {
  const ModPolynomial reduced(inst.polynomial(), q);
  std::vector<std::uint64_t> out(inst.length());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = reduced(mod_u64(inst.point(t), q));
  return out;
}

// Integer kernel matrix K(i, j), cached by |P(i) - P(j)|.
class KernelMatrix {
 public:
  KernelMatrix(const SieveInstance& inst, const EvalBudget& budget) : n_(inst.length()) {
    if (n_ > 0 && n_ > budget.max_terms / n_) throw ResourceError("kernel matrix: N^2 exceeds budget");
    const ArithTable table(inst.order());
    std::vector<Integer> values(n_);
    for (std::size_t t = 0; t < n_; ++t) values[t] = inst.polynomial()(inst.point(t));
    std::map<Integer, std::int64_t> cache;
    k_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        Integer c = abs(values[i] - values[j]);
        auto it = cache.find(c);
        if (it == cache.end()) {
          std::int64_t total = 0;
          for (std::uint64_t q = 1; q <= inst.order(); ++q)
            total += table.ramanujan_from_residue(q, mod_u64(c, q));
          it = cache.emplace(std::move(c), total).first;
        }
        // c_q(-n) = c_q(n), so K is symmetric.
        k_[i * n_ + j] = it->second;
        k_[j * n_ + i] = it->second;
      }
    }
  }

  std::int64_t operator()(std::size_t i, std::size_t j) const { return k_[i * n_ + j]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> k_;
};

}  // namespace

double lhs_numeric(const SieveInstance& inst, const EvalBudget& budget) {
  const std::uint64_t q_max = inst.order();
  const std::uint64_t fractions = farey_size(q_max);
  if (fractions > budget.max_terms / inst.length())
    throw ResourceError("lhs_numeric: |F(Q)| * N exceeds budget");
  const auto& a = inst.weights();
  detail::CompensatedSum total;
  std::vector<std::complex<double>> roots;
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    const auto r = residues_mod(inst, q);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
    roots.resize(q);
    for (std::uint64_t t = 0; t < q; ++t) {
      const double angle = step * static_cast<double>(t);
      roots[t] = {std::cos(angle), std::sin(angle)};
    }
    for (std::uint64_t p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      detail::CompensatedComplexSum s;
      for (std::size_t t = 0; t < r.size(); ++t) s.add(a[t] * roots[mul_mod(p, r[t], q)]);
      total.add(std::norm(s.value()));
    }
  }
  return total.value();
}

Integer lhs_exact(const SieveInstance& inst, const EvalBudget& budget) {
  const auto a = inst.integer_weights();
  if (!a) throw PreconditionError("lhs_exact: weights must be integers");
  const KernelMatrix k(inst, budget);
  Integer total = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if ((*a)[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < k.size(); ++j) row += Integer((*a)[j]) * k(i, j);
    total += row * (*a)[i];
  }
  return total;
}

RowSup row_sup(const SieveInstance& inst, const EvalBudget& budget) {
  const KernelMatrix k(inst, budget);
  RowSup best{inst.point(0), -1};
  for (std::size_t j = 0; j < k.size(); ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < k.size(); ++i) s += std::abs(k(i, j));
    if (s > best.value) best = {inst.point(j), s};
  }
  return best;
}

RowSupMajorant row_sup_majorant(const SieveInstance& inst) {
  const std::uint64_t q_max = inst.order();
  const double scale = 2.0 * static_cast<double>(q_max) * static_cast<double>(inst.length() + q_max);
  RowSupMajorant best{inst.point(0), -1.0};
  for (std::size_t t = 0; t < inst.length(); ++t) {
    RhoCounter counter(inst.polynomial().shifted_by_value_at(inst.point(t)));
    detail::CompensatedSum s;
    for (std::uint64_t k = 1; k <= q_max; ++k) {
      s.add(static_cast<double>(counter(k)) / static_cast<double>(k));
    }
    const double value = scale * s.value();
    if (value > best.value) best = {inst.point(t), value};
  }
  return best;
}

double guarded_log(std::uint64_t q, bool& guarded) {
  guarded = q < 3;
  return guarded ? 1.0 : std::log(static_cast<double>(q));
}

unsigned envelope_exponent(const IntPolynomial& poly) {
  if (poly.degree() == 0) throw DomainError("envelope_exponent: polynomial must have degree >= 1");
  return omega(poly.leading()) + static_cast<unsigned>(theta(poly.degree()));
}

SieveReport theorem1_report(const SieveInstance& inst, const EvalBudget& budget) {
  SieveReport report;
  report.envelope_exponent = envelope_exponent(inst.polynomial());
  report.lhs = lhs_numeric(inst, budget);
  report.norm2 = inst.norm2();
  report.log_factor = guarded_log(inst.order(), report.log_guarded);
  const double q = static_cast<double>(inst.order());
  const double n = static_cast<double>(inst.length());
  report.rhs_envelope = q * (n + q) * std::pow(report.log_factor, report.envelope_exponent) * report.norm2;
  report.ratio = report.norm2 == 0.0 ? 0.0 : report.lhs / report.rhs_envelope;

  const std::uint64_t n2 = inst.length() * inst.length();
  if (n2 <= budget.max_terms) {
    if (inst.integer_weights()) report.lhs_exact = lhs_exact(inst, budget);
    report.row_sup = row_sup(inst, budget);
  }
  report.row_sup_bound = row_sup_majorant(inst);
  if (report.row_sup) {
    const double lhs = report.lhs_exact ? report.lhs_exact->convert_to<double>() : report.lhs;
    const double slack = 1e-9 * std::max(1.0, lhs);
    const double middle = static_cast<double>(report.row_sup->value) * report.norm2;
    report.chain_ok = lhs <= middle + slack && middle <= report.row_sup_bound.value * report.norm2 + slack;
  }
  return report;
}

}  // namespace polysieve
