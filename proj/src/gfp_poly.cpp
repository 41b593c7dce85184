#include "polysieve/detail/gfp_poly.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "polysieve/arith.hpp"
#include "polysieve/integer.hpp"

namespace polysieve::detail {

namespace {

void trim(GfpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::uint64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::uint64_t q = r / new_r;
    t = std::exchange(new_t, t - static_cast<std::int64_t>(q) * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p)) : static_cast<std::uint64_t>(t);
}

GfpPoly make_monic(GfpPoly f, std::uint64_t p) {
  const std::uint64_t inv = inverse(f.back(), p);
  for (auto& c : f) c = mul_mod(c, inv, p);
  return f;
}

// f mod g, g monic.
GfpPoly rem(GfpPoly f, const GfpPoly& g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg && !f.empty()) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    if (lead != 0) {
      for (std::size_t i = 0; i < dg; ++i) {
        f[shift + i] = add_mod(f[shift + i], p - mul_mod(lead, g[i], p), p);
      }
    }
    f.pop_back();
  }
  trim(f);
  return f;
}

GfpPoly mul_rem(const GfpPoly& a, const GfpPoly& b, const GfpPoly& g, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  GfpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = add_mod(c[i + j], mul_mod(a[i], b[j], p), p);
  }
  return rem(std::move(c), g, p);
}

GfpPoly pow_rem(GfpPoly base, std::uint64_t e, const GfpPoly& g, std::uint64_t p) {
  GfpPoly result = rem({1}, g, p);
  base = rem(std::move(base), g, p);
  while (e > 0) {
    if (e & 1) result = mul_rem(result, base, g, p);
    base = mul_rem(base, base, g, p);
    e >>= 1;
  }
  return result;
}

GfpPoly gcd(GfpPoly a, GfpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    b = make_monic(std::move(b), p);
    GfpPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : make_monic(std::move(a), p);
}

GfpPoly sub_linear(GfpPoly f, std::uint64_t c1, std::uint64_t c0, std::uint64_t p) {
  // f - (c1 T + c0)
  if (f.size() < 2) f.resize(2, 0);
  f[0] = add_mod(f[0], (p - c0 % p) % p, p);
  f[1] = add_mod(f[1], (p - c1 % p) % p, p);
  trim(f);
  return f;
}

void split_into(const GfpPoly& f, std::uint64_t p, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  const std::size_t d = degree(f);
  if (d == 0) return;
  if (d == 1) {
    // T + c  ->  root -c
    out.push_back((p - f[0]) % p);
    return;
  }
  for (;;) {
    const std::uint64_t a = rng() % p;
    // gcd(f, (T + a)^((p-1)/2) - 1) splits f with probability about 1/2.
    GfpPoly h = pow_rem({a, 1}, (p - 1) / 2, f, p);
    h = sub_linear(std::move(h), 0, 1, p);
    GfpPoly g = gcd(f, h, p);
    const std::size_t dg = g.empty() ? 0 : degree(g);
    if (dg == 0 || dg == d) continue;
    // f / g by exact division: f = g * q.
    GfpPoly q(d - dg + 1, 0);
    GfpPoly r = f;
    for (std::size_t i = q.size(); i-- > 0;) {
      q[i] = r[i + dg];
      for (std::size_t j = 0; j <= dg; ++j) r[i + j] = add_mod(r[i + j], p - mul_mod(q[i], g[j], p), p);
    }
    split_into(g, p, rng, out);
    split_into(q, p, rng, out);
    return;
  }
}

}  // namespace

std::size_t degree(const GfpPoly& f) { return f.empty() ? 0 : f.size() - 1; }

GfpPoly split_part(const GfpPoly& f, std::uint64_t p) {
  GfpPoly monic = make_monic(f, p);
  if (monic.size() == 1) return monic;
  GfpPoly t_p = pow_rem({0, 1}, p, monic, p);
  return gcd(monic, sub_linear(std::move(t_p), 1, 0, p), p);
}

std::vector<std::uint64_t> split_linear(const GfpPoly& f, std::uint64_t p) {
  std::mt19937_64 rng(0x5eed'0000ULL ^ p);
  std::vector<std::uint64_t> out;
  split_into(f, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polysieve::detail
