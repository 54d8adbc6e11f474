// Independent test oracles: slow, obviously-correct reference computations
// the library results are checked against. Nothing here may call into the
// code paths it verifies.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "trinogen/gfpoly.hpp"
#include "trinogen/intpoly.hpp"

namespace oracles {

using trinogen::GFPoly;
using trinogen::Int;
using trinogen::IntPoly;

/// Factorization by trial division.
inline std::map<std::int64_t, int> factor_trial(Int v) {
  std::map<std::int64_t, int> out;
  if (v < 0) v = -v;
  for (std::int64_t q = 2; Int(q) * q <= v; ++q) {
    while (v % q == 0) {
      ++out[q];
      v /= q;
    }
  }
  if (v > 1) ++out[static_cast<std::int64_t>(v)];
  return out;
}

/// nu_p(n!) by Legendre's formula.
inline long long factorial_val(const Int& n, std::int64_t p) {
  long long total = 0;
  Int q = n / p;
  while (q > 0) {
    total += static_cast<long long>(q);
    q /= p;
  }
  return total;
}

/// nu_p(C(n, j)) via factorial valuations.
inline long long binomial_val(const Int& n, const Int& j, std::int64_t p) {
  return factorial_val(n, p) - factorial_val(j, p) - factorial_val(n - j, p);
}

/// Exact binomial coefficient.
inline Int binomial(const Int& n, const Int& j) {
  Int num = 1, den = 1;
  for (Int i = 0; i < j; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

/// All monic polynomials of exact degree d over F_p, lexicographic.
inline std::vector<GFPoly> all_monic(std::int64_t p, int d) {
  std::vector<GFPoly> out;
  std::int64_t count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
    std::int64_t t = idx;
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = t % p;
      t /= p;
    }
    c[static_cast<std::size_t>(d)] = 1;
    out.emplace_back(p, std::move(c));
  }
  return out;
}

/// Irreducibility over F_p by trial division against all lower-degree monics.
inline bool irreducible_by_trial(const GFPoly& f) {
  const int d = f.degree();
  if (d <= 0) return false;
  for (int e = 1; 2 * e <= d; ++e) {
    for (const GFPoly& g : all_monic(f.p, e)) {
      if (trinogen::gf_divides(g, f)) return false;
    }
  }
  return true;
}

/// All monic irreducibles of exact degree d over F_p.
inline std::vector<GFPoly> irreducibles_by_enumeration(std::int64_t p, int d) {
  std::vector<GFPoly> out;
  for (const GFPoly& g : all_monic(p, d)) {
    if (irreducible_by_trial(g)) out.push_back(g);
  }
  return out;
}

/// Random integer polynomial, monic, exact degree d, |coeffs| <= bound.
inline IntPoly random_monic(std::mt19937_64& rng, int d, long long bound) {
  std::uniform_int_distribution<long long> dist(-bound, bound);
  std::vector<Int> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = dist(rng);
  c[static_cast<std::size_t>(d)] = 1;
  return IntPoly(std::move(c));
}

inline GFPoly random_gf(std::mt19937_64& rng, std::int64_t p, int max_deg) {
  std::uniform_int_distribution<int> ddist(0, max_deg);
  const int d = ddist(rng);
  std::uniform_int_distribution<std::int64_t> cdist(0, p - 1);
  std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = cdist(rng);
  if (c.back() == 0) c.back() = 1;
  return GFPoly(p, std::move(c));
}

}  // namespace oracles
