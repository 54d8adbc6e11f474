#include "trinogen/gfpoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace trinogen {

namespace {

using i64 = std::int64_t;
using u128 = unsigned __int128;

i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>(u128(a) * u128(b) % u128(p)); }

i64 norm(i64 v, i64 p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t gf_hash(const GFPoly& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv_mix(h, static_cast<std::uint64_t>(f.p));
  for (i64 v : f.c) h = fnv_mix(h, static_cast<std::uint64_t>(v));
  return h;
}

std::uint64_t ext_hash(const ExtGFPoly& f) {
  std::uint64_t h = gf_hash(f.modulus);
  for (const auto& e : f.c) h = fnv_mix(h, gf_hash(e));
  return h;
}

}  // namespace

GFPoly::GFPoly(std::int64_t p_, std::vector<std::int64_t> coeffs) : p(p_), c(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("GFPoly requires p >= 2");
  for (auto& v : c) v = norm(v, p);
  normalize();
}

void GFPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

bool gf_less(const GFPoly& a, const GFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.c < b.c;
}

GFPoly gf_add(const GFPoly& a, const GFPoly& b) {
  std::vector<i64> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = norm(c[i] + b.c[i], a.p);
  return GFPoly(a.p, std::move(c));
}

GFPoly gf_sub(const GFPoly& a, const GFPoly& b) {
  std::vector<i64> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = norm(c[i] - b.c[i], a.p);
  return GFPoly(a.p, std::move(c));
}

GFPoly gf_mul(const GFPoly& a, const GFPoly& b) {
  if (a.is_zero() || b.is_zero()) return GFPoly::zero(a.p);
  std::vector<i64> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      c[i + j] = norm(c[i + j] + mulmod(a.c[i], b.c[j], a.p), a.p);
    }
  }
  return GFPoly(a.p, std::move(c));
}

GFPoly gf_scale(const GFPoly& a, std::int64_t s) {
  s = norm(s, a.p);
  if (s == 0) return GFPoly::zero(a.p);
  GFPoly r = a;
  for (auto& v : r.c) v = mulmod(v, s, a.p);
  r.normalize();
  return r;
}

void gf_divmod(const GFPoly& a, const GFPoly& d, GFPoly& quot, GFPoly& rem) {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const i64 p = a.p;
  const int dd = d.degree();
  std::vector<i64> r = a.c;
  if (a.degree() < dd) {
    quot = GFPoly::zero(p);
    rem = a;
    return;
  }
  const i64 inv_lead = mod_inverse(d.lead(), p);
  std::vector<i64> q(a.degree() - dd + 1, 0);
  for (int i = a.degree(); i >= dd; --i) {
    i64 coef = r[i];
    if (coef == 0) continue;
    i64 qc = mulmod(coef, inv_lead, p);
    q[i - dd] = qc;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] = norm(r[i - dd + j] - mulmod(qc, d.c[j], p), p);
  }
  quot = GFPoly(p, std::move(q));
  rem = GFPoly(p, std::move(r));
}

GFPoly gf_mod(const GFPoly& a, const GFPoly& d) {
  GFPoly q, r;
  gf_divmod(a, d, q, r);
  return r;
}

GFPoly gf_gcd(GFPoly a, GFPoly b) {
  while (!b.is_zero()) {
    GFPoly r = gf_mod(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return gf_make_monic(a);
}

GFPoly gf_pow_mod(const GFPoly& base, const Int& exp, const GFPoly& mod) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  GFPoly result = GFPoly::constant(base.p, 1);
  GFPoly b = gf_mod(base, mod);
  Int e = exp;
  while (e > 0) {
    if (bit_test(e, 0)) result = gf_mod(gf_mul(result, b), mod);
    e >>= 1;
    if (e > 0) b = gf_mod(gf_mul(b, b), mod);
  }
  return result;
}

GFPoly gf_derivative(const GFPoly& a) {
  if (a.c.size() <= 1) return GFPoly::zero(a.p);
  std::vector<i64> c(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    c[i - 1] = mulmod(a.c[i], static_cast<i64>(i % a.p), a.p);
  }
  return GFPoly(a.p, std::move(c));
}

GFPoly gf_make_monic(const GFPoly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return gf_scale(a, mod_inverse(a.lead(), a.p));
}

bool gf_divides(const GFPoly& g, const GFPoly& f) {
  if (g.is_zero()) return f.is_zero();
  return gf_mod(f, g).is_zero();
}

std::string to_string(const GFPoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    if (a.c[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (a.c[i] != 1 || i == 0) out << a.c[i];
    if (i > 0) {
      if (a.c[i] != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

GFPoly reduce_mod_p(const IntPoly& f, std::int64_t p) {
  require_prime(p);
  std::vector<i64> c(f.c.size());
  for (std::size_t i = 0; i < f.c.size(); ++i) c[i] = mod_reduce(f.c[i], p);
  return GFPoly(p, std::move(c));
}

GFPoly gf_binomial(std::int64_t p, unsigned long long s, const Int& t) {
  require_prime(p);
  if (s == 0) throw std::invalid_argument("gf_binomial requires s >= 1");
  std::vector<i64> c(s + 1, 0);
  c[0] = mod_reduce(t, p);
  c[s] = 1;
  return GFPoly(p, std::move(c));
}

bool is_separable(const GFPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("separability of the zero polynomial");
  GFPoly g = gf_gcd(f, gf_derivative(f));
  return g.degree() == 0;
}

bool gf_is_irreducible(const GFPoly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const GFPoly fm = gf_make_monic(f);
  // x^{p^n} == x mod f, and gcd(x^{p^{n/l}} - x, f) = 1 for each prime l | n
  const GFPoly x = GFPoly::x(f.p);
  GFPoly xp = gf_pow_mod(x, Int(f.p), fm);  // x^{p^1}
  std::vector<GFPoly> frob{xp};             // frob[i] = x^{p^{i+1}} mod f, built by powmod chain
  for (int i = 1; i < n; ++i) frob.push_back(gf_pow_mod(frob.back(), Int(f.p), fm));
  if (!(frob[n - 1] == gf_mod(x, fm))) return false;
  for (int l = 2; l <= n; ++l) {
    if (n % l != 0 || !is_prime(l)) continue;
    GFPoly diff = gf_sub(frob[n / l - 1], x);
    if (gf_gcd(fm, diff).degree() != 0) return false;
  }
  return true;
}

namespace {

// Squarefree decomposition valid in characteristic p: returns (g, k) pairs
// with f = prod g^k (up to the leading unit), g squarefree and pairwise
// coprime.
void gf_squarefree(const GFPoly& f, int mult, std::vector<std::pair<GFPoly, int>>& out) {
  const i64 p = f.p;
  GFPoly fm = gf_make_monic(f);
  GFPoly d = gf_derivative(fm);
  if (d.is_zero()) {
    // f = g(x^p); take p-th roots of the coefficients (identity over F_p)
    std::vector<i64> c;
    for (std::size_t i = 0; i < fm.c.size(); i += static_cast<std::size_t>(p)) c.push_back(fm.c[i]);
    gf_squarefree(GFPoly(p, std::move(c)), mult * static_cast<int>(p), out);
    return;
  }
  GFPoly w = gf_gcd(fm, d);
  GFPoly rest = fm;
  {
    GFPoly q, r;
    gf_divmod(rest, w, q, r);
    rest = q;  // product of squarefree parts with multiplicity not divisible by p
  }
  int k = 1;
  while (rest.degree() > 0) {
    GFPoly g = gf_gcd(rest, w);
    GFPoly q, r;
    gf_divmod(rest, g, q, r);
    if (q.degree() > 0) out.emplace_back(q, mult * k);
    rest = g;
    if (!g.is_zero() && g.degree() >= 0) {
      GFPoly q2, r2;
      gf_divmod(w, g, q2, r2);
      w = q2;
    }
    ++k;
  }
  if (w.degree() > 0) gf_squarefree(w, mult, out);
}

// Distinct-degree split of a squarefree monic f: (product of degree-d
// irreducibles, d) pairs.
std::vector<std::pair<GFPoly, int>> gf_distinct_degree(const GFPoly& f) {
  std::vector<std::pair<GFPoly, int>> out;
  const GFPoly x = GFPoly::x(f.p);
  GFPoly h = gf_mod(x, f);
  GFPoly rest = f;
  int d = 0;
  while (rest.degree() > 0) {
    ++d;
    if (2 * d > rest.degree()) {
      out.emplace_back(rest, rest.degree());
      break;
    }
    h = gf_pow_mod(h, Int(f.p), rest);
    GFPoly g = gf_gcd(rest, gf_sub(h, x));
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      GFPoly q, r;
      gf_divmod(rest, g, q, r);
      rest = q;
      h = gf_mod(h, rest);
    }
  }
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus), deterministic via seeded RNG.
void gf_equal_degree(const GFPoly& f, int d, std::mt19937_64& rng, std::vector<GFPoly>& out) {
  if (f.degree() == d) {
    out.push_back(gf_make_monic(f));
    return;
  }
  const i64 p = f.p;
  const int n = f.degree();
  GFPoly g;
  while (true) {
    std::vector<i64> rc(static_cast<std::size_t>(n), 0);
    for (auto& v : rc) v = static_cast<i64>(rng() % static_cast<std::uint64_t>(p));
    GFPoly r(p, std::move(rc));
    if (r.degree() < 1) continue;
    if (p == 2) {
      // trace map sum_{i<d} r^{2^i}
      GFPoly s = gf_mod(r, f);
      GFPoly acc = s;
      for (int i = 1; i < d; ++i) {
        s = gf_mod(gf_mul(s, s), f);
        acc = gf_add(acc, s);
      }
      g = gf_gcd(f, acc);
    } else {
      Int e = (int_pow(p, static_cast<unsigned>(d)) - 1) / 2;
      GFPoly s = gf_pow_mod(r, e, f);
      g = gf_gcd(f, gf_sub(s, GFPoly::constant(p, 1)));
    }
    if (g.degree() > 0 && g.degree() < n) break;
  }
  GFPoly q, rr;
  gf_divmod(f, g, q, rr);
  gf_equal_degree(g, d, rng, out);
  gf_equal_degree(gf_make_monic(q), d, rng, out);
}

}  // namespace

std::vector<std::pair<GFPoly, int>> gf_factor(const GFPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  std::vector<std::pair<GFPoly, int>> result;
  if (f.degree() == 0) return result;
  std::vector<std::pair<GFPoly, int>> sqf;
  gf_squarefree(f, 1, sqf);
  std::mt19937_64 rng(gf_hash(f));
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : gf_distinct_degree(part)) {
      std::vector<GFPoly> irr;
      gf_equal_degree(block, d, rng, irr);
      for (auto& g : irr) result.emplace_back(std::move(g), mult);
    }
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return gf_less(a.first, b.first); });
  return result;
}

long long count_factors_deg(std::int64_t p, unsigned d, unsigned long long s, const Int& t) {
  if (d == 0) throw std::invalid_argument("factor degree must be >= 1");
  long long count = 0;
  for (const auto& [g, mult] : gf_factor(gf_binomial(p, s, t))) {
    (void)mult;
    if (g.degree() == static_cast<int>(d)) ++count;
  }
  return count;
}

long long count_factors_deg_excluding(std::int64_t p, unsigned d, unsigned long long s,
                                      const Int& t, unsigned long long m, const Int& cval) {
  if (d == 0) throw std::invalid_argument("factor degree must be >= 1");
  const GFPoly other = gf_binomial(p, m, cval);
  long long count = 0;
  for (const auto& [g, mult] : gf_factor(gf_binomial(p, s, t))) {
    (void)mult;
    if (g.degree() != static_cast<int>(d)) continue;
    if (!gf_divides(g, other)) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Extension field F_phi = F_p[x]/(modulus)
// ---------------------------------------------------------------------------

namespace {

GFPoly elem_reduce(const GFPoly& v, const GFPoly& modulus) { return gf_mod(v, modulus); }

GFPoly elem_mul(const GFPoly& a, const GFPoly& b, const GFPoly& modulus) {
  return gf_mod(gf_mul(a, b), modulus);
}

GFPoly elem_inv(const GFPoly& a, const GFPoly& modulus) {
  // extended Euclid in F_p[x]
  if (a.is_zero()) throw std::invalid_argument("inverse of 0 in extension field");
  GFPoly r0 = modulus, r1 = a;
  GFPoly t0 = GFPoly::zero(a.p), t1 = GFPoly::constant(a.p, 1);
  while (!r1.is_zero()) {
    GFPoly q, r;
    gf_divmod(r0, r1, q, r);
    GFPoly t2 = gf_sub(t0, gf_mul(q, t1));
    r0 = r1;
    r1 = r;
    t0 = t1;
    t1 = t2;
  }
  if (r0.degree() != 0) throw std::invalid_argument("extension modulus is not irreducible");
  return gf_scale(t0, mod_inverse(r0.c[0], a.p));
}

// Frobenius-style q-th power of an element, q = p^deg(modulus).
GFPoly elem_pow(const GFPoly& a, Int e, const GFPoly& modulus) {
  GFPoly result = GFPoly::constant(modulus.p, 1);
  GFPoly b = elem_reduce(a, modulus);
  while (e > 0) {
    if (bit_test(e, 0)) result = elem_mul(result, b, modulus);
    e >>= 1;
    if (e > 0) b = elem_mul(b, b, modulus);
  }
  return result;
}

}  // namespace

ExtGFPoly::ExtGFPoly(GFPoly modulus_, std::vector<GFPoly> coeffs)
    : modulus(std::move(modulus_)), c(std::move(coeffs)) {
  if (modulus.degree() < 1 || !modulus.is_monic())
    throw std::invalid_argument("extension modulus must be monic of degree >= 1");
  for (auto& e : c) e = elem_reduce(e, modulus);
  normalize();
}

void ExtGFPoly::normalize() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

bool ExtGFPoly::is_monic() const {
  return !c.empty() && c.back().degree() == 0 && c.back().c[0] == 1;
}

GFPoly ExtGFPoly::coeff(std::size_t i) const {
  return i < c.size() ? c[i] : GFPoly::zero(modulus.p);
}

ExtGFPoly ExtGFPoly::constant(const GFPoly& modulus, const GFPoly& v) {
  return ExtGFPoly(modulus, {v});
}

ExtGFPoly ExtGFPoly::y(const GFPoly& modulus) {
  return ExtGFPoly(modulus, {GFPoly::zero(modulus.p), GFPoly::constant(modulus.p, 1)});
}

bool ext_less(const ExtGFPoly& a, const ExtGFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!(a.c[i] == b.c[i])) return gf_less(a.c[i], b.c[i]);
  }
  return false;
}

ExtGFPoly ext_add(const ExtGFPoly& a, const ExtGFPoly& b) {
  std::vector<GFPoly> c(std::max(a.c.size(), b.c.size()), GFPoly::zero(a.modulus.p));
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = gf_add(c[i], b.c[i]);
  return ExtGFPoly(a.modulus, std::move(c));
}

ExtGFPoly ext_sub(const ExtGFPoly& a, const ExtGFPoly& b) {
  std::vector<GFPoly> c(std::max(a.c.size(), b.c.size()), GFPoly::zero(a.modulus.p));
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = gf_sub(c[i], b.c[i]);
  return ExtGFPoly(a.modulus, std::move(c));
}

ExtGFPoly ext_mul(const ExtGFPoly& a, const ExtGFPoly& b) {
  if (a.is_zero() || b.is_zero()) return ExtGFPoly::zero(a.modulus);
  std::vector<GFPoly> c(a.c.size() + b.c.size() - 1, GFPoly::zero(a.modulus.p));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      c[i + j] = gf_add(c[i + j], elem_mul(a.c[i], b.c[j], a.modulus));
    }
  }
  return ExtGFPoly(a.modulus, std::move(c));
}

ExtGFPoly ext_scale(const ExtGFPoly& a, const GFPoly& s) {
  if (s.is_zero()) return ExtGFPoly::zero(a.modulus);
  std::vector<GFPoly> c = a.c;
  for (auto& e : c) e = elem_mul(e, s, a.modulus);
  return ExtGFPoly(a.modulus, std::move(c));
}

void ext_divmod(const ExtGFPoly& a, const ExtGFPoly& d, ExtGFPoly& quot, ExtGFPoly& rem) {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const int dd = d.degree();
  if (a.degree() < dd) {
    quot = ExtGFPoly::zero(a.modulus);
    rem = a;
    return;
  }
  const GFPoly inv_lead = elem_inv(d.c.back(), a.modulus);
  std::vector<GFPoly> r = a.c;
  std::vector<GFPoly> q(a.degree() - dd + 1, GFPoly::zero(a.modulus.p));
  for (int i = a.degree(); i >= dd; --i) {
    if (r[i].is_zero()) continue;
    GFPoly qc = elem_mul(r[i], inv_lead, a.modulus);
    q[i - dd] = qc;
    for (int j = 0; j <= dd; ++j) {
      r[i - dd + j] = gf_sub(r[i - dd + j], elem_mul(qc, d.c[j], a.modulus));
    }
  }
  quot = ExtGFPoly(a.modulus, std::move(q));
  rem = ExtGFPoly(a.modulus, std::move(r));
}

ExtGFPoly ext_gcd(ExtGFPoly a, ExtGFPoly b) {
  while (!b.is_zero()) {
    ExtGFPoly q, r;
    ext_divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return ext_make_monic(a);
}

ExtGFPoly ext_pow_mod(const ExtGFPoly& base, const Int& exp, const ExtGFPoly& mod) {
  ExtGFPoly result = ExtGFPoly::constant(base.modulus, GFPoly::constant(base.modulus.p, 1));
  ExtGFPoly q, b;
  ext_divmod(base, mod, q, b);
  Int e = exp;
  while (e > 0) {
    if (bit_test(e, 0)) {
      ExtGFPoly r;
      ext_divmod(ext_mul(result, b), mod, q, r);
      result = r;
    }
    e >>= 1;
    if (e > 0) {
      ExtGFPoly r;
      ext_divmod(ext_mul(b, b), mod, q, r);
      b = r;
    }
  }
  return result;
}

ExtGFPoly ext_derivative(const ExtGFPoly& a) {
  if (a.c.size() <= 1) return ExtGFPoly::zero(a.modulus);
  std::vector<GFPoly> c(a.c.size() - 1, GFPoly::zero(a.modulus.p));
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    c[i - 1] = gf_scale(a.c[i], static_cast<std::int64_t>(i % a.modulus.p));
  }
  return ExtGFPoly(a.modulus, std::move(c));
}

ExtGFPoly ext_make_monic(const ExtGFPoly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return ext_scale(a, elem_inv(a.c.back(), a.modulus));
}

std::string to_string(const ExtGFPoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    const GFPoly& e = a.c[i];
    if (e.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    const bool unit = (e.degree() == 0 && e.c[0] == 1);
    if (i == 0) {
      out << (e.degree() > 0 ? "(" + to_string(e) + ")" : to_string(e));
      continue;
    }
    if (!unit) out << (e.degree() > 0 ? "(" + to_string(e) + ")*" : to_string(e) + "*");
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

bool ext_is_separable(const ExtGFPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("separability of the zero polynomial");
  return ext_gcd(f, ext_derivative(f)).degree() == 0;
}

namespace {

void ext_squarefree(const ExtGFPoly& f, int mult, std::vector<std::pair<ExtGFPoly, int>>& out) {
  const i64 p = f.modulus.p;
  const int ext_deg = f.modulus.degree();
  ExtGFPoly fm = ext_make_monic(f);
  ExtGFPoly d = ext_derivative(fm);
  if (d.is_zero()) {
    // f = g(y^p); the p-th root of a coefficient c is c^{q/p}, q = p^ext_deg
    Int root_exp = int_pow(p, static_cast<unsigned>(ext_deg) - 1);
    std::vector<GFPoly> c;
    for (std::size_t i = 0; i < fm.c.size(); i += static_cast<std::size_t>(p)) {
      c.push_back(elem_pow(fm.c[i], root_exp, fm.modulus));
    }
    ext_squarefree(ExtGFPoly(fm.modulus, std::move(c)), mult * static_cast<int>(p), out);
    return;
  }
  ExtGFPoly w = ext_gcd(fm, d);
  ExtGFPoly rest, r;
  ext_divmod(fm, w, rest, r);
  int k = 1;
  while (rest.degree() > 0) {
    ExtGFPoly g = ext_gcd(rest, w);
    ExtGFPoly q, rr;
    ext_divmod(rest, g, q, rr);
    if (q.degree() > 0) out.emplace_back(q, mult * k);
    rest = g;
    ExtGFPoly q2, r2;
    ext_divmod(w, g, q2, r2);
    w = q2;
    ++k;
  }
  if (w.degree() > 0) ext_squarefree(w, mult, out);
}

std::vector<std::pair<ExtGFPoly, int>> ext_distinct_degree(const ExtGFPoly& f, const Int& q) {
  std::vector<std::pair<ExtGFPoly, int>> out;
  const ExtGFPoly y = ExtGFPoly::y(f.modulus);
  ExtGFPoly qpow, h;
  ext_divmod(y, f, qpow, h);
  ExtGFPoly rest = f;
  int d = 0;
  while (rest.degree() > 0) {
    ++d;
    if (2 * d > rest.degree()) {
      out.emplace_back(rest, rest.degree());
      break;
    }
    h = ext_pow_mod(h, q, rest);
    ExtGFPoly g = ext_gcd(rest, ext_sub(h, y));
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      ExtGFPoly quot, r;
      ext_divmod(rest, g, quot, r);
      rest = quot;
      ext_divmod(h, rest, quot, r);
      h = r;
    }
  }
  return out;
}

void ext_equal_degree(const ExtGFPoly& f, int d, const Int& q, std::mt19937_64& rng,
                      std::vector<ExtGFPoly>& out) {
  if (f.degree() == d) {
    out.push_back(ext_make_monic(f));
    return;
  }
  const i64 p = f.modulus.p;
  const int ext_deg = f.modulus.degree();
  const int n = f.degree();
  ExtGFPoly g;
  while (true) {
    std::vector<GFPoly> rc;
    rc.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::vector<i64> ec(static_cast<std::size_t>(ext_deg), 0);
      for (auto& v : ec) v = static_cast<i64>(rng() % static_cast<std::uint64_t>(p));
      rc.emplace_back(p, std::move(ec));
    }
    ExtGFPoly r(f.modulus, std::move(rc));
    if (r.degree() < 1) continue;
    if (p == 2) {
      // trace into F_2: sum of 2-power Frobenius images over F_{q^d}/F_2
      ExtGFPoly quot, s;
      ext_divmod(r, f, quot, s);
      ExtGFPoly acc = s;
      const int steps = ext_deg * d;
      for (int i = 1; i < steps; ++i) {
        ExtGFPoly rr;
        ext_divmod(ext_mul(s, s), f, quot, rr);
        s = rr;
        acc = ext_add(acc, s);
      }
      g = ext_gcd(f, acc);
    } else {
      Int e = (int_pow(q, static_cast<unsigned>(d)) - 1) / 2;
      ExtGFPoly s = ext_pow_mod(r, e, f);
      ExtGFPoly one = ExtGFPoly::constant(f.modulus, GFPoly::constant(p, 1));
      g = ext_gcd(f, ext_sub(s, one));
    }
    if (g.degree() > 0 && g.degree() < n) break;
  }
  ExtGFPoly quot, rr;
  ext_divmod(f, g, quot, rr);
  ext_equal_degree(g, d, q, rng, out);
  ext_equal_degree(ext_make_monic(quot), d, q, rng, out);
}

}  // namespace

std::vector<std::pair<ExtGFPoly, int>> ext_factor(const ExtGFPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  if (!gf_is_irreducible(f.modulus))
    throw std::invalid_argument("extension modulus is not irreducible");
  std::vector<std::pair<ExtGFPoly, int>> result;
  if (f.degree() == 0) return result;
  const Int q = int_pow(f.modulus.p, static_cast<unsigned>(f.modulus.degree()));
  std::vector<std::pair<ExtGFPoly, int>> sqf;
  ext_squarefree(f, 1, sqf);
  std::mt19937_64 rng(ext_hash(f));
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : ext_distinct_degree(part, q)) {
      std::vector<ExtGFPoly> irr;
      ext_equal_degree(block, d, q, rng, irr);
      for (auto& g : irr) result.emplace_back(std::move(g), mult);
    }
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return ext_less(a.first, b.first); });
  return result;
}

}  // namespace trinogen
