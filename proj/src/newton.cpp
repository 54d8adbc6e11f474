#include "trinogen/newton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace trinogen {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// --- per-term valuation/residue data shared by the exact and capped paths ---

struct TermData {
  enum class Kind { Finite, Capped, Zero } kind = Kind::Zero;
  long long val = 0;  // valid for Finite
  GFPoly residue;     // (a_i / p^val) mod p, valid for Finite
};

TermData term_from_exact(const IntPoly& a, i64 p) {
  TermData t;
  if (a.is_zero()) {
    t.kind = TermData::Kind::Zero;
    return t;
  }
  long long v = -1;
  for (const Int& c : a.c) {
    if (c == 0) continue;
    long long cv = vp(c, p).value();
    if (v < 0 || cv < v) v = cv;
  }
  t.kind = TermData::Kind::Finite;
  t.val = v;
  const Int pv = int_pow(p, static_cast<unsigned long long>(v));
  std::vector<i64> rc(a.c.size(), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    rc[i] = mod_reduce(a.c[i] / pv, p);
  }
  t.residue = GFPoly(p, std::move(rc));
  return t;
}

// --- capped development: phi-adic coefficients computed in Z/p^k ---

struct Zpk64 {
  using Elem = u64;
  i64 p;
  unsigned k;
  u64 pk;
  Elem from_int(const Int& v) const { return static_cast<u64>(mod_reduce(v, static_cast<i64>(pk))); }
  Elem sub_mul(Elem acc, Elem a, Elem b) const {
    // acc - a*b mod pk
    u64 prod = static_cast<u64>(u128(a) * u128(b) % u128(pk));
    return (acc + pk - prod) % pk;
  }
  bool is_zero(Elem a) const { return a == 0; }
  std::pair<long long, Elem> val_unit(Elem a) const {
    long long v = 0;
    while (a % static_cast<u64>(p) == 0) {
      a /= static_cast<u64>(p);
      ++v;
    }
    return {v, a};
  }
  i64 residue_of(Elem a, long long shift) const {
    for (long long i = 0; i < shift; ++i) a /= static_cast<u64>(p);
    return static_cast<i64>(a % static_cast<u64>(p));
  }
};

struct ZpkBig {
  using Elem = Int;
  i64 p;
  unsigned k;
  Int pk;
  Elem from_int(const Int& v) const {
    Int r = v % pk;
    if (r < 0) r += pk;
    return r;
  }
  Elem sub_mul(const Elem& acc, const Elem& a, const Elem& b) const {
    Int r = (acc - a * b) % pk;
    if (r < 0) r += pk;
    return r;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  std::pair<long long, Elem> val_unit(Elem a) const {
    long long v = 0;
    while (a % p == 0) {
      a /= p;
      ++v;
    }
    return {v, a};
  }
  i64 residue_of(Elem a, long long shift) const {
    for (long long i = 0; i < shift; ++i) a /= p;
    return static_cast<i64>(a % p);
  }
};

template <class Ring>
std::vector<TermData> dev_capped_ring(const IntPoly& f, const IntPoly& phi, const Ring& ring,
                                      std::size_t max_terms) {
  using Elem = typename Ring::Elem;
  const int dphi = phi.degree();
  std::vector<Elem> cur(f.c.size());
  for (std::size_t i = 0; i < f.c.size(); ++i) cur[i] = ring.from_int(f.c[i]);
  std::vector<Elem> ph(phi.c.size());
  for (std::size_t i = 0; i < phi.c.size(); ++i) ph[i] = ring.from_int(phi.c[i]);

  std::vector<TermData> terms;
  terms.reserve(max_terms);
  while (terms.size() < max_terms) {
    // One in-place division by the monic phi: the low dphi slots become the
    // remainder, the rest the quotient.
    if (static_cast<int>(cur.size()) - 1 >= dphi) {
      for (int i = static_cast<int>(cur.size()) - 1; i >= dphi; --i) {
        const Elem coef = cur[static_cast<std::size_t>(i)];
        if (ring.is_zero(coef)) continue;
        for (int j = 0; j < dphi; ++j) {
          auto& slot = cur[static_cast<std::size_t>(i - dphi + j)];
          slot = ring.sub_mul(slot, coef, ph[static_cast<std::size_t>(j)]);
        }
      }
    }
    const std::size_t rem_len = std::min<std::size_t>(cur.size(), static_cast<std::size_t>(dphi));
    TermData t;
    long long minval = -1;
    for (std::size_t j = 0; j < rem_len; ++j) {
      if (ring.is_zero(cur[j])) continue;
      long long v = ring.val_unit(cur[j]).first;
      if (minval < 0 || v < minval) minval = v;
    }
    if (minval < 0) {
      t.kind = TermData::Kind::Capped;  // all coefficients vanish mod p^k
    } else {
      t.kind = TermData::Kind::Finite;
      t.val = minval;
      std::vector<i64> rc(rem_len, 0);
      for (std::size_t j = 0; j < rem_len; ++j) {
        if (!ring.is_zero(cur[j])) rc[j] = ring.residue_of(cur[j], minval);
      }
      t.residue = GFPoly(ring.p, std::move(rc));
    }
    terms.push_back(std::move(t));
    if (cur.size() <= static_cast<std::size_t>(dphi)) {
      cur.clear();
    } else {
      cur.erase(cur.begin(), cur.begin() + dphi);
    }
    if (cur.empty()) break;
  }
  while (terms.size() < max_terms) terms.push_back(TermData{TermData::Kind::Capped, 0, GFPoly()});
  return terms;
}

unsigned max_small_exponent(i64 p) {
  unsigned k = 0;
  u64 v = 1;
  while (v <= (u64(1) << 62) / static_cast<u64>(p)) {
    v *= static_cast<u64>(p);
    ++k;
  }
  return k;
}

// Development valuations capped at p^k; term 0 must come out finite, so k is
// doubled until it does. A term 0 still vanishing at a deep cap almost
// always means phi | F exactly; that is checked and reported as a factor.
std::vector<TermData> dev_capped_adaptive(const IntPoly& f, const IntPoly& phi, i64 p,
                                          std::size_t max_terms) {
  const unsigned small_cap = max_small_exponent(p);
  unsigned k = std::min<unsigned>(24, std::max<unsigned>(small_cap, 2));
  while (true) {
    std::vector<TermData> terms;
    if (k <= small_cap) {
      Zpk64 ring{p, k, static_cast<u64>(int_pow(p, k))};
      terms = dev_capped_ring(f, phi, ring, max_terms);
    } else {
      ZpkBig ring{p, k, int_pow(p, k)};
      terms = dev_capped_ring(f, phi, ring, max_terms);
    }
    if (!terms.empty() && terms[0].kind != TermData::Kind::Capped) return terms;
    if (k >= 64) {
      IntPoly q, r;
      ip_divmod_monic(f, phi, q, r);
      if (r.is_zero()) throw FactorFound(phi);
    }
    if (k > 4096)
      throw std::runtime_error("valuation cap exceeded past 4096 without an exact factor");
    k *= 2;
  }
}

// --- hull construction over exact integer points ---

long long cross(const std::pair<long long, long long>& a, const std::pair<long long, long long>& b,
                const std::pair<long long, long long>& c) {
  return (b.first - a.first) * (c.second - a.second) -
         (b.second - a.second) * (c.first - a.first);
}

std::vector<std::pair<long long, long long>> lower_hull(
    const std::vector<std::pair<long long, long long>>& pts) {
  std::vector<std::pair<long long, long long>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
      hull.pop_back();
    hull.push_back(pt);
  }
  return hull;
}

Side make_side(long long x0, long long y0, long long x1, long long y1) {
  Side s;
  s.x0 = x0;
  s.y0 = y0;
  s.x1 = x1;
  s.y1 = y1;
  const long long dy = y0 - y1;
  const long long dx = x1 - x0;
  if (dy > 0) {
    const long long g = std::gcd(dy, dx);
    s.h = dy / g;
    s.e = dx / g;
  } else if (dy == 0) {
    s.h = 0;
    s.e = 1;
  } else {
    const long long g = std::gcd(-dy, dx);
    s.h = dy / g;  // negative; non-principal side
    s.e = dx / g;
  }
  return s;
}

NewtonPolygon polygon_from_vertices(const std::vector<std::pair<long long, long long>>& verts,
                                    long long phi_degree, bool principal_only) {
  NewtonPolygon np;
  np.phi_degree = phi_degree;
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    Side s = make_side(verts[i].first, verts[i].second, verts[i + 1].first, verts[i + 1].second);
    if (principal_only && !s.is_principal()) continue;
    np.sides.push_back(s);
  }
  return np;
}

std::vector<std::pair<long long, long long>> finite_points(const std::vector<TermData>& terms) {
  std::vector<std::pair<long long, long long>> pts;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].kind == TermData::Kind::Finite)
      pts.emplace_back(static_cast<long long>(i), terms[i].val);
  }
  return pts;
}

// Residual polynomial of a side from per-term data; residues are reduced
// into F_phi = F_p[x]/(gbar).
ExtGFPoly residual_from_terms(const std::vector<TermData>& terms, const Side& side,
                              const GFPoly& gbar) {
  const long long d = side.degree();
  std::vector<GFPoly> coeffs;
  coeffs.reserve(static_cast<std::size_t>(d) + 1);
  for (long long j = 0; j <= d; ++j) {
    const long long x = side.x0 + j * side.e;
    const long long y_on = side.y0 - j * side.h;
    GFPoly c = GFPoly::zero(gbar.p);
    if (x < static_cast<long long>(terms.size())) {
      const TermData& t = terms[static_cast<std::size_t>(x)];
      if (t.kind == TermData::Kind::Finite && t.val == y_on) c = gf_mod(t.residue, gbar);
    }
    coeffs.push_back(std::move(c));
  }
  return ExtGFPoly(gbar, std::move(coeffs));
}

std::vector<TermData> terms_from_dev(const PhiDevelopment& dev, i64 p) {
  std::vector<TermData> terms;
  terms.reserve(dev.terms.size());
  for (const IntPoly& a : dev.terms) terms.push_back(term_from_exact(a, p));
  return terms;
}

}  // namespace

std::string Side::slope_string() const {
  const long long num = y1 - y0;
  const long long den = x1 - x0;
  const long long g = std::gcd(num == 0 ? den : std::abs(num), den);
  std::ostringstream out;
  if (den / g == 1) {
    out << num / g;
  } else {
    out << num / g << "/" << den / g;
  }
  return out.str();
}

std::vector<std::pair<long long, long long>> NewtonPolygon::vertices() const {
  std::vector<std::pair<long long, long long>> v;
  if (sides.empty()) return v;
  v.emplace_back(sides.front().x0, sides.front().y0);
  for (const Side& s : sides) v.emplace_back(s.x1, s.y1);
  return v;
}

PolygonPair build_polygon(const PhiDevelopment& dev, std::int64_t p) {
  require_prime(p);
  if (dev.terms.empty()) throw std::invalid_argument("empty development");
  const std::vector<TermData> terms = terms_from_dev(dev, p);
  PolygonPair out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].kind == TermData::Kind::Finite)
      out.points.push_back(NPPoint{static_cast<long long>(i), Valuation(terms[i].val)});
  }
  const auto pts = finite_points(terms);
  if (pts.empty()) throw std::invalid_argument("development has no finite-valuation point");
  const auto hull = lower_hull(pts);
  const long long dphi = dev.phi.degree();
  out.full = polygon_from_vertices(hull, dphi, false);
  out.principal = polygon_from_vertices(hull, dphi, true);
  return out;
}

long long phi_index(const NewtonPolygon& principal) {
  long long count = 0;
  for (const Side& s : principal.sides) {
    if (!s.is_principal())
      throw std::invalid_argument("phi_index expects a principal polygon");
    for (long long x = std::max<long long>(s.x0 + 1, 1); x <= s.x1; ++x) {
      const long long num = s.y0 * s.e - (x - s.x0) * s.h;  // hull height times e
      count += std::max<long long>(num / s.e, 0);
    }
  }
  return count * principal.phi_degree;
}

ResidualPoly residual_polynomial(const PhiDevelopment& dev, std::int64_t p, const Side& side) {
  const PolygonPair pp = build_polygon(dev, p);
  bool found = false;
  for (const Side& s : pp.principal.sides) {
    if (s.x0 == side.x0 && s.y0 == side.y0 && s.x1 == side.x1 && s.y1 == side.y1) {
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("side does not belong to the principal polygon");
  const std::vector<TermData> terms = terms_from_dev(dev, p);
  const GFPoly gbar = reduce_mod_p(dev.phi, p);
  return ResidualPoly{side, residual_from_terms(terms, side, gbar)};
}

AdmissibleCheck check_admissible(const IntPoly& phi, const std::vector<IntPoly>& terms,
                                 std::int64_t p) {
  require_prime(p);
  if (!phi.is_monic() || phi.degree() < 1)
    throw std::invalid_argument("check_admissible requires a monic phi of degree >= 1");
  const GFPoly gbar = reduce_mod_p(phi, p);
  std::vector<TermData> td;
  td.reserve(terms.size());
  for (const IntPoly& a : terms) td.push_back(term_from_exact(a, p));
  const auto pts = finite_points(td);
  if (pts.empty()) throw std::invalid_argument("development has no finite-valuation point");
  const auto hull = lower_hull(pts);

  AdmissibleCheck out;
  out.principal = polygon_from_vertices(hull, phi.degree(), true);

  // Vertex abscissas of the principal polygon, endpoints included.
  std::vector<long long> vertex_abscissas;
  for (const auto& v : out.principal.vertices()) vertex_abscissas.push_back(v.first);

  out.admissible = true;
  for (long long j : vertex_abscissas) {
    const TermData& t = td[static_cast<std::size_t>(j)];
    if (t.kind != TermData::Kind::Finite || gf_mod(t.residue, gbar).is_zero()) {
      out.admissible = false;
      break;
    }
  }
  if (out.admissible) {
    for (const Side& s : out.principal.sides) {
      out.residuals.push_back(ResidualPoly{s, residual_from_terms(td, s, gbar)});
    }
  }
  return out;
}

AdmissibleCheck check_admissible(PhiDevelopment& dev, std::int64_t p) {
  AdmissibleCheck res = check_admissible(dev.phi, dev.terms, p);
  dev.admissible = res.admissible;
  return res;
}

PhiFactorAnalysis analyze_phi_factor(const IntPoly& f, const IntPoly& phi, const GFPoly& gbar,
                                     long long multiplicity, std::int64_t p) {
  if (multiplicity < 1) throw std::invalid_argument("factor multiplicity must be >= 1");
  PhiFactorAnalysis fa;
  fa.residue_factor = gbar;
  fa.lift = phi;
  fa.multiplicity = multiplicity;

  const std::size_t max_terms = static_cast<std::size_t>(multiplicity) + 1;
  const std::vector<TermData> terms = dev_capped_adaptive(f, phi, p, max_terms);
  if (terms.back().kind != TermData::Kind::Finite || terms.back().val != 0)
    throw std::logic_error("development term at the factor multiplicity is not a unit");

  const auto pts = finite_points(terms);
  const auto hull = lower_hull(pts);
  fa.principal = polygon_from_vertices(hull, phi.degree(), true);
  fa.index = phi_index(fa.principal);

  fa.regular = true;
  for (const Side& s : fa.principal.sides) {
    ResidualPoly rp{s, residual_from_terms(terms, s, gbar)};
    auto factors = ext_factor(rp.poly);
    for (const auto& [psi, mult] : factors) {
      if (mult > 1) fa.regular = false;
      fa.primes.emplace_back(s.e, phi.degree() * psi.degree());
    }
    fa.residuals.push_back(std::move(rp));
    fa.residual_factors.push_back(std::move(factors));
  }
  if (!fa.regular) fa.primes.clear();
  return fa;
}

RegularityReport is_p_regular(const IntPoly& f, std::int64_t p) {
  require_prime(p);
  if (!f.is_monic()) throw std::invalid_argument("regularity analysis requires a monic polynomial");
  const GFPoly fbar = reduce_mod_p(f, p);
  const auto factors = gf_factor(fbar);

  // One separable witness carrying every residue factor: the radical of
  // F mod p, trivially lifted. All lifts are drawn from select_lifting so
  // the divisibility conditions hold uniformly.
  GFPoly radical = GFPoly::constant(p, 1);
  for (const auto& [g, mult] : factors) {
    (void)mult;
    radical = gf_mul(radical, g);
  }
  std::vector<Int> rad_coeffs(radical.c.size());
  for (std::size_t i = 0; i < radical.c.size(); ++i) rad_coeffs[i] = radical.c[i];
  const IntPoly rad_lift(std::move(rad_coeffs));

  RegularityReport rep;
  rep.regular = true;
  for (const auto& [g, mult] : factors) {
    const Lifting lift = select_lifting(g, rad_lift, p);
    PhiFactorAnalysis fa = analyze_phi_factor(f, lift.phi, g, mult, p);
    rep.regular = rep.regular && fa.regular;
    rep.factors.push_back(std::move(fa));
  }
  return rep;
}

}  // namespace trinogen
