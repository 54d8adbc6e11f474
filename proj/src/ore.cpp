#include "trinogen/ore.hpp"

#include <algorithm>
#include <sstream>

namespace trinogen {

FactorizationShape::FactorizationShape(std::vector<std::pair<long long, long long>> es)
    : entries(std::move(es)) {
  for (const auto& [e, f] : entries) {
    if (e < 1 || f < 1) throw std::invalid_argument("shape entries must have e, f >= 1");
  }
  std::sort(entries.begin(), entries.end());
}

long long FactorizationShape::sum_ef() const {
  long long s = 0;
  for (const auto& [e, f] : entries) s += e * f;
  return s;
}

long long FactorizationShape::count_residue_degree(long long d) const {
  long long c = 0;
  for (const auto& [e, f] : entries) {
    (void)e;
    if (f == d) ++c;
  }
  return c;
}

long long FactorizationShape::max_residue_degree() const {
  long long m = 0;
  for (const auto& [e, f] : entries) {
    (void)e;
    m = std::max(m, f);
  }
  return m;
}

std::string FactorizationShape::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << " ";
    out << "(" << entries[i].first << "," << entries[i].second << ")";
  }
  return out.str();
}

OreReport analyze_prime(const IntPoly& f, std::int64_t p) {
  require_prime(p);
  if (!f.is_monic()) throw std::invalid_argument("analyze_prime requires a monic polynomial");

  RegularityReport reg = is_p_regular(f, p);

  OreReport rep;
  rep.p = p;
  rep.regular = reg.regular;
  rep.index_lower_bound = 0;
  for (const auto& fa : reg.factors) rep.index_lower_bound += fa.index;
  if (reg.regular) {
    std::vector<std::pair<long long, long long>> entries;
    for (const auto& fa : reg.factors)
      entries.insert(entries.end(), fa.primes.begin(), fa.primes.end());
    FactorizationShape shape(std::move(entries));
    if (shape.sum_ef() != f.degree())
      throw std::logic_error("factorization shape does not fill the field degree");
    rep.shape = std::move(shape);
  }
  rep.factors = std::move(reg.factors);
  return rep;
}

bool dedekind_index_test(const IntPoly& f, std::int64_t p) {
  require_prime(p);
  if (!f.is_monic()) throw std::invalid_argument("Dedekind test requires a monic polynomial");
  const GFPoly fbar = reduce_mod_p(f, p);
  const auto factors = gf_factor(fbar);

  GFPoly gbar = GFPoly::constant(p, 1);  // radical
  for (const auto& [g, mult] : factors) {
    (void)mult;
    gbar = gf_mul(gbar, g);
  }
  GFPoly hbar, rem;
  gf_divmod(fbar, gbar, hbar, rem);

  auto lift = [](const GFPoly& g) {
    std::vector<Int> c(g.c.size());
    for (std::size_t i = 0; i < g.c.size(); ++i) c[i] = g.c[i];
    return IntPoly(std::move(c));
  };
  const IntPoly gl = lift(gbar);
  const IntPoly hl = lift(hbar);

  IntPoly diff = ip_sub(ip_mul(gl, hl), f);
  for (auto& v : diff.c) {
    if (v % p != 0) throw std::logic_error("Dedekind cofactor is not divisible by p");
    v /= p;
  }
  const GFPoly mbar = reduce_mod_p(diff, p);
  GFPoly g1 = gf_gcd(mbar, gbar);
  GFPoly g2 = gf_gcd(g1, hbar);
  return g2.degree() > 0;
}

}  // namespace trinogen
