#include "trinogen/monogenity.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace trinogen {

namespace {

// Distinct factor degrees of x^s + t over F_p, with per-degree counts.
struct DegreeCounts {
  std::vector<std::pair<long long, long long>> counts;  // (degree, #factors) sorted

  long long at(long long d) const {
    for (const auto& [deg, n] : counts) {
      if (deg == d) return n;
    }
    return 0;
  }
};

DegreeCounts degree_counts(std::int64_t p, unsigned long long s, const Int& t) {
  std::map<long long, long long> m;
  for (const auto& [g, mult] : gf_factor(gf_binomial(p, s, t))) {
    (void)mult;
    ++m[g.degree()];
  }
  DegreeCounts dc;
  for (const auto& [d, n] : m) dc.counts.emplace_back(d, n);
  return dc;
}

// Unit of (t + (-t)^{p^e}) mod p, valid when v = nu_p(t + (-t)^{p^e}) is
// finite; computed at the modulus p^{v+1} without expanding the power.
std::int64_t shifted_unit_mod_p(const Int& t, std::int64_t p, long long e, long long v) {
  const Int mod = int_pow(p, static_cast<unsigned long long>(v) + 1);
  Int minus_t = (-t) % mod;
  if (minus_t < 0) minus_t += mod;
  Int x = pow_mod(minus_t, int_pow(p, static_cast<unsigned long long>(e)), mod);
  Int num = (t + x) % mod;
  if (num < 0) num += mod;
  const Int pv = int_pow(p, static_cast<unsigned long long>(v));
  if (num % pv != 0 || num == 0) throw std::logic_error("shifted_unit_mod_p: valuation mismatch");
  return mod_reduce(num / pv, p);
}

// Scans residue degrees for the first d <= max_d with N_p(d) < coeff * count.
std::optional<std::pair<long long, long long>> scan_degrees(std::int64_t p, long long coeff,
                                                            const DegreeCounts& dc,
                                                            long long max_d) {
  for (const auto& [d, n] : dc.counts) {
    if (d > max_d) break;
    const Int budget = count_monic_irreducible(p, static_cast<unsigned>(d));
    if (budget < Int(coeff) * n) {
      return std::make_pair(d, coeff * n);  // (witness d, P_d)
    }
  }
  return std::nullopt;
}

std::optional<std::pair<long long, long long>> scan_degrees_excluding(
    std::int64_t p, long long coeff, unsigned long long s, const Int& t, unsigned long long m,
    const Int& excl_c, long long max_d) {
  // Distinct degree-d factors of x^s + t that do not divide x^m + excl_c.
  std::map<long long, long long> counts;
  const GFPoly other = gf_binomial(p, m, excl_c);
  for (const auto& [g, mult] : gf_factor(gf_binomial(p, s, t))) {
    (void)mult;
    if (!gf_divides(g, other)) ++counts[g.degree()];
  }
  for (const auto& [d, n] : counts) {
    if (d > max_d) break;
    const Int budget = count_monic_irreducible(p, static_cast<unsigned>(d));
    if (budget < Int(coeff) * n) return std::make_pair(d, coeff * n);
  }
  return std::nullopt;
}

long long effective_max_d(const CheckOptions& opts, long long n) {
  return opts.max_d > 0 ? opts.max_d : n / 2;
}

}  // namespace

std::optional<TheoremHit> check_divisor_an(const Trinomial& t, std::int64_t p,
                                           const CheckOptions& opts) {
  require_prime(p);
  if (p == 2) return std::nullopt;
  if (!(p < t.n)) return std::nullopt;  // Zylinski bound
  if (t.a % p != 0 || t.b % p == 0 || t.n % p != 0) return std::nullopt;

  const long long r = vp(Int(t.n), p).value();
  const long long s = t.n / static_cast<long long>(int_pow(p, static_cast<unsigned long long>(r)));
  const Valuation mu = vp(t.a, p);
  const Valuation nu = lifted_val(t.b, p, static_cast<unsigned>(r));
  const long long max_d = effective_max_d(opts, t.n);
  const Valuation r1(r + 1);

  auto make_hit = [&](int cond, std::pair<long long, long long> dp) {
    TheoremHit hit;
    hit.source = "an(" + std::to_string(cond) + ")";
    hit.condition = cond;
    hit.d = dp.first;
    hit.primes_found = dp.second;
    hit.budget =
        static_cast<long long>(count_monic_irreducible(p, static_cast<unsigned>(dp.first)));
    hit.s_or_u = s;
    hit.r_or_k = r;
    hit.first_val = mu;
    hit.second_val = nu;
    return hit;
  };

  const DegreeCounts dc = degree_counts(p, static_cast<unsigned long long>(s), t.b);
  if (mu < min(nu, r1)) {
    if (auto dp = scan_degrees(p, mu.value(), dc, max_d)) return make_hit(1, *dp);
  } else if (nu < min(mu, r1)) {
    if (auto dp = scan_degrees(p, nu.value(), dc, max_d)) return make_hit(2, *dp);
  } else if (mu == nu && mu.is_finite() && mu <= Valuation(r)) {
    // factors must avoid x^m + c with c = (b + (-b)^{p^r}) / a, a p-unit ratio
    const std::int64_t num_unit = shifted_unit_mod_p(t.b, p, r, mu.value());
    const std::int64_t a_unit = mod_reduce(unit_part(t.a, p), p);
    const std::int64_t c = mod_reduce(Int(num_unit) * mod_inverse(a_unit, p), p);
    if (auto dp = scan_degrees_excluding(p, mu.value(), static_cast<unsigned long long>(s), t.b,
                                         static_cast<unsigned long long>(t.m), Int(c), max_d))
      return make_hit(3, *dp);
  } else if (Valuation(r + 1) <= min(mu, nu)) {
    if (auto dp = scan_degrees(p, r + 1, dc, max_d)) return make_hit(4, *dp);
  }
  return std::nullopt;
}

std::optional<TheoremHit> check_divisor_bnm(const Trinomial& t, std::int64_t p,
                                            const CheckOptions& opts) {
  require_prime(p);
  if (p == 2) return std::nullopt;
  if (!(p < t.n)) return std::nullopt;
  const long long gap = t.n - t.m;
  if (t.a % p == 0 || t.b % p != 0 || gap % p != 0) return std::nullopt;

  const long long k = vp(Int(gap), p).value();
  const long long u = gap / static_cast<long long>(int_pow(p, static_cast<unsigned long long>(k)));
  const Valuation delta = vp(t.b, p);
  const Valuation kappa = lifted_val(t.a, p, static_cast<unsigned>(k));
  const long long max_d = effective_max_d(opts, t.n);
  const Valuation k1(k + 1);

  auto make_hit = [&](int cond, std::pair<long long, long long> dp) {
    TheoremHit hit;
    hit.source = "bnm(" + std::to_string(cond) + ")";
    hit.condition = cond;
    hit.d = dp.first;
    hit.primes_found = dp.second;
    hit.budget =
        static_cast<long long>(count_monic_irreducible(p, static_cast<unsigned>(dp.first)));
    hit.s_or_u = u;
    hit.r_or_k = k;
    hit.first_val = delta;
    hit.second_val = kappa;
    return hit;
  };

  const DegreeCounts dc = degree_counts(p, static_cast<unsigned long long>(u), t.a);
  if (delta < min(kappa, k1)) {
    if (auto dp = scan_degrees(p, delta.value(), dc, max_d)) return make_hit(1, *dp);
  } else if (kappa < min(delta, k1)) {
    if (auto dp = scan_degrees(p, kappa.value(), dc, max_d)) return make_hit(2, *dp);
  } else if (kappa == delta && kappa.is_finite() && kappa <= Valuation(k)) {
    // c = b / (a + (-a)^{p^k}), again a p-unit ratio
    const std::int64_t den_unit = shifted_unit_mod_p(t.a, p, k, kappa.value());
    const std::int64_t b_unit = mod_reduce(unit_part(t.b, p), p);
    const std::int64_t c = mod_reduce(Int(b_unit) * mod_inverse(den_unit, p), p);
    auto dp = scan_degrees_excluding(p, kappa.value(), static_cast<unsigned long long>(u), t.a,
                                     static_cast<unsigned long long>(t.m), Int(c), max_d);
    if (dp) {
      TheoremHit hit = make_hit(3, *dp);
      if (opts.bnm_cond3_literal) {
        auto lit = scan_degrees_excluding(p, kappa.value(), static_cast<unsigned long long>(u),
                                          t.b, static_cast<unsigned long long>(t.m), Int(c), max_d);
        const long long lit_count = lit ? lit->second : 0;
        if (lit_count != hit.primes_found) hit.literal_count = lit_count;
      }
      return hit;
    }
  } else if (Valuation(k + 1) <= min(kappa, delta)) {
    if (auto dp = scan_degrees(p, k + 1, dc, max_d)) return make_hit(4, *dp);
  }
  return std::nullopt;
}

SexticVerdict check_sextic(const Trinomial& t) {
  if (t.n != 6) throw std::invalid_argument("sextic criterion requires n = 6");
  SexticVerdict v;
  v.mod9_family = (mod_reduce(t.a, 9) == 0) && (mod_reduce(t.b, 9) == 8);
  v.mod8_family = (mod_reduce(t.a, 8) == 0) && (mod_reduce(t.b, 8) == 7);
  return v;
}

FactorizationShape sextic_mod9_shape() {
  return FactorizationShape({{1, 1}, {1, 1}, {2, 1}, {2, 1}});
}

FactorizationShape sextic_mod8_shape() {
  return FactorizationShape({{1, 1}, {1, 1}, {1, 2}, {1, 2}});
}

namespace {

struct ClauseRow {
  bool first_exact;  // k (an-23) resp. r (bnm-23)
  long long first;
  bool second_exact;  // r resp. k
  long long second;
  long long mod;
  std::vector<long long> a_res;
  std::vector<long long> b_res;
};

// Degree n = 2^k 3^r family, p = 3.
const std::vector<ClauseRow>& an23_rows() {
  static const std::vector<ClauseRow> rows = {
      {false, 1, false, 2, 27, {9, 18}, {26}},
      {false, 1, false, 3, 81, {27, 54}, {80}},
      {false, 1, false, 2, 27, {0}, {8, 17}},
      {false, 1, false, 3, 81, {0}, {26, 53}},
      {false, 1, true, 1, 9, {0}, {8}},
      {false, 1, true, 2, 27, {0}, {26}},
      {true, 1, false, 7, 6561, {2187, 4374}, {1}},
      {true, 1, false, 7, 6561, {0}, {2188, 4375}},
      {true, 1, true, 6, 2187, {0}, {1}},
      {true, 2, false, 4, 243, {81, 162}, {1}},
      {true, 2, false, 4, 243, {0}, {82, 163}},
      {true, 2, true, 3, 81, {0}, {1}},
  };
  return rows;
}

// Gap n - m = 2^r 3^k family with (n - m) | m, p = 3.
const std::vector<ClauseRow>& bnm23_rows() {
  static const std::vector<ClauseRow> rows = {
      {true, 0, false, 5, 243, {1, 242}, {81, 162}},
      {true, 0, false, 5, 243, {80, 82, 161, 163}, {0}},
      {true, 0, true, 3, 81, {1, 80}, {0}},
      {false, 1, false, 2, 27, {26}, {9, 18}},
      {false, 1, false, 2, 27, {8, 17}, {0}},
      {false, 1, true, 1, 9, {8}, {0}},
      {true, 1, false, 7, 6561, {1}, {2187, 4374}},
      {true, 1, false, 7, 6561, {2188, 4375}, {0}},
      {true, 1, true, 6, 2187, {1}, {0}},
      {true, 2, false, 5, 243, {1}, {81, 162}},
      {true, 2, false, 5, 243, {82, 163}, {0}},
      {true, 2, true, 3, 243, {1}, {0}},
  };
  return rows;
}

bool row_matches(const ClauseRow& row, long long first, long long second, const Int& a,
                 const Int& b) {
  if (row.first_exact ? (first != row.first) : (first < row.first)) return false;
  if (row.second_exact ? (second != row.second) : (second < row.second)) return false;
  const long long ar = mod_reduce(a, row.mod);
  const long long br = mod_reduce(b, row.mod);
  return std::count(row.a_res.begin(), row.a_res.end(), ar) > 0 &&
         std::count(row.b_res.begin(), row.b_res.end(), br) > 0;
}

// n as 2^k * 3^r exactly, if it has no other prime factor.
std::optional<std::pair<long long, long long>> split_2k3r(long long n) {
  long long k = 0, r = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++k;
  }
  while (n % 3 == 0) {
    n /= 3;
    ++r;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(k, r);
}

std::optional<std::pair<std::int64_t, long long>> prime_power_base(long long n) {
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    long long r = 0;
    while (n % q == 0) {
      n /= q;
      ++r;
    }
    if (n != 1) return std::nullopt;
    return std::make_pair(q, r);
  }
  if (n > 1) return std::make_pair(static_cast<std::int64_t>(n), 1);
  return std::nullopt;
}

}  // namespace

std::vector<CorollaryMatch> match_corollary_families(const Trinomial& t,
                                                     const CheckOptions& opts) {
  std::vector<CorollaryMatch> out;

  // Degree 2^k 3^r clauses.
  if (auto kr = split_2k3r(t.n); kr && kr->first >= 1 && kr->second >= 1) {
    const auto& [k, r] = *kr;
    for (std::size_t i = 0; i < an23_rows().size(); ++i) {
      if (row_matches(an23_rows()[i], k, r, t.a, t.b) && check_divisor_an(t, 3, opts)) {
        out.push_back({"an-23", static_cast<int>(i) + 1, 3});
      }
    }
  }

  // Gap 2^r 3^k clauses; the exponents must also split the degree as
  // n = (s+1)(n-m), m = s(n-m).
  const long long gap = t.n - t.m;
  if (t.m % gap == 0) {
    if (auto rk = split_2k3r(gap); rk && rk->second >= 1) {
      const auto& [r, k] = *rk;
      for (std::size_t i = 0; i < bnm23_rows().size(); ++i) {
        if (row_matches(bnm23_rows()[i], r, k, t.a, t.b) && check_divisor_bnm(t, 3, opts)) {
          out.push_back({"bnm-23", static_cast<int>(i) + 1, 3});
        }
      }
    }
  }

  // Pure prime-power degree: n = p^r, r >= p, a = 0 and b^{p-1} = 1 mod p^{p+1}.
  if (auto pr = prime_power_base(t.n);
      pr && pr->first % 2 == 1 && pr->first <= 43 && pr->second >= pr->first) {
    const auto& [p, r] = *pr;
    (void)r;
    const Int mod = int_pow(p, static_cast<unsigned long long>(p) + 1);
    if (t.a % mod == 0 && t.b % p != 0 && pow_mod(t.b, p - 1, mod) == 1 &&
        check_divisor_an(t, p, opts)) {
      out.push_back({"purepower", 1, p});
    }
  }

  // gcd(delta, m) = 1 refinement of the b,n-m criterion: degree-1 counts
  // only, with the extra prime contributed by the x-factor of F mod p.
  for (std::int64_t p = 3; p < t.n; p += 2) {
    if (!is_prime(p)) continue;
    if (t.a % p == 0 || t.b % p != 0 || gap % p != 0) continue;
    const long long k = vp(Int(gap), p).value();
    const long long u = gap / static_cast<long long>(int_pow(p, static_cast<unsigned long long>(k)));
    const Valuation delta = vp(t.b, p);
    const Valuation kappa = lifted_val(t.a, p, static_cast<unsigned>(k));
    if (std::gcd(delta.value(), t.m) != 1) continue;
    const long long n1 = count_factors_deg(p, 1, static_cast<unsigned long long>(u), t.a);
    const Valuation k1(k + 1);
    int clause = 0;
    if (delta < min(kappa, k1)) {
      if (Int(p) < 1 + Int(delta.value()) * n1) clause = 1;
    } else if (kappa < min(delta, k1)) {
      if (Int(p) < 1 + Int(kappa.value()) * n1) clause = 2;
    } else if (kappa == delta && kappa.is_finite() && kappa <= Valuation(k)) {
      const std::int64_t den_unit = shifted_unit_mod_p(t.a, p, k, kappa.value());
      const std::int64_t b_unit = mod_reduce(unit_part(t.b, p), p);
      const std::int64_t c = mod_reduce(Int(b_unit) * mod_inverse(den_unit, p), p);
      const long long n1x =
          count_factors_deg_excluding(p, 1, static_cast<unsigned long long>(u), t.a,
                                      static_cast<unsigned long long>(t.m), Int(c));
      if (Int(p) < 1 + Int(kappa.value()) * n1x) clause = 3;
    } else if (Valuation(k + 1) <= min(kappa, delta)) {
      if (Int(p) < 1 + Int(k + 1) * n1) clause = 4;
    }
    if (clause != 0 && check_divisor_bnm(t, p, opts)) {
      out.push_back({"bnm-gcd", clause, p});
    }
  }

  return out;
}

std::optional<long long> common_index_divisor_test(const FactorizationShape& shape,
                                                   std::int64_t p, long long n) {
  if (shape.sum_ef() != n) throw std::invalid_argument("incomplete factorization shape");
  for (long long d = 1; d <= shape.max_residue_degree(); ++d) {
    const long long pd = shape.count_residue_degree(d);
    if (pd == 0) continue;
    if (count_monic_irreducible(p, static_cast<unsigned>(d)) < pd) return d;
  }
  return std::nullopt;
}

const EngstromTable& EngstromTable::builtin() {
  static const EngstromTable table = [] {
    EngstromTable t;
    t.rows_[{6, 3, {{1, 1}, {1, 1}, {2, 1}, {2, 1}}}] = 1;
    t.rows_[{6, 2, {{1, 1}, {1, 1}, {1, 2}, {1, 2}}}] = 2;
    return t;
  }();
  return table;
}

void EngstromTable::load_extension(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Engstrom extension file: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    long long n;
    std::int64_t p;
    if (!(ss >> n >> p)) {
      // blank or comment-only line
      std::istringstream check(line);
      std::string word;
      if (check >> word)
        throw std::runtime_error("bad Engstrom row at line " + std::to_string(lineno));
      continue;
    }
    std::vector<std::pair<long long, long long>> entries;
    std::string tok;
    long long val = -1;
    while (ss >> tok) {
      if (tok == "->") {
        if (!(ss >> val)) throw std::runtime_error("missing valuation at line " + std::to_string(lineno));
        break;
      }
      // entries may be packed: (e1,f1)(e2,f2)...
      const char* cur = tok.c_str();
      while (*cur != '\0') {
        long long e, f;
        int consumed = 0;
        if (std::sscanf(cur, "(%lld,%lld)%n", &e, &f, &consumed) != 2 || consumed == 0 ||
            cur[consumed - 1] != ')')
          throw std::runtime_error("bad shape entry at line " + std::to_string(lineno));
        entries.emplace_back(e, f);
        cur += consumed;
      }
    }
    if (val < 0 || entries.empty())
      throw std::runtime_error("bad Engstrom row at line " + std::to_string(lineno));
    FactorizationShape shape(std::move(entries));
    rows_[{n, p, shape.entries}] = val;
  }
}

std::optional<long long> EngstromTable::lookup(long long n, std::int64_t p,
                                               const FactorizationShape& shape) const {
  auto it = rows_.find({n, p, shape.entries});
  if (it != rows_.end()) return it->second;
  // builtin rows apply regardless of the table instance used
  if (this != &builtin()) {
    auto jt = builtin().rows_.find({n, p, shape.entries});
    if (jt != builtin().rows_.end()) return jt->second;
  }
  return std::nullopt;
}

std::vector<std::int64_t> candidate_primes(const Trinomial& t) {
  const Int disc = trinomial_discriminant(t);
  std::vector<std::int64_t> out;
  if (disc == 0) return out;
  for (std::int64_t p = 2; p < t.n; ++p) {
    if (!is_prime(p)) continue;
    if (disc % (Int(p) * p) == 0) out.push_back(p);
  }
  return out;
}

const char* to_string(Screen s) {
  switch (s) {
    case Screen::Irreducible:
      return "proved";
    case Screen::Reducible:
      return "reducible";
    case Screen::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::vector<Certificate> certify(const Trinomial& t, const CertifyOptions& opts) {
  const IntPoly f = t.to_poly();
  const ScreenResult screen = irreducibility_screen(f);
  if (screen.verdict == Screen::Reducible)
    throw ReducibleInput("reducible input: " + screen.detail, screen.witness);
  const Int disc = trinomial_discriminant(t);
  if (disc == 0) throw ReducibleInput("discriminant is 0: repeated factor", IntPoly());

  const EngstromTable& engstrom = opts.engstrom ? *opts.engstrom : EngstromTable::builtin();
  const auto corollaries = match_corollary_families(t, opts.check);

  std::vector<Certificate> certs;
  for (std::int64_t p : candidate_primes(t)) {
    std::optional<TheoremHit> hit;
    if (p != 2) {
      hit = check_divisor_an(t, p, opts.check);
      if (!hit) hit = check_divisor_bnm(t, p, opts.check);
    }
    std::optional<FactorizationShape> asserted;
    std::string sextic_source;
    if (t.n == 6) {
      const SexticVerdict v = check_sextic(t);
      if (p == 3 && v.mod9_family) {
        asserted = sextic_mod9_shape();
        sextic_source = "sextic(9)";
      } else if (p == 2 && v.mod8_family) {
        asserted = sextic_mod8_shape();
        sextic_source = "sextic(8)";
      }
    }

    OreReport engine;
    try {
      engine = analyze_prime(f, p);
    } catch (const FactorFound& e) {
      throw ReducibleInput("engine found an exact factor of the input", e.factor);
    }
    std::optional<long long> engine_d;
    if (engine.regular) engine_d = common_index_divisor_test(*engine.shape, p, t.n);

    const bool theorem_fired = hit.has_value() || asserted.has_value();
    if (!theorem_fired && !engine_d.has_value()) continue;

    Certificate c{t, p, "", 0, 0, 0, engine.shape, false, std::nullopt, screen.verdict, {}, ""};
    if (hit) {
      c.source = hit->source;
      c.witness_d = hit->d;
      c.primes_found = hit->primes_found;
      c.budget = hit->budget;
      if (hit->literal_count)
        c.note = "literal count variant disagrees: " + std::to_string(*hit->literal_count);
    } else if (asserted) {
      c.source = sextic_source;
      const auto d = common_index_divisor_test(*asserted, p, t.n);
      if (!d) throw std::logic_error("sextic asserted shape lost its counting witness");
      c.witness_d = *d;
      c.primes_found = asserted->count_residue_degree(*d);
      c.budget =
          static_cast<long long>(count_monic_irreducible(p, static_cast<unsigned>(*d)));
    } else {
      c.source = "engine";
      c.witness_d = *engine_d;
      c.primes_found = engine.shape->count_residue_degree(*engine_d);
      c.budget = static_cast<long long>(
          count_monic_irreducible(p, static_cast<unsigned>(*engine_d)));
    }

    if (theorem_fired) {
      c.engine_agrees = engine.regular && engine_d.has_value() &&
                        engine.shape->count_residue_degree(c.witness_d) >= c.primes_found;
      if (!engine.regular) {
        c.note = c.note.empty() ? "" : c.note + "; ";
        c.note += "WARNING: engine found F non-regular at this prime; "
                  "certificate rests on the congruence criterion alone";
      }
    } else {
      c.engine_agrees = true;
    }

    const FactorizationShape* for_lookup = nullptr;
    if (engine.shape) {
      for_lookup = &*engine.shape;
    } else if (asserted) {
      for_lookup = &*asserted;
    }
    if (for_lookup) c.index_valuation = engstrom.lookup(t.n, p, *for_lookup);

    for (const auto& cm : corollaries) {
      if (cm.prime == p) c.corollaries.push_back(cm);
    }
    certs.push_back(std::move(c));
  }
  return certs;
}

}  // namespace trinogen
