#include "trinogen/lifting.hpp"

#include <algorithm>

namespace trinogen {

namespace {

IntPoly trivial_lift(const GFPoly& g) {
  std::vector<Int> c(g.c.size());
  for (std::size_t i = 0; i < g.c.size(); ++i) c[i] = g.c[i];
  return IntPoly(std::move(c));
}

}  // namespace

Lifting select_lifting(const GFPoly& g, const IntPoly& S, std::int64_t p) {
  require_prime(p);
  if (!g.is_monic() || g.degree() < 1)
    throw std::invalid_argument("select_lifting: g must be monic of degree >= 1");
  if (!gf_is_irreducible(g)) throw std::invalid_argument("select_lifting: g is reducible");
  const GFPoly sbar = reduce_mod_p(S, p);
  if (sbar.is_zero()) throw std::invalid_argument("select_lifting: S vanishes mod p");
  GFPoly cof, rem;
  gf_divmod(sbar, g, cof, rem);
  if (!rem.is_zero()) throw std::invalid_argument("select_lifting: g does not divide S mod p");
  // Separability of S mod p is only needed at g itself: the cofactor must
  // stay coprime to g, else no U can satisfy the divisibility condition.
  if (gf_divides(g, cof))
    throw std::invalid_argument("select_lifting: g divides S mod p with multiplicity > 1");

  const IntPoly base = trivial_lift(g);
  const IntPoly U = trivial_lift(gf_make_monic(cof));
  const int d = g.degree();

  // Candidates phi = lift(g) + p*w, w running over all polynomials of
  // degree < d with coefficients in [0, p), in lexicographic order.
  Int budget = int_pow(p, static_cast<unsigned>(d));
  std::vector<Int> w(static_cast<std::size_t>(d), Int(0));
  for (Int idx = 0; idx < budget; ++idx) {
    Int t = idx;
    for (int i = 0; i < d; ++i) {
      w[static_cast<std::size_t>(i)] = t % p;
      t /= p;
    }
    IntPoly phi = ip_add(base, ip_scale(IntPoly(std::vector<Int>(w)), p));
    // S - phi*U is divisible by p coefficientwise since phi*U == S mod p
    IntPoly prod = ip_mul(phi, U);
    IntPoly diff = ip_sub(S, prod);
    IntPoly T = diff;
    bool exact = true;
    for (auto& v : T.c) {
      if (v % p != 0) {
        exact = false;
        break;
      }
      v /= p;
    }
    if (!exact) throw std::logic_error("select_lifting: S - phi*U not divisible by p");
    const GFPoly tbar = reduce_mod_p(T, p);
    if (tbar.is_zero()) continue;  // g divides 0
    if (gf_divides(g, tbar)) continue;
    return Lifting{std::move(phi), U, std::move(T)};
  }
  throw std::runtime_error("select_lifting: no lifting found within search budget");
}

namespace {

// Small primes used for the reduction screen.
constexpr std::int64_t kScreenPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                          43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};

// Degree above which the mod-q irreducibility attempt is skipped (the test
// costs O(deg^3 log q) per prime).
constexpr int kModQDegreeCap = 128;

// Root test that stays cheap at any degree: evaluate mod two 61+-bit primes
// first, confirm exactly only on a double hit.
bool is_integer_root(const IntPoly& f, const Int& r) {
  static constexpr std::int64_t kProbe[] = {2305843009213693951LL,   // 2^61 - 1
                                            2305843009213693967LL};  // next prime
  using u128 = unsigned __int128;
  for (std::int64_t q : kProbe) {
    const std::int64_t rq = mod_reduce(r, q);
    std::int64_t acc = 0;
    for (std::size_t i = f.c.size(); i-- > 0;) {
      acc = static_cast<std::int64_t>(
          (u128(acc) * u128(rq) + u128(mod_reduce(f.c[i], q))) % u128(q));
    }
    if (acc != 0) return false;
  }
  return ip_eval(f, r) == 0;
}

std::vector<Int> small_divisors(const Int& value, std::int64_t cap) {
  std::vector<Int> divs;
  Int v = abs(value);
  for (std::int64_t d = 1; d <= cap && d <= v; ++d) {
    if (v % d == 0) divs.emplace_back(d);
  }
  return divs;
}

// Prime factors of |value| up to the trial bound (large cofactors ignored).
std::vector<std::int64_t> small_prime_factors(const Int& value) {
  std::vector<std::int64_t> out;
  Int v = abs(value);
  for (std::int64_t q = 2; q <= kPrimeBound && Int(q) * q <= v; ++q) {
    if (v % q == 0) {
      out.push_back(q);
      while (v % q == 0) v /= q;
    }
  }
  if (v > 1 && v <= kPrimeBound) out.push_back(static_cast<std::int64_t>(v));
  return out;
}

bool is_eisenstein_at(const IntPoly& f, std::int64_t q) {
  for (int i = 0; i < f.degree(); ++i) {
    if (f.coeff(static_cast<std::size_t>(i)) % q != 0) return false;
  }
  return f.c[0] % (Int(q) * q) != 0;
}

}  // namespace

ScreenResult irreducibility_screen(const IntPoly& f) {
  if (!f.is_monic()) throw std::invalid_argument("irreducibility screen requires a monic polynomial");
  ScreenResult res;
  const int n = f.degree();
  if (n <= 0) {
    res.verdict = Screen::Reducible;
    res.detail = "constant polynomial";
    return res;
  }
  if (n == 1) {
    res.verdict = Screen::Irreducible;
    res.detail = "degree 1";
    return res;
  }
  if (f.c[0] == 0) {
    res.verdict = Screen::Reducible;
    res.detail = "root 0";
    res.witness = IntPoly::x();
    return res;
  }

  // rational roots: divisors of the constant term within the root bound
  Int root_bound = 1;
  for (const Int& c : f.c) root_bound = std::max(root_bound, Int(abs(c)));
  root_bound += 1;
  for (const Int& d : small_divisors(f.c[0], 10'000)) {
    if (d > root_bound) break;
    for (int sign : {1, -1}) {
      Int r = sign * d;
      if (is_integer_root(f, r)) {
        res.verdict = Screen::Reducible;
        res.detail = "root " + r.str();
        res.witness = IntPoly({-r, 1});
        return res;
      }
    }
  }

  // Eisenstein
  for (std::int64_t q : small_prime_factors(f.c[0])) {
    if (is_eisenstein_at(f, q)) {
      res.verdict = Screen::Irreducible;
      res.detail = "Eisenstein at " + std::to_string(q);
      return res;
    }
  }

  // irreducible mod q for some small prime of good reduction
  if (n <= kModQDegreeCap) {
    for (std::int64_t q : kScreenPrimes) {
      const GFPoly fbar = reduce_mod_p(f, q);
      if (fbar.degree() != n) continue;  // bad reduction cannot happen for monic f
      if (gf_is_irreducible(fbar)) {
        res.verdict = Screen::Irreducible;
        res.detail = "irreducible mod " + std::to_string(q);
        return res;
      }
    }
  }

  // low-degree trial factors x^2 + alpha*x + beta with beta | constant term
  if (n <= kModQDegreeCap && n >= 4) {
    constexpr std::int64_t kAlphaBound = 20;
    for (const Int& d : small_divisors(f.c[0], 1000)) {
      for (int sign : {1, -1}) {
        Int beta = sign * d;
        for (std::int64_t alpha = -kAlphaBound; alpha <= kAlphaBound; ++alpha) {
          IntPoly cand({beta, alpha, 1});
          IntPoly q, r;
          ip_divmod_monic(f, cand, q, r);
          if (r.is_zero()) {
            res.verdict = Screen::Reducible;
            res.detail = "factor " + to_string(cand);
            res.witness = cand;
            return res;
          }
        }
      }
    }
  }

  res.verdict = Screen::Unknown;
  res.detail = "screen inconclusive";
  return res;
}

}  // namespace trinogen
