#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "trinogen/gfpoly.hpp"

using namespace trinogen;

namespace {

IntPoly trinomial_poly(long long n, long long m, long long a, long long b) {
  return Trinomial(n, m, a, b).to_poly();
}

GFPoly product_of(const std::vector<std::pair<GFPoly, int>>& factors, std::int64_t p,
                  std::int64_t lead) {
  GFPoly acc = GFPoly::constant(p, lead);
  for (const auto& [g, mult] : factors) {
    for (int i = 0; i < mult; ++i) acc = gf_mul(acc, g);
  }
  return acc;
}

}  // namespace

TEST_CASE("coefficientwise reduction") {
  CHECK(reduce_mod_p(trinomial_poly(5, 4, 3, 24), 2) == GFPoly(2, {0, 0, 0, 0, 1, 1}));
  CHECK(reduce_mod_p(IntPoly({26, 0, 1}), 3) == GFPoly(3, {2, 0, 1}));
  CHECK(reduce_mod_p(IntPoly({9, 3}), 3).is_zero());
}

TEST_CASE("factorization of the worked reductions") {
  // x^5 + x^4 over F_2
  const auto f1 = gf_factor(GFPoly(2, {0, 0, 0, 0, 1, 1}));
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].first == GFPoly::x(2));
  CHECK(f1[0].second == 4);
  CHECK(f1[1].first == GFPoly(2, {1, 1}));
  CHECK(f1[1].second == 1);

  // x^4 + 1 over F_3 splits into two quadratics
  const auto f2 = gf_factor(GFPoly(3, {1, 0, 0, 0, 1}));
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].first == GFPoly(3, {2, 1, 1}));  // x^2 + x - 1
  CHECK(f2[0].second == 1);
  CHECK(f2[1].first == GFPoly(3, {2, 2, 1}));  // x^2 - x - 1
  CHECK(f2[1].second == 1);

  // x^2 + 1 is irreducible over F_3
  const auto f3 = gf_factor(GFPoly(3, {1, 0, 1}));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].first == GFPoly(3, {1, 0, 1}));
  CHECK(f3[0].second == 1);
  CHECK(gf_is_irreducible(GFPoly(3, {1, 0, 1})));

  CHECK_THROWS_AS(gf_factor(GFPoly::zero(5)), std::invalid_argument);
}

TEST_CASE("factorization round-trips on random inputs") {
  std::mt19937_64 rng(11);
  int done = 0;
  while (done < 500) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5}[rng() % 3];
    const GFPoly f = oracles::random_gf(rng, p, 12);
    if (f.is_zero() || f.degree() < 1) continue;
    ++done;
    const auto factors = gf_factor(f);
    REQUIRE(product_of(factors, p, f.lead()) == f);
    for (const auto& [g, mult] : factors) {
      REQUIRE(mult >= 1);
      REQUIRE(g.is_monic());
      REQUIRE(oracles::irreducible_by_trial(g));
    }
  }
}

TEST_CASE("separability") {
  CHECK(is_separable(GFPoly(3, {2, 0, 1})));        // x^2 + 2 over F_3
  CHECK_FALSE(is_separable(GFPoly(2, {0, 0, 0, 0, 1, 1})));  // repeated factor x
  CHECK_FALSE(is_separable(GFPoly(2, {1, 0, 1})));  // x^2 - 1 = (x+1)^2 over F_2
}

TEST_CASE("counting factors of x^s + t") {
  CHECK(count_factors_deg(3, 1, 2, Int(26)) == 2);
  CHECK(count_factors_deg(3, 2, 2, Int(1)) == 1);
  CHECK(count_factors_deg(3, 2, 4, Int(1)) == 2);

  SUBCASE("degree-weighted counts fill a separable binomial") {
    for (std::int64_t p : {3, 5}) {
      for (unsigned long long s : {1ull, 2ull, 4ull, 7ull}) {
        for (long long t = -6; t <= 6; ++t) {
          if (t % p == 0) continue;
          if (s % static_cast<unsigned long long>(p) == 0) continue;
          REQUIRE(is_separable(gf_binomial(p, s, Int(t))));
          long long total = 0;
          for (unsigned d = 1; d <= s; ++d) total += d * count_factors_deg(p, d, s, Int(t));
          REQUIRE(total == static_cast<long long>(s));
        }
      }
    }
  }
}

TEST_CASE("counting factors with exclusion") {
  // factors of x^2 - 1 over F_3 are x+1 and x+2; only x+1 divides x + 1
  CHECK(count_factors_deg_excluding(3, 1, 2, Int(26), 1, Int(1)) == 1);
  CHECK(count_factors_deg_excluding(3, 1, 2, Int(26), 2, Int(26)) == 0);
  CHECK(count_factors_deg_excluding(2, 1, 1, Int(1), 1, Int(0)) == 1);

  SUBCASE("exclusion never raises the count, and coprime exclusion keeps it") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
      const std::int64_t p = std::vector<std::int64_t>{2, 3, 5}[rng() % 3];
      const unsigned long long s = 1 + rng() % 8;
      const unsigned long long m = 1 + rng() % 8;
      const Int t = static_cast<long long>(rng() % 50) - 25;
      const Int c = static_cast<long long>(rng() % 50) - 25;
      for (unsigned d = 1; d <= s; ++d) {
        const long long with = count_factors_deg(p, d, s, t);
        const long long without = count_factors_deg_excluding(p, d, s, t, m, c);
        REQUIRE(without <= with);
        if (gf_gcd(gf_binomial(p, s, t), gf_binomial(p, m, c)).degree() == 0) {
          REQUIRE(without == with);
        }
      }
    }
  }
}

TEST_CASE("degree-d factors across binomials stay within the global budget") {
  for (std::int64_t p : {2, 3}) {
    for (unsigned d = 1; d <= 3; ++d) {
      std::set<std::vector<std::int64_t>> seen;
      for (unsigned long long s = 1; s <= 9; ++s) {
        for (long long t = -8; t <= 8; ++t) {
          if (t % p == 0) continue;
          for (const auto& [g, mult] : gf_factor(gf_binomial(p, s, Int(t)))) {
            (void)mult;
            if (g.degree() == static_cast<int>(d)) seen.insert(g.c);
          }
        }
      }
      REQUIRE(Int(seen.size()) <= count_monic_irreducible(p, d));
    }
  }
}

TEST_CASE("extension-field factorization") {
  // y + 1 over F_2[x]/(x): irreducible of degree 1
  const GFPoly mod_x = GFPoly::x(2);
  const ExtGFPoly lin(mod_x, {GFPoly::constant(2, 1), GFPoly::constant(2, 1)});
  auto f1 = ext_factor(lin);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].first == lin);
  CHECK(f1[0].second == 1);

  // y^2 + 1 = (y+1)^2 over the trivial extension of F_2
  const ExtGFPoly sq(mod_x, {GFPoly::constant(2, 1), GFPoly::zero(2), GFPoly::constant(2, 1)});
  auto f2 = ext_factor(sq);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].first == lin);
  CHECK(f2[0].second == 2);
  CHECK_FALSE(ext_is_separable(sq));

  // y^2 + y*xbar = y (y + xbar) over F_3[x]/(x^2+1); oracle by expansion
  const GFPoly mod_q = GFPoly(3, {1, 0, 1});
  const GFPoly xbar = GFPoly::x(3);
  const ExtGFPoly f(mod_q, {GFPoly::zero(3), xbar, GFPoly::constant(3, 1)});
  const ExtGFPoly y = ExtGFPoly::y(mod_q);
  const ExtGFPoly y_plus_x(mod_q, {xbar, GFPoly::constant(3, 1)});
  REQUIRE(ext_mul(y, y_plus_x) == f);
  auto f3 = ext_factor(f);
  REQUIRE(f3.size() == 2);
  CHECK(f3[0].first == y);
  CHECK(f3[0].second == 1);
  CHECK(f3[1].first == y_plus_x);
  CHECK(f3[1].second == 1);

  // reducible modulus rejected
  const GFPoly bad_mod = GFPoly(3, {2, 0, 1});  // x^2 + 2 = (x-1)(x+1)
  CHECK_THROWS_AS(ext_factor(ExtGFPoly(bad_mod, {xbar, GFPoly::constant(3, 1)})),
                  std::invalid_argument);
}

TEST_CASE("extension factorization over a degree-1 modulus matches the base field") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5}[rng() % 3];
    const GFPoly f = oracles::random_gf(rng, p, 8);
    if (f.degree() < 1) continue;
    const GFPoly modulus = GFPoly::x(p);
    std::vector<GFPoly> coeffs;
    for (std::int64_t c : f.c) coeffs.push_back(GFPoly::constant(p, c));
    const auto base = gf_factor(f);
    const auto ext = ext_factor(ExtGFPoly(modulus, std::move(coeffs)));
    REQUIRE(base.size() == ext.size());
    for (std::size_t k = 0; k < base.size(); ++k) {
      REQUIRE(base[k].second == ext[k].second);
      REQUIRE(base[k].first.degree() == ext[k].first.degree());
      for (std::size_t j = 0; j < base[k].first.c.size(); ++j) {
        const GFPoly ec = ext[k].first.coeff(j);
        REQUIRE(ec.degree() <= 0);
        REQUIRE((ec.is_zero() ? 0 : ec.c[0]) == base[k].first.c[j]);
      }
    }
  }
}

TEST_CASE("random extension factorizations multiply back") {
  std::mt19937_64 rng(19);
  const GFPoly mod_q = GFPoly(3, {1, 0, 1});  // x^2 + 1, irreducible over F_3
  for (int i = 0; i < 40; ++i) {
    std::vector<GFPoly> coeffs;
    const int deg = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < deg; ++j) {
      coeffs.push_back(GFPoly(3, {static_cast<std::int64_t>(rng() % 3),
                                  static_cast<std::int64_t>(rng() % 3)}));
    }
    coeffs.push_back(GFPoly::constant(3, 1));  // monic
    const ExtGFPoly f(mod_q, std::move(coeffs));
    ExtGFPoly acc = ExtGFPoly::constant(mod_q, GFPoly::constant(3, 1));
    for (const auto& [g, mult] : ext_factor(f)) {
      for (int k = 0; k < mult; ++k) acc = ext_mul(acc, g);
    }
    REQUIRE(acc == f);
  }
}
