#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "oracles.hpp"
#include "trinogen/json_io.hpp"
#include "trinogen/monogenity.hpp"

using namespace trinogen;

TEST_CASE("common index divisor counting") {
  CHECK(common_index_divisor_test(FactorizationShape({{1, 1}, {1, 1}, {2, 1}, {2, 1}}), 3, 6) ==
        1);
  // P_1 = 2 = N_2(1), but P_2 = 2 > N_2(2) = 1
  CHECK(common_index_divisor_test(FactorizationShape({{1, 1}, {1, 1}, {1, 2}, {1, 2}}), 2, 6) ==
        2);
  CHECK_FALSE(
      common_index_divisor_test(FactorizationShape({{4, 1}, {1, 1}}), 2, 5).has_value());
  CHECK_THROWS_AS(common_index_divisor_test(FactorizationShape({{1, 1}}), 2, 5),
                  std::invalid_argument);
}

TEST_CASE("criterion with p | a and p | n") {
  SUBCASE("degree 18 showcase") {
    const auto hit = check_divisor_an(Trinomial(18, 1, 342, 26), 3);
    REQUIRE(hit.has_value());
    CHECK(hit->condition == 1);
    CHECK(hit->source == "an(1)");
    CHECK(hit->s_or_u == 2);
    CHECK(hit->r_or_k == 2);
    CHECK(hit->first_val == Valuation(2));   // mu
    CHECK(hit->second_val == Valuation(3));  // nu
    CHECK(hit->d == 1);
    CHECK(hit->primes_found == 4);
    CHECK(hit->budget == 3);
  }

  SUBCASE("equal-valuation branch with the exclusion count") {
    // n = 2 * 3^7, mu = nu = 7 <= r = 7; x^2 + b is irreducible mod 3 and
    // avoids x^m + c, so d = 2 carries 7 > 3 factors
    const auto hit = check_divisor_an(Trinomial(4374, 1, 2187, 2188), 3);
    REQUIRE(hit.has_value());
    CHECK(hit->condition == 3);
    CHECK(hit->d == 2);
    CHECK(hit->first_val == Valuation(7));
    CHECK(hit->second_val == Valuation(7));
    CHECK(hit->primes_found == 7);
    CHECK(hit->budget == 3);
  }

  SUBCASE("hypothesis failures are a no-match") {
    CHECK_FALSE(check_divisor_an(Trinomial(6, 1, 5, 7), 3).has_value());   // 3 !| a
    CHECK_FALSE(check_divisor_an(Trinomial(6, 1, 9, 6), 3).has_value());   // 3 | b
    CHECK_FALSE(check_divisor_an(Trinomial(8, 1, 9, 7), 3).has_value());   // 3 !| n
    CHECK_FALSE(check_divisor_an(Trinomial(3, 1, 3, 2), 3).has_value());   // p >= n
    CHECK_FALSE(check_divisor_an(Trinomial(18, 1, 342, 26), 2).has_value());  // p even
  }
}

TEST_CASE("criterion with p | b and p | n - m") {
  SUBCASE("degree 12 showcase") {
    const auto hit = check_divisor_bnm(Trinomial(12, 6, -19, 171), 3);
    REQUIRE(hit.has_value());
    CHECK(hit->condition == 4);
    CHECK(hit->source == "bnm(4)");
    CHECK(hit->s_or_u == 2);
    CHECK(hit->r_or_k == 1);
    CHECK(hit->first_val == Valuation(2));   // delta
    CHECK(hit->second_val == Valuation(2));  // kappa
    CHECK(hit->d == 1);
    CHECK(hit->primes_found == 4);
  }

  SUBCASE("small-valuation branch from the gap family") {
    // n - m = 3^5, a = 242 (kappa = 5), b = 81 (delta = 4 < min{5, 6})
    const auto hit = check_divisor_bnm(Trinomial(486, 243, 242, 81), 3);
    REQUIRE(hit.has_value());
    CHECK(hit->condition == 1);
    CHECK(hit->d == 1);
    CHECK(hit->primes_found == 4);
  }

  SUBCASE("equal-valuation branch with the literal-count variant") {
    // delta = kappa = 2 <= k = 2; exclusion x^2 + 1 is coprime to x^2 - 1
    CheckOptions opts;
    opts.bnm_cond3_literal = true;
    const auto hit = check_divisor_bnm(Trinomial(20, 2, 8, 9), 3, opts);
    REQUIRE(hit.has_value());
    CHECK(hit->condition == 3);
    CHECK(hit->d == 1);
    CHECK(hit->primes_found == 4);
    // the literal reading counts factors of x^2 + b = x^2 and never fires
    REQUIRE(hit->literal_count.has_value());
    CHECK(*hit->literal_count == 0);
    // without the flag the variant is not evaluated
    CHECK_FALSE(check_divisor_bnm(Trinomial(20, 2, 8, 9), 3)->literal_count.has_value());
  }

  SUBCASE("hypothesis failures are a no-match") {
    CHECK_FALSE(check_divisor_bnm(Trinomial(6, 2, 3, 5), 3).has_value());  // 3 | a
    CHECK_FALSE(check_divisor_bnm(Trinomial(6, 2, 2, 5), 3).has_value());  // 3 !| b
    CHECK_FALSE(check_divisor_bnm(Trinomial(8, 2, 2, 9), 3).has_value());  // 3 !| n-m
  }
}

TEST_CASE("sextic congruence families") {
  const SexticVerdict v1 = check_sextic(Trinomial(6, 2, 3249, 152));
  CHECK(v1.mod9_family);
  CHECK_FALSE(v1.mod8_family);

  const SexticVerdict v2 = check_sextic(Trinomial(6, 3, 8, 7));
  CHECK_FALSE(v2.mod9_family);
  CHECK(v2.mod8_family);

  const SexticVerdict v3 = check_sextic(Trinomial(6, 1, 1, 1));
  CHECK_FALSE(v3.mod9_family);
  CHECK_FALSE(v3.mod8_family);

  // 72 | a, b = -1 mod 72 matches both
  const SexticVerdict v4 = check_sextic(Trinomial(6, 1, 72, 71));
  CHECK(v4.mod9_family);
  CHECK(v4.mod8_family);

  CHECK_THROWS_AS(check_sextic(Trinomial(5, 1, 9, 8)), std::invalid_argument);

  CHECK(sextic_mod9_shape().sum_ef() == 6);
  CHECK(sextic_mod8_shape().sum_ef() == 6);
}

TEST_CASE("corollary family matching") {
  SUBCASE("degree 18 member matches clause 1 by data") {
    const auto matches = match_corollary_families(Trinomial(18, 1, 342, 26));
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].family == "an-23");
    CHECK(matches[0].clause == 1);
    CHECK(matches[0].prime == 3);
  }

  SUBCASE("degree 12 gap member matches clause 6") {
    const auto matches = match_corollary_families(Trinomial(12, 6, -19, 171));
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].family == "bnm-23");
    CHECK(matches[0].clause == 6);
  }

  SUBCASE("pure prime-power family") {
    const auto matches = match_corollary_families(Trinomial(27, 2, 81, 80));
    bool found = false;
    for (const auto& m : matches) found = found || (m.family == "purepower" && m.prime == 3);
    CHECK(found);
  }

  SUBCASE("gcd refinement family") {
    const auto matches = match_corollary_families(Trinomial(19, 1, 26, 18));
    bool found = false;
    for (const auto& m : matches) {
      if (m.family == "bnm-gcd") {
        found = true;
        CHECK(m.clause == 1);
        CHECK(m.prime == 3);
      }
    }
    CHECK(found);
    // the underlying criterion fires as well (matches are confirmed)
    CHECK(check_divisor_bnm(Trinomial(19, 1, 26, 18), 3).has_value());
  }

  SUBCASE("no match") { CHECK(match_corollary_families(Trinomial(6, 1, 7, 5)).empty()); }
}

TEST_CASE("splitting-type index table") {
  const EngstromTable& t = EngstromTable::builtin();
  CHECK(t.lookup(6, 3, FactorizationShape({{1, 1}, {1, 1}, {2, 1}, {2, 1}})) == 1);
  CHECK(t.lookup(6, 2, FactorizationShape({{1, 1}, {1, 1}, {1, 2}, {1, 2}})) == 2);
  CHECK_FALSE(t.lookup(5, 2, FactorizationShape({{4, 1}, {1, 1}})).has_value());

  SUBCASE("extension rows load, extend, and override") {
    const std::string path = "engstrom_test_rows.txt";
    {
      std::ofstream out(path);
      out << "# test rows\n";
      out << "5 2 (1,1)(4,1) -> 7  # made-up citation\n";
      out << "6 3 (1,1)(1,1)(2,1)(2,1) -> 5\n";
    }
    EngstromTable ext;
    ext.load_extension(path);
    CHECK(ext.lookup(5, 2, FactorizationShape({{4, 1}, {1, 1}})) == 7);
    CHECK(ext.lookup(6, 3, FactorizationShape({{1, 1}, {1, 1}, {2, 1}, {2, 1}})) == 5);
    // untouched builtin rows remain visible through the extension table
    CHECK(ext.lookup(6, 2, FactorizationShape({{1, 1}, {1, 1}, {1, 2}, {1, 2}})) == 2);
    std::remove(path.c_str());
  }

  SUBCASE("malformed rows are rejected") {
    const std::string path = "engstrom_bad_rows.txt";
    {
      std::ofstream out(path);
      out << "6 3 (1,1 -> 1\n";
    }
    EngstromTable ext;
    CHECK_THROWS_AS(ext.load_extension(path), std::runtime_error);
    std::remove(path.c_str());
  }
}

TEST_CASE("candidate primes respect both gates") {
  const Trinomial t(18, 1, 342, 26);
  const Int disc = trinomial_discriminant(t);
  for (std::int64_t p : candidate_primes(t)) {
    CHECK(p < t.n);
    CHECK(disc % (Int(p) * p) == 0);
  }
}

TEST_CASE("certification of the showcase trinomials") {
  SUBCASE("x^18 + 342x + 26") {
    const auto certs = certify(Trinomial(18, 1, 342, 26));
    REQUIRE(certs.size() == 1);
    const Certificate& c = certs[0];
    CHECK(c.prime == 3);
    CHECK(c.source == "an(1)");
    CHECK(c.witness_d == 1);
    CHECK(c.primes_found == 4);
    CHECK(c.budget == 3);
    CHECK(c.engine_agrees);
    REQUIRE(c.engine_shape.has_value());
    CHECK(c.engine_shape->count_residue_degree(1) == 4);
    CHECK_FALSE(c.index_valuation.has_value());
    REQUIRE(c.corollaries.size() == 1);
    CHECK(c.corollaries[0].clause == 1);
  }

  SUBCASE("x^6 + 3249x + 152") {
    const auto certs = certify(Trinomial(6, 1, 3249, 152));
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].prime == 3);
    CHECK(certs[0].engine_agrees);
    CHECK(certs[0].index_valuation == 1);
    REQUIRE(certs[0].engine_shape.has_value());
    CHECK(*certs[0].engine_shape == sextic_mod9_shape());
  }

  SUBCASE("x^5 + 3x^4 + 24 earns no certificate") {
    CHECK(certify(Trinomial(5, 4, 3, 24)).empty());
  }

  SUBCASE("a member of both sextic families certifies at 2 and 3") {
    // a = 0 mod 72 and b = -1 mod 72
    const Trinomial t(6, 2, 72, 71);
    REQUIRE(irreducibility_screen(t.to_poly()).verdict != Screen::Reducible);
    const auto certs = certify(t);
    std::set<std::int64_t> primes;
    for (const auto& c : certs) primes.insert(c.prime);
    CHECK(primes.count(2) == 1);
    CHECK(primes.count(3) == 1);
    for (const auto& c : certs) {
      if (c.prime == 2) {
        CHECK(c.source == "sextic(8)");
        CHECK(c.index_valuation == 2);
      }
    }
  }

  SUBCASE("reducible input is rejected with a witness") {
    CHECK_THROWS_AS(certify(Trinomial(6, 1, 9, 8)), ReducibleInput);
    try {
      certify(Trinomial(6, 1, 9, 8));
    } catch (const ReducibleInput& e) {
      CHECK(e.witness == IntPoly({1, 1}));
    }
  }

  SUBCASE("certificates are deterministic") {
    const auto a = certify(Trinomial(12, 6, -19, 171));
    const auto b = certify(Trinomial(12, 6, -19, 171));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(certificate_line(a[i]) == certificate_line(b[i]));
    }
  }
}

TEST_CASE("certificates never name an ineligible prime") {
  std::mt19937_64 rng(59);
  int done = 0;
  while (done < 25) {
    const long long n = 4 + static_cast<long long>(rng() % 9);
    const long long m = 1 + static_cast<long long>(rng() % (n - 1));
    const long long a = static_cast<long long>(rng() % 81) - 40;
    const long long b = static_cast<long long>(rng() % 81) - 40;
    if (a == 0 || b == 0) continue;
    const Trinomial t(n, m, a, b);
    std::vector<Certificate> certs;
    try {
      certs = certify(t);
    } catch (const ReducibleInput&) {
      continue;
    }
    ++done;
    const Int disc = trinomial_discriminant(t);
    for (const auto& c : certs) {
      REQUIRE(c.prime < n);
      REQUIRE(disc % (Int(c.prime) * c.prime) == 0);
    }
  }
}

TEST_CASE("theorem hits are corroborated by the engine on sampled members") {
  // one member from each of a few structurally different clauses
  const std::vector<Trinomial> members = {
      Trinomial(18, 1, 342, 26),    // degree family, condition 1
      Trinomial(18, 5, 27, 8),      // degree family, condition 2 (nu = 2 < mu = 3)
      Trinomial(12, 6, -19, 171),   // gap family, condition 4
      Trinomial(486, 243, 242, 81)  // gap family, condition 1
  };
  for (const auto& t : members) {
    CAPTURE(to_string(t));
    const auto certs = certify(t);
    bool at3 = false;
    for (const auto& c : certs) {
      if (c.prime != 3) continue;
      at3 = true;
      REQUIRE(c.engine_shape.has_value());
      REQUIRE(c.engine_agrees);
      REQUIRE(c.engine_shape->count_residue_degree(c.witness_d) >= c.primes_found);
    }
    REQUIRE(at3);
  }
}
