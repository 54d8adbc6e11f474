// Dense polynomial arithmetic and complete factorization over F_p and over
// extensions F_p[x]/(g), plus the counting functions for monic irreducible
// factors of x^s + t used by the congruence criteria.
//
// Factorization runs squarefree decomposition, then distinct-degree, then
// equal-degree splitting. The equal-degree stage is randomized but seeded
// from a canonical hash of the input, so results are reproducible; factor
// lists are sorted canonically (degree, then coefficient sequence).
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trinogen/intpoly.hpp"

namespace trinogen {

/// Polynomial over F_p, coefficients in [0, p), lowest degree first,
/// normalized (no trailing zeros; the zero polynomial is an empty list).
struct GFPoly {
  std::int64_t p = 0;
  std::vector<std::int64_t> c;

  GFPoly() = default;
  GFPoly(std::int64_t p_, std::vector<std::int64_t> coeffs);

  void normalize();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  std::int64_t lead() const { return c.back(); }
  std::int64_t coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }

  static GFPoly zero(std::int64_t p) { return GFPoly(p, {}); }
  static GFPoly constant(std::int64_t p, std::int64_t v) { return GFPoly(p, {v}); }
  static GFPoly x(std::int64_t p) { return GFPoly(p, {0, 1}); }

  friend bool operator==(const GFPoly& a, const GFPoly& b) { return a.p == b.p && a.c == b.c; }
};

/// Canonical order: degree first, then the coefficient sequence.
bool gf_less(const GFPoly& a, const GFPoly& b);

GFPoly gf_add(const GFPoly& a, const GFPoly& b);
GFPoly gf_sub(const GFPoly& a, const GFPoly& b);
GFPoly gf_mul(const GFPoly& a, const GFPoly& b);
GFPoly gf_scale(const GFPoly& a, std::int64_t s);
void gf_divmod(const GFPoly& a, const GFPoly& d, GFPoly& quot, GFPoly& rem);
GFPoly gf_mod(const GFPoly& a, const GFPoly& d);
GFPoly gf_gcd(GFPoly a, GFPoly b);  // monic gcd
GFPoly gf_pow_mod(const GFPoly& base, const Int& exp, const GFPoly& mod);
GFPoly gf_derivative(const GFPoly& a);
GFPoly gf_make_monic(const GFPoly& a);
bool gf_divides(const GFPoly& g, const GFPoly& f);
std::string to_string(const GFPoly& a, const std::string& var = "x");

/// Coefficientwise reduction of an integer polynomial; the degree may drop.
GFPoly reduce_mod_p(const IntPoly& f, std::int64_t p);

/// x^s + t mod p.
GFPoly gf_binomial(std::int64_t p, unsigned long long s, const Int& t);

/// true iff gcd(f, f') = 1.
bool is_separable(const GFPoly& f);

bool gf_is_irreducible(const GFPoly& f);

/// Complete factorization into powers of distinct monic irreducibles,
/// canonically sorted. The leading unit is dropped (factors are monic);
/// rejects the zero polynomial.
std::vector<std::pair<GFPoly, int>> gf_factor(const GFPoly& f);

/// Number of distinct monic irreducible degree-d factors of x^s + t over F_p.
long long count_factors_deg(std::int64_t p, unsigned d, unsigned long long s, const Int& t);

/// Same, restricted to factors that do not divide x^m + c.
long long count_factors_deg_excluding(std::int64_t p, unsigned d, unsigned long long s,
                                      const Int& t, unsigned long long m, const Int& cval);

/// Polynomial over F_phi = F_p[x]/(modulus), coefficients lowest degree
/// first, each reduced mod (p, modulus). The modulus must be monic
/// irreducible over F_p.
struct ExtGFPoly {
  GFPoly modulus;
  std::vector<GFPoly> c;

  ExtGFPoly() = default;
  ExtGFPoly(GFPoly modulus_, std::vector<GFPoly> coeffs);

  void normalize();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_monic() const;
  GFPoly coeff(std::size_t i) const;

  static ExtGFPoly zero(const GFPoly& modulus) { return ExtGFPoly(modulus, {}); }
  static ExtGFPoly constant(const GFPoly& modulus, const GFPoly& v);
  static ExtGFPoly y(const GFPoly& modulus);

  friend bool operator==(const ExtGFPoly& a, const ExtGFPoly& b) {
    return a.modulus == b.modulus && a.c == b.c;
  }
};

bool ext_less(const ExtGFPoly& a, const ExtGFPoly& b);

ExtGFPoly ext_add(const ExtGFPoly& a, const ExtGFPoly& b);
ExtGFPoly ext_sub(const ExtGFPoly& a, const ExtGFPoly& b);
ExtGFPoly ext_mul(const ExtGFPoly& a, const ExtGFPoly& b);
ExtGFPoly ext_scale(const ExtGFPoly& a, const GFPoly& s);
void ext_divmod(const ExtGFPoly& a, const ExtGFPoly& d, ExtGFPoly& quot, ExtGFPoly& rem);
ExtGFPoly ext_gcd(ExtGFPoly a, ExtGFPoly b);  // monic gcd
ExtGFPoly ext_pow_mod(const ExtGFPoly& base, const Int& exp, const ExtGFPoly& mod);
ExtGFPoly ext_derivative(const ExtGFPoly& a);
ExtGFPoly ext_make_monic(const ExtGFPoly& a);
std::string to_string(const ExtGFPoly& a, const std::string& var = "y");

bool ext_is_separable(const ExtGFPoly& f);

/// Complete factorization over F_{p^d}, canonically sorted; all
/// multiplicities 1 iff the input is separable. Rejects a reducible modulus.
std::vector<std::pair<ExtGFPoly, int>> ext_factor(const ExtGFPoly& f);

}  // namespace trinogen
