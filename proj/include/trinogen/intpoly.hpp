// Integer polynomials and trinomials: exact arithmetic over Z[x], the closed
// discriminant formula for x^n + a x^m + b, a subresultant discriminant
// oracle, and phi-adic developments.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trinogen/arith.hpp"

namespace trinogen {

/// Dense polynomial over Z, coefficients lowest degree first, normalized
/// (no trailing zeros; the zero polynomial has an empty coefficient list).
struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  const Int& lead() const { return c.back(); }
  Int coeff(std::size_t i) const { return i < c.size() ? c[i] : Int(0); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(const Int& v) { return IntPoly({v}); }
  static IntPoly x() { return IntPoly({0, 1}); }
  /// c * x^k
  static IntPoly monomial(const Int& v, std::size_t k) {
    std::vector<Int> cs(k + 1, Int(0));
    cs[k] = v;
    return IntPoly(std::move(cs));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
};

IntPoly ip_add(const IntPoly& a, const IntPoly& b);
IntPoly ip_sub(const IntPoly& a, const IntPoly& b);
IntPoly ip_mul(const IntPoly& a, const IntPoly& b);
IntPoly ip_neg(const IntPoly& a);
IntPoly ip_scale(const IntPoly& a, const Int& s);
IntPoly ip_derivative(const IntPoly& a);
Int ip_eval(const IntPoly& a, const Int& x);

/// Euclidean division by a monic divisor; throws on a non-monic one.
void ip_divmod_monic(const IntPoly& a, const IntPoly& d, IntPoly& quot, IntPoly& rem);

std::string to_string(const IntPoly& a, const std::string& var = "x");

/// The input object x^n + a x^m + b with 0 < m < n and b != 0. a = 0 is
/// accepted but flagged as a binomial (the closed discriminant formula does
/// not apply to it).
struct Trinomial {
  long long n;
  long long m;
  Int a;
  Int b;
  long long d0;  // gcd(n, m)
  long long n1;  // n / d0
  long long m1;  // m / d0

  Trinomial(long long n_, long long m_, Int a_, Int b_);

  bool is_binomial() const { return a == 0; }
  IntPoly to_poly() const;
};

std::string to_string(const Trinomial& t);

/// Discriminant of x^n + a x^m + b by the closed formula
///   (-1)^{n(n-1)/2} b^{m-1} (n^{n1} b^{n1-m1} - (-1)^{m1} m^{m1} (m-n)^{n1-m1} a^{n1})^{d0}.
/// Binomials (a = 0) are delegated to the resultant oracle.
Int trinomial_discriminant(const Trinomial& t);

/// Resultant of two integer polynomials via the subresultant PRS.
Int resultant(const IntPoly& f, const IntPoly& g);

/// Discriminant of a monic F of degree >= 2, computed independently of the
/// closed formula: (-1)^{n(n-1)/2} Res(F, F').
Int resultant_disc_oracle(const IntPoly& f);

/// F = sum terms[i] * phi^i with deg terms[i] < deg phi for all i.
struct PhiDevelopment {
  IntPoly phi;
  std::vector<IntPoly> terms;
  std::optional<bool> admissible;  // set by polygon analysis when known
};

/// Unique phi-adic development by repeated division; phi must be monic of
/// degree >= 1. The number of terms is floor(deg F / deg phi) + 1.
PhiDevelopment phi_adic_development(const IntPoly& f, const IntPoly& phi);

/// sum terms[i] * phi^i, for reconstruction checks.
IntPoly phi_dev_reconstruct(const IntPoly& phi, const std::vector<IntPoly>& terms);

}  // namespace trinogen
