// Exact integer number theory: p-adic valuations and unit parts, valuations
// of binomial coefficients C(p^r, j), the Moebius function, and counts of
// monic irreducible polynomials over F_p.
//
// Everything here is desk scale: primes are validated by trial division and
// rejected above kPrimeBound, while the integers being valued may be
// arbitrarily large.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace trinogen {

using Int = boost::multiprecision::cpp_int;

inline constexpr std::int64_t kPrimeBound = 1'000'000;

/// Deterministic trial-division primality test, valid for p <= kPrimeBound^2.
bool is_prime(std::int64_t p);

/// Throws std::invalid_argument for composites and std::domain_error
/// ("prime too large for desk scale") above kPrimeBound.
void require_prime(std::int64_t p);

/// A p-adic valuation: a natural number, or the infinite marker for nu_p(0).
/// The marker is used exactly when the valued integer is 0; it compares
/// greater than every finite value and is absorbing under addition.
class Valuation {
 public:
  Valuation(long long v) : v_(v) {
    if (v < 0) throw std::invalid_argument("valuation must be >= 0");
  }
  static Valuation infinity() {
    Valuation v(0);
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  long long value() const {
    if (infinite_) throw std::logic_error("infinite valuation has no value");
    return v_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.v_ + b.v_);
  }
  friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

 private:
  bool infinite_ = false;
  long long v_;
};

/// nu_p(t); the infinite marker for t = 0.
Valuation vp(const Int& t, std::int64_t p);

/// t / p^{nu_p(t)} for t != 0 (rejects t = 0).
Int unit_part(const Int& t, std::int64_t p);

/// nu_p(C(p^r, j)) = r - nu_p(j) for 1 <= j <= p^r - 1.
long long binom_vp(std::int64_t p, unsigned r, const Int& j);

/// nu_p(b^{p-1} - 1) for odd p with p coprime to b, equal to
/// nu_p(b + (-b)^{p^r}) for every r >= 1. Computed by modular exponentiation
/// at successive prime-power moduli; b = +-1 yields the infinite marker.
Valuation lifted_val(const Int& b, std::int64_t p, unsigned r);

/// Moebius function, n >= 1.
int mobius(std::uint64_t n);

/// Number of monic irreducible polynomials of degree m over F_p:
/// (1/m) * sum_{d | m} mu(d) p^{m/d}.
Int count_monic_irreducible(std::int64_t p, unsigned m);

// --- small integer helpers shared across the library ---

Int int_pow(const Int& base, unsigned long long exp);
Int pow_mod(Int base, Int exp, const Int& mod);
std::int64_t pow_mod64(std::int64_t base, std::uint64_t exp, std::int64_t mod);
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

/// Representative of t mod m in [0, m), m > 0.
std::int64_t mod_reduce(const Int& t, std::int64_t m);

}  // namespace trinogen
