#include "trinogen/arith.hpp"

namespace trinogen {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (std::int64_t q = 5; q * q <= p; q += 6) {
    if (p % q == 0 || p % (q + 2) == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p) {
  if (p > kPrimeBound) throw std::domain_error("prime too large for desk scale");
  if (!is_prime(p)) throw std::invalid_argument("expected a prime");
}

Valuation vp(const Int& t, std::int64_t p) {
  require_prime(p);
  if (t == 0) return Valuation::infinity();
  Int u = abs(t);
  long long v = 0;
  while (u % p == 0) {
    u /= p;
    ++v;
  }
  return Valuation(v);
}

Int unit_part(const Int& t, std::int64_t p) {
  require_prime(p);
  if (t == 0) throw std::invalid_argument("unit_part of 0 is undefined");
  Int u = t;
  while (u % p == 0) u /= p;
  return u;
}

long long binom_vp(std::int64_t p, unsigned r, const Int& j) {
  require_prime(p);
  if (r == 0) throw std::invalid_argument("binom_vp requires r >= 1");
  if (j < 1 || j > int_pow(p, r) - 1)
    throw std::invalid_argument("binom_vp requires 1 <= j <= p^r - 1");
  return static_cast<long long>(r) - vp(j, p).value();
}

Valuation lifted_val(const Int& b, std::int64_t p, unsigned r) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("lifted_val requires an odd prime");
  if (b % p == 0) throw std::invalid_argument("lifted_val requires gcd(b, p) = 1");
  if (r == 0) throw std::invalid_argument("lifted_val requires r >= 1");
  if (b == 1 || b == -1) return Valuation::infinity();  // b^{p-1} - 1 = 0 exactly
  long long v = 1;  // Fermat: p | b^{p-1} - 1 always
  Int mod = Int(p) * p;
  while (pow_mod(b, p - 1, mod) == 1) {
    ++v;
    mod *= p;
  }
  return Valuation(v);
}

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius requires n >= 1");
  int factors = 0;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

Int count_monic_irreducible(std::int64_t p, unsigned m) {
  require_prime(p);
  if (m == 0) throw std::invalid_argument("degree must be >= 1");
  Int total = 0;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    total += mobius(d) * int_pow(p, m / d);
  }
  // The divisor sum is always an exact multiple of m.
  Int q = total / m;
  if (q * m != total) throw std::logic_error("count_monic_irreducible: inexact division");
  return q;
}

Int int_pow(const Int& base, unsigned long long exp) {
  Int result = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

Int pow_mod(Int base, Int exp, const Int& mod) {
  if (mod <= 0) throw std::invalid_argument("pow_mod requires a positive modulus");
  if (exp < 0) throw std::invalid_argument("pow_mod requires a nonnegative exponent");
  Int result = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (bit_test(exp, 0)) result = result * base % mod;
    exp >>= 1;
    if (exp > 0) base = base * base % mod;
  }
  return result;
}

std::int64_t pow_mod64(std::int64_t base, std::uint64_t exp, std::int64_t mod) {
  using u128 = unsigned __int128;
  std::int64_t result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>(u128(result) * u128(base) % u128(mod));
    exp >>= 1;
    if (exp > 0) base = static_cast<std::int64_t>(u128(base) * u128(base) % u128(mod));
  }
  return result;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::invalid_argument("mod_inverse of 0");
  // extended Euclid
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  if (t < 0) t += p;
  return t;
}

std::int64_t mod_reduce(const Int& t, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("mod_reduce requires a positive modulus");
  Int r = t % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

}  // namespace trinogen
