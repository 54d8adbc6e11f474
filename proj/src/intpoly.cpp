#include "trinogen/intpoly.hpp"

#include <numeric>
#include <sstream>

namespace trinogen {

IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return IntPoly(std::move(c));
}

IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return IntPoly(std::move(c));
}

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> c(a.c.size() + b.c.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  }
  return IntPoly(std::move(c));
}

IntPoly ip_neg(const IntPoly& a) {
  IntPoly r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

IntPoly ip_scale(const IntPoly& a, const Int& s) {
  if (s == 0) return IntPoly();
  IntPoly r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

IntPoly ip_derivative(const IntPoly& a) {
  if (a.c.size() <= 1) return IntPoly();
  std::vector<Int> c(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) c[i - 1] = a.c[i] * static_cast<long long>(i);
  return IntPoly(std::move(c));
}

Int ip_eval(const IntPoly& a, const Int& x) {
  Int r = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
  return r;
}

void ip_divmod_monic(const IntPoly& a, const IntPoly& d, IntPoly& quot, IntPoly& rem) {
  if (!d.is_monic()) throw std::invalid_argument("division requires a monic divisor");
  std::vector<Int> r = a.c;
  const int dd = d.degree();
  const int da = a.degree();
  if (da < dd) {
    quot = IntPoly();
    rem = a;
    return;
  }
  std::vector<Int> q(da - dd + 1, Int(0));
  for (int i = da; i >= dd; --i) {
    Int coef = r[i];
    if (coef == 0) continue;
    q[i - dd] = coef;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= coef * d.c[j];
  }
  quot = IntPoly(std::move(q));
  rem = IntPoly(std::move(r));
}

std::string to_string(const IntPoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    const Int& v = a.c[i];
    if (v == 0) continue;
    Int mag = abs(v);
    if (first) {
      if (v < 0) out << "-";
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.str();
    if (i > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

Trinomial::Trinomial(long long n_, long long m_, Int a_, Int b_)
    : n(n_), m(m_), a(std::move(a_)), b(std::move(b_)) {
  if (!(0 < m && m < n)) throw std::invalid_argument("trinomial requires 0 < m < n");
  if (b == 0) throw std::invalid_argument("trinomial requires b != 0");
  d0 = std::gcd(n, m);
  n1 = n / d0;
  m1 = m / d0;
}

IntPoly Trinomial::to_poly() const {
  std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
  c[0] = b;
  c[static_cast<std::size_t>(m)] += a;
  c[static_cast<std::size_t>(n)] += 1;
  return IntPoly(std::move(c));
}

std::string to_string(const Trinomial& t) { return to_string(t.to_poly()); }

Int trinomial_discriminant(const Trinomial& t) {
  if (t.is_binomial()) return resultant_disc_oracle(t.to_poly());
  Int inner = int_pow(t.n, t.n1) * int_pow(t.b, t.n1 - t.m1);
  Int second = int_pow(t.m, t.m1) * int_pow(Int(t.m) - t.n, t.n1 - t.m1) * int_pow(t.a, t.n1);
  if (t.m1 % 2 != 0) second = -second;
  Int core = int_pow(inner - second, t.d0);
  Int disc = int_pow(t.b, t.m - 1) * core;
  if ((t.n * (t.n - 1) / 2) % 2 != 0) disc = -disc;
  return disc;
}

// Subresultant polynomial remainder sequence (Collins). Exact over Z.
Int resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  IntPoly a = f, b = g;
  bool swapped = false;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    swapped = true;
  }
  // sign from the swap: Res(f, g) = (-1)^{deg f * deg g} Res(g, f)
  bool negate = swapped && (f.degree() % 2 != 0) && (g.degree() % 2 != 0);

  Int gg = 1;  // previous leading coefficient
  Int hh = 1;  // previous subresultant scale
  Int sign = 1;
  while (b.degree() > 0) {
    const int da = a.degree();
    const int db = b.degree();
    const int delta = da - db;
    if ((da % 2 != 0) && (db % 2 != 0)) sign = -sign;
    // pseudo-remainder: lc(b)^{delta+1} * a mod b
    IntPoly r = ip_scale(a, int_pow(b.lead(), delta + 1));
    IntPoly q;
    {
      // division by a (generally) non-monic b is exact here by construction
      std::vector<Int> rr = r.c;
      const Int lb = b.lead();
      if (r.degree() >= db) {
        for (int i = r.degree(); i >= db; --i) {
          Int coef = rr[i];
          if (coef == 0) continue;
          Int qc = coef / lb;
          if (qc * lb != coef) throw std::logic_error("pseudo-division not exact");
          for (int j = 0; j <= db; ++j) rr[i - db + j] -= qc * b.c[j];
        }
      }
      r = IntPoly(std::move(rr));
    }
    a = b;
    // divide out g * h^delta
    Int denom = gg * int_pow(hh, delta);
    IntPoly nb = r;
    for (auto& v : nb.c) {
      Int qv = v / denom;
      if (qv * denom != v) throw std::logic_error("subresultant division not exact");
      v = qv;
    }
    b = nb;
    gg = a.lead();
    if (delta >= 1) {
      Int num = int_pow(gg, delta);
      Int den = int_pow(hh, delta - 1);
      hh = num / den;
      if (hh * den != num) throw std::logic_error("subresultant scale not exact");
    }
    if (b.is_zero()) return 0;
  }
  // b is a nonzero constant; finish the resultant scale
  const int da = a.degree();
  Int num = int_pow(b.c[0], da);
  Int den = int_pow(hh, da - 1);
  Int res = num / den;
  if (res * den != num) throw std::logic_error("subresultant final division not exact");
  if (sign < 0) res = -res;
  if (negate) res = -res;
  return res;
}

Int resultant_disc_oracle(const IntPoly& f) {
  if (!f.is_monic()) throw std::invalid_argument("discriminant oracle requires a monic polynomial");
  const int n = f.degree();
  if (n < 2) throw std::invalid_argument("discriminant oracle requires degree >= 2");
  Int res = resultant(f, ip_derivative(f));
  if ((static_cast<long long>(n) * (n - 1) / 2) % 2 != 0) res = -res;
  return res;
}

PhiDevelopment phi_adic_development(const IntPoly& f, const IntPoly& phi) {
  if (!phi.is_monic() || phi.degree() < 1)
    throw std::invalid_argument("phi-adic development requires a monic phi of degree >= 1");
  PhiDevelopment dev;
  dev.phi = phi;
  IntPoly cur = f;
  // floor(deg F / deg phi) + 1 terms, including trailing zero terms
  const std::size_t nterms =
      f.is_zero() ? 1 : static_cast<std::size_t>(f.degree() / phi.degree()) + 1;
  while (!cur.is_zero()) {
    IntPoly q, r;
    ip_divmod_monic(cur, phi, q, r);
    dev.terms.push_back(r);
    cur = q;
  }
  while (dev.terms.size() < nterms) dev.terms.push_back(IntPoly());
  return dev;
}

IntPoly phi_dev_reconstruct(const IntPoly& phi, const std::vector<IntPoly>& terms) {
  IntPoly acc;
  for (std::size_t i = terms.size(); i-- > 0;) {
    acc = ip_add(ip_mul(acc, phi), terms[i]);
  }
  return acc;
}

}  // namespace trinogen
