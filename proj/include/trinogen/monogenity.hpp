// Non-monogenity certification for trinomial fields K = Q(theta),
// theta a root of x^n + a x^m + b.
//
// Two independent routes are kept side by side:
//   - explicit congruence criteria on (n, m, a, b) that force more prime
//     ideals of some residue degree d above p than F_p has monic
//     irreducibles of degree d (a common index divisor), and
//   - the generic Newton-polygon engine, whose factorization shape is fed
//     through the same counting argument.
// A certificate records which route fired and whether the two agree.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trinogen/ore.hpp"

namespace trinogen {

/// Hypothesis data for the criterion with p | a, p !| b, p | n:
/// n = s * p^r with p !| s, mu = nu_p(a), nu = nu_p(b^{p-1} - 1).
struct CriterionAnParams {
  std::int64_t p;
  long long s;
  long long r;
  Valuation mu;
  Valuation nu;
};

/// Hypothesis data for the criterion with p !| a, p | b, p | n - m:
/// n - m = u * p^k with p !| u, delta = nu_p(b), kappa = nu_p(a^{p-1} - 1).
struct CriterionBnmParams {
  std::int64_t p;
  long long u;
  long long k;
  Valuation delta;
  Valuation kappa;
};

struct CheckOptions {
  /// Upper bound for the residue-degree scan; 0 means n/2.
  long long max_d = 0;
  /// Also evaluate the literal reading of the third condition of the
  /// b,n-m criterion (counting factors of x^u + b instead of x^u + a) and
  /// report it when the two disagree.
  bool bnm_cond3_literal = false;
};

/// A fired condition: which of the four count inequalities held, at which
/// residue degree d, with the implied number of degree-d primes above p and
/// the budget N_p(d) it exceeds.
struct TheoremHit {
  std::string source;  // "an(1)".."an(4)" or "bnm(1)".."bnm(4)"
  int condition = 0;
  long long d = 0;
  long long primes_found = 0;  // P_d
  long long budget = 0;        // N_p(d)
  long long s_or_u = 0;
  long long r_or_k = 0;
  Valuation first_val = Valuation(0);   // mu resp. delta
  Valuation second_val = Valuation(0);  // nu resp. kappa
  std::optional<long long> literal_count;
};

/// Criterion for odd p with p | a, p !| b, p | n (no-match when the
/// hypotheses or the Zylinski bound p < n fail).
std::optional<TheoremHit> check_divisor_an(const Trinomial& t, std::int64_t p,
                                           const CheckOptions& opts = {});

/// Criterion for odd p with p !| a, p | b, p | n - m.
std::optional<TheoremHit> check_divisor_bnm(const Trinomial& t, std::int64_t p,
                                            const CheckOptions& opts = {});

/// Sextic criterion (n = 6): the mod-9 family a = 0, b = -1 (mod 9) forces
/// i(K) = 3 or 6 mod 9; the mod-8 family a = 0, b = -1 (mod 8) forces
/// i(K) = 4 mod 8. Both may hold at once. Rejects n != 6.
struct SexticVerdict {
  bool mod9_family = false;
  bool mod8_family = false;
};

SexticVerdict check_sextic(const Trinomial& t);

/// Asserted p Z_K shapes for the two sextic families.
FactorizationShape sextic_mod9_shape();
FactorizationShape sextic_mod8_shape();

/// Families of ready-made congruence clauses; each match is confirmed by the
/// corresponding criterion before being reported.
///   an-23      degree n = 2^k 3^r, twelve clauses at p = 3
///   bnm-23     gap n - m = 2^r 3^k with (n-m) | m, twelve clauses at p = 3
///   purepower  n = p^r, r >= p, a = 0 and b^{p-1} = 1 (mod p^{p+1})
///   bnm-gcd    gcd(nu_p(b), m) = 1 refinement with degree-1 counts only
struct CorollaryMatch {
  std::string family;
  int clause = 0;
  std::int64_t prime = 0;
};

std::vector<CorollaryMatch> match_corollary_families(const Trinomial& t,
                                                     const CheckOptions& opts = {});

/// First residue degree d with more primes above p of degree d than monic
/// irreducibles of degree d over F_p; the shape must be complete.
std::optional<long long> common_index_divisor_test(const FactorizationShape& shape,
                                                   std::int64_t p, long long n);

/// Splitting-type -> nu_p(i(K)) lookup for degrees <= 7. Ships with the two
/// rows this library relies on; further rows load from an extension file of
/// lines `n p (e1,f1)(e2,f2)... -> valuation  # citation`.
class EngstromTable {
 public:
  static const EngstromTable& builtin();
  void load_extension(const std::string& path);
  std::optional<long long> lookup(long long n, std::int64_t p,
                                  const FactorizationShape& shape) const;

 private:
  using Key = std::tuple<long long, std::int64_t, std::vector<std::pair<long long, long long>>>;
  std::map<Key, long long> rows_;
};

struct Certificate {
  Trinomial trinomial;
  std::int64_t prime = 0;
  std::string source;  // "an(k)", "bnm(k)", "sextic(9)", "sextic(8)", "engine"
  long long witness_d = 0;
  long long primes_found = 0;  // P_d
  long long budget = 0;        // N_p(d)
  std::optional<FactorizationShape> engine_shape;
  bool engine_agrees = false;
  std::optional<long long> index_valuation;
  Screen irreducibility = Screen::Unknown;
  std::vector<CorollaryMatch> corollaries;
  std::string note;  // warnings (non-regular engine, literal-count mismatch)
};

struct CertifyOptions {
  CheckOptions check;
  const EngstromTable* engstrom = nullptr;  // defaults to the builtin table
};

/// Thrown when the input fails the reducibility gate.
class ReducibleInput : public std::runtime_error {
 public:
  ReducibleInput(const std::string& msg, IntPoly witness_)
      : std::runtime_error(msg), witness(std::move(witness_)) {}
  IntPoly witness;
};

/// Candidate primes for p | i(K): p < n with p^2 | disc(F).
std::vector<std::int64_t> candidate_primes(const Trinomial& t);

/// Runs every theorem checker and the engine at each candidate prime; emits
/// a certificate whenever either route certifies p | i(K). Pure function of
/// the input. Throws ReducibleInput when the screen finds a factor.
std::vector<Certificate> certify(const Trinomial& t, const CertifyOptions& opts = {});

const char* to_string(Screen s);

}  // namespace trinogen
