// phi-Newton polygons: lower convex hulls of valuation points with exact
// rational slopes, principal parts, residue coefficients, residual
// polynomials over F_phi, the phi-index, admissibility of general
// phi-developments, and the per-factor regularity analysis.
//
// Slopes are exact integer pairs throughout; no floating point is involved
// anywhere in hull construction or lattice-point counting.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trinogen/gfpoly.hpp"
#include "trinogen/lifting.hpp"

namespace trinogen {

/// Thrown when a lift turns out to divide F exactly over Z: F is reducible
/// and the factorization machinery does not apply to it.
class FactorFound : public std::runtime_error {
 public:
  explicit FactorFound(IntPoly f)
      : std::runtime_error("exact factor found: F is reducible"), factor(std::move(f)) {}
  IntPoly factor;
};

/// A valuation point (i, nu_p(a_i)). Points with infinite ordinate are kept
/// out of hull construction.
struct NPPoint {
  long long x;
  Valuation y;
};

/// A maximal segment of the polygon between consecutive vertices
/// (x0, y0) -> (x1, y1). For principal sides the slope is -h/e < 0 with
/// gcd(h, e) = 1; the degree l(S)/e counts the lattice segments.
struct Side {
  long long x0, y0, x1, y1;
  long long h = 0;  // positive for principal sides
  long long e = 1;

  long long length() const { return x1 - x0; }
  long long degree() const { return length() / e; }
  bool is_principal() const { return y1 < y0; }
  std::string slope_string() const;
};

struct NewtonPolygon {
  std::vector<Side> sides;  // increasing slopes
  long long phi_degree = 1;

  bool empty() const { return sides.empty(); }
  long long total_length() const {
    return sides.empty() ? 0 : sides.back().x1 - sides.front().x0;
  }
  std::vector<std::pair<long long, long long>> vertices() const;
};

struct PolygonPair {
  std::vector<NPPoint> points;  // finite-ordinate valuation points
  NewtonPolygon full;
  NewtonPolygon principal;  // negative-slope sides only
};

/// Lower convex hull of the development's valuation points, plus its
/// principal (negative-slope) part. Rejects a development with no
/// finite-valuation point. When phi divides F exactly the a_0 point is
/// absent and the principal part starts past abscissa 0; the factorization
/// theory never reaches that case (F is irreducible there).
PolygonPair build_polygon(const PhiDevelopment& dev, std::int64_t p);

/// deg(phi) times the number of lattice points (x, y), x >= 1, y >= 1, lying
/// on or below the principal polygon.
long long phi_index(const NewtonPolygon& principal);

/// Residual polynomial attached to one principal side: coefficients are the
/// residue coefficients at the lattice points of the side, zero where the
/// point lies strictly above the polygon.
struct ResidualPoly {
  Side side;
  ExtGFPoly poly;
};

ResidualPoly residual_polynomial(const PhiDevelopment& dev, std::int64_t p, const Side& side);

/// Admissibility check for an arbitrary phi-development (coefficients need
/// not have degree < deg phi): true iff at every vertex abscissa j of the
/// principal polygon, phi does not divide (A_j / p^{w_j}) mod p. When true,
/// the returned polygon and residual data equal the phi-adic ones.
struct AdmissibleCheck {
  bool admissible = false;
  NewtonPolygon principal;
  std::vector<ResidualPoly> residuals;
};

AdmissibleCheck check_admissible(const IntPoly& phi, const std::vector<IntPoly>& terms,
                                 std::int64_t p);

/// Same check on a development object; records the verdict in its
/// admissible flag.
AdmissibleCheck check_admissible(PhiDevelopment& dev, std::int64_t p);

/// Full analysis of one irreducible factor gbar of F mod p through its
/// controlled-divisibility lift: principal polygon, residual polynomials
/// with their factorizations over F_phi, regularity, phi-index, and the
/// (e, f) prime data contributed when regular.
struct PhiFactorAnalysis {
  GFPoly residue_factor;
  IntPoly lift;
  long long multiplicity = 0;
  NewtonPolygon principal;
  std::vector<ResidualPoly> residuals;
  std::vector<std::vector<std::pair<ExtGFPoly, int>>> residual_factors;
  bool regular = false;
  long long index = 0;
  std::vector<std::pair<long long, long long>> primes;  // (e, f), valid when regular
};

PhiFactorAnalysis analyze_phi_factor(const IntPoly& f, const IntPoly& phi, const GFPoly& gbar,
                                     long long multiplicity, std::int64_t p);

/// p-regularity of a monic F: every residual polynomial of every side of
/// every factor's polygon is separable over its F_phi.
struct RegularityReport {
  bool regular = false;
  std::vector<PhiFactorAnalysis> factors;
};

RegularityReport is_p_regular(const IntPoly& f, std::int64_t p);

}  // namespace trinogen
