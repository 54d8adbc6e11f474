// Per-prime analysis of a monic irreducible F: factor F mod p, build the
// phi-polygons of all irreducible factors through their lifts, sum the
// phi-indices into the index lower bound, and, when F is p-regular, emit the
// factorization shape of p Z_K (ramification indices and residue degrees).
// Dedekind's index criterion is kept alongside as an independent oracle.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trinogen/newton.hpp"

namespace trinogen {

/// Multiset of (ramification index e, residue degree f) pairs, canonically
/// sorted; complete when sum e*f equals the field degree.
struct FactorizationShape {
  std::vector<std::pair<long long, long long>> entries;

  FactorizationShape() = default;
  explicit FactorizationShape(std::vector<std::pair<long long, long long>> es);

  long long sum_ef() const;
  /// Number of entries with residue degree d.
  long long count_residue_degree(long long d) const;
  long long max_residue_degree() const;
  std::string to_string() const;

  friend bool operator==(const FactorizationShape& a, const FactorizationShape& b) {
    return a.entries == b.entries;
  }
  friend bool operator<(const FactorizationShape& a, const FactorizationShape& b) {
    return a.entries < b.entries;
  }
};

struct OreReport {
  std::int64_t p = 0;
  std::vector<PhiFactorAnalysis> factors;
  long long index_lower_bound = 0;
  bool regular = false;
  std::optional<FactorizationShape> shape;  // present iff regular
};

/// The per-prime engine. F must be monic with F mod p nonzero; callers are
/// expected to have screened irreducibility. Reports are pure functions of
/// (F, p). Throws FactorFound when a lift divides F exactly (F was
/// reducible after all).
OreReport analyze_prime(const IntPoly& f, std::int64_t p);

/// true iff p divides (Z_K : Z[theta]), by Dedekind's criterion.
bool dedekind_index_test(const IntPoly& f, std::int64_t p);

}  // namespace trinogen
