// Batch certification over congruence families of trinomials. Candidates
// are enumerated lexicographically over (n, m, a, b); workers certify in
// parallel and a single collector emits JSON lines in candidate order, so
// output is byte-identical for any worker count.
#pragma once

#include <ostream>

#include "trinogen/monogenity.hpp"

namespace trinogen {

struct ScanSpec {
  std::vector<std::pair<long long, long long>> nm;  // (n, m) pairs
  Int a_min, a_max;
  Int b_min, b_max;
  long long a_mod = 0;  // 0 = no congruence filter
  std::vector<long long> a_res;
  long long b_mod = 0;
  std::vector<long long> b_res;
  unsigned long long cap = 1'000'000;
  int jobs = 1;
  std::string source_filter;  // certificate source prefix; empty = all
  CertifyOptions copts;
};

struct ScanSummary {
  unsigned long long candidates = 0;
  unsigned long long screened_out = 0;  // reducible or invalid inputs
  unsigned long long certified = 0;     // trinomials with at least one certificate
  unsigned long long certificates = 0;  // emitted lines
};

/// Streams one JSON certificate line per certified candidate, then a final
/// {"summary": ...} line. Throws std::invalid_argument when the candidate
/// count exceeds the cap or no (n, m) pairs were given.
ScanSummary run_scan(const ScanSpec& spec, std::ostream& out);

}  // namespace trinogen
