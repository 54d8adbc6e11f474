#include "trinogen/scan.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "trinogen/json_io.hpp"

namespace trinogen {

namespace {

std::vector<long long> distinct_residues(long long mod, std::vector<long long> res) {
  for (auto& r : res) r = ((r % mod) + mod) % mod;
  std::sort(res.begin(), res.end());
  res.erase(std::unique(res.begin(), res.end()), res.end());
  return res;
}

Int congruence_count(const Int& lo, const Int& hi, long long mod,
                     const std::vector<long long>& res) {
  if (mod <= 0) return hi - lo + 1;
  Int total = 0;
  for (long long r : distinct_residues(mod, res)) {
    Int first = lo + (((Int(r) - lo) % mod) + mod) % mod;
    if (first > hi) continue;
    total += (hi - first) / mod + 1;
  }
  return total;
}

std::vector<Int> congruence_values(const Int& lo, const Int& hi, long long mod,
                                   const std::vector<long long>& res) {
  std::vector<Int> out;
  if (mod <= 0) {
    for (Int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  for (long long r : distinct_residues(mod, res)) {
    for (Int v = lo + (((Int(r) - lo) % mod) + mod) % mod; v <= hi; v += mod) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ScanSummary run_scan(const ScanSpec& spec, std::ostream& out) {
  if (spec.nm.empty()) throw std::invalid_argument("scan: no (n, m) pairs given");
  if (spec.jobs < 1) throw std::invalid_argument("scan: worker count must be >= 1");
  // an empty coefficient range is a valid (zero-candidate) scan
  if (spec.a_min > spec.a_max || spec.b_min > spec.b_max) {
    ScanSummary summary;
    nlohmann::json j;
    j["summary"] = {{"candidates", 0}, {"screened_out", 0}, {"certified", 0},
                    {"certificates", 0}};
    out << j.dump() << "\n";
    return summary;
  }

  std::vector<std::pair<long long, long long>> nm = spec.nm;
  std::sort(nm.begin(), nm.end());
  nm.erase(std::unique(nm.begin(), nm.end()), nm.end());

  // Candidate count gate before materializing value lists.
  {
    Int count = Int(nm.size()) *
                congruence_count(spec.a_min, spec.a_max, spec.a_mod, spec.a_res) *
                congruence_count(spec.b_min, spec.b_max, spec.b_mod, spec.b_res);
    if (count > spec.cap)
      throw std::invalid_argument("scan: " + count.str() + " candidates exceed cap of " +
                                  std::to_string(spec.cap) + " (raise --cap)");
  }

  const std::vector<Int> a_vals =
      congruence_values(spec.a_min, spec.a_max, spec.a_mod, spec.a_res);
  const std::vector<Int> b_vals =
      congruence_values(spec.b_min, spec.b_max, spec.b_mod, spec.b_res);

  const unsigned long long total =
      static_cast<unsigned long long>(nm.size()) * a_vals.size() * b_vals.size();

  ScanSummary summary;
  summary.candidates = total;

  struct Slot {
    std::string lines;
    bool screened_out = false;
    bool certified = false;
    unsigned long long emitted = 0;
  };

  auto run_one = [&](unsigned long long idx) {
    Slot slot;
    const std::size_t bi = idx % b_vals.size();
    const std::size_t ai = (idx / b_vals.size()) % a_vals.size();
    const std::size_t ni = idx / (b_vals.size() * a_vals.size());
    const auto& [n, m] = nm[ni];
    const Int& a = a_vals[ai];
    const Int& b = b_vals[bi];
    if (b == 0) {
      slot.screened_out = true;
      return slot;
    }
    try {
      const Trinomial t(n, m, a, b);
      const auto certs = certify(t, spec.copts);
      std::ostringstream lines;
      for (const auto& c : certs) {
        if (!spec.source_filter.empty() &&
            c.source.rfind(spec.source_filter, 0) != 0)
          continue;
        lines << certificate_line(c) << "\n";
        ++slot.emitted;
      }
      slot.certified = slot.emitted > 0;
      slot.lines = lines.str();
    } catch (const ReducibleInput&) {
      slot.screened_out = true;
    }
    return slot;
  };

  constexpr unsigned long long kChunk = 64;
  std::vector<Slot> slots(kChunk);
  for (unsigned long long base = 0; base < total; base += kChunk) {
    const unsigned long long count = std::min<unsigned long long>(kChunk, total - base);
    if (spec.jobs == 1) {
      for (unsigned long long i = 0; i < count; ++i) slots[i] = run_one(base + i);
    } else {
      std::atomic<unsigned long long> next{0};
      std::vector<std::thread> pool;
      const int workers = std::min<int>(spec.jobs, static_cast<int>(count));
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          while (true) {
            const unsigned long long i = next.fetch_add(1);
            if (i >= count) break;
            slots[i] = run_one(base + i);
          }
        });
      }
      for (auto& th : pool) th.join();
    }
    for (unsigned long long i = 0; i < count; ++i) {
      out << slots[i].lines;
      summary.screened_out += slots[i].screened_out ? 1 : 0;
      summary.certified += slots[i].certified ? 1 : 0;
      summary.certificates += slots[i].emitted;
    }
  }

  nlohmann::json j;
  j["summary"] = {{"candidates", summary.candidates},
                  {"screened_out", summary.screened_out},
                  {"certified", summary.certified},
                  {"certificates", summary.certificates}};
  out << j.dump() << "\n";
  return summary;
}

}  // namespace trinogen
