// trinogen — certify non-monogenity of trinomial fields Q(theta),
// theta a root of x^n + a x^m + b.
//
// Subcommands:
//   analyze       Newton-polygon report for F at one prime
//   certify       run every criterion and the engine over candidate primes
//   discriminant  exact discriminant of the trinomial
//   scan          batch-certify a congruence family, JSON lines out
//
// Exit codes: 0 success (certify: at least one certificate), 1 certify found
// no certificate, 2 input rejected (reducible, invalid, or a usage error).
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "trinogen/json_io.hpp"
#include "trinogen/scan.hpp"

namespace {

using namespace trinogen;

struct TrinomialArgs {
  long long n = 0;
  long long m = 0;
  std::string a;
  std::string b;
};

void add_trinomial_options(CLI::App* cmd, TrinomialArgs& args) {
  cmd->add_option("--n", args.n, "degree n")->required();
  cmd->add_option("--m", args.m, "middle exponent m, 0 < m < n")->required();
  cmd->add_option("--a", args.a, "coefficient a (decimal, may be negative)")->required();
  cmd->add_option("--b", args.b, "coefficient b (decimal, nonzero)")->required();
}

Trinomial parse_trinomial(const TrinomialArgs& args) {
  return Trinomial(args.n, args.m, Int(args.a), Int(args.b));
}

EngstromTable load_engstrom_from_env(bool& loaded) {
  EngstromTable table;
  loaded = false;
  if (const char* path = std::getenv("TRINOGEN_ENGSTROM_PATH")) {
    table.load_extension(path);
    loaded = true;
  }
  return table;
}

void render_polygon_ascii(const NewtonPolygon& np, std::ostream& out) {
  if (np.sides.empty()) {
    out << "    (empty principal polygon)\n";
    return;
  }
  const long long height = np.sides.front().y0;
  const long long width = np.sides.back().x1;
  if (height > 40 || width > 120) {
    out << "    (polygon too large to draw; vertices listed above)\n";
    return;
  }
  for (long long y = height; y >= 0; --y) {
    out << "    ";
    for (long long x = 0; x <= width; ++x) {
      bool vertex = false;
      for (const auto& [vx, vy] : np.vertices()) {
        if (vx == x && vy == y) vertex = true;
      }
      out << (vertex ? '*' : '.');
    }
    out << "\n";
  }
}

void render_report(const Trinomial& t, const OreReport& rep, bool dump_polygon,
                   std::ostream& out) {
  out << "F = " << to_string(t) << ", p = " << rep.p << "\n";
  for (const auto& fa : rep.factors) {
    out << "factor " << to_string(fa.residue_factor) << " (multiplicity " << fa.multiplicity
        << "), lift " << to_string(fa.lift) << "\n";
    if (fa.principal.sides.empty()) {
      out << "  principal polygon: empty\n";
    } else {
      out << "  principal polygon:";
      for (const auto& [x, y] : fa.principal.vertices()) out << " (" << x << "," << y << ")";
      out << "\n";
      for (std::size_t i = 0; i < fa.principal.sides.size(); ++i) {
        const Side& s = fa.principal.sides[i];
        out << "  side " << i << ": (" << s.x0 << "," << s.y0 << ") -> (" << s.x1 << "," << s.y1
            << "), slope " << s.slope_string() << ", e = " << s.e << ", degree " << s.degree()
            << "\n";
        out << "    residual: " << to_string(fa.residuals[i].poly) << " over F_"
            << fa.residue_factor.p;
        if (fa.residue_factor.degree() > 1)
          out << "[x]/(" << to_string(fa.residue_factor) << ")";
        out << "\n";
        out << "    factors:";
        for (const auto& [psi, mult] : fa.residual_factors[i]) {
          out << " (" << to_string(psi) << ")";
          if (mult > 1) out << "^" << mult;
        }
        out << "\n";
      }
    }
    out << "  index contribution: " << fa.index << (fa.regular ? "" : "  [non-regular]") << "\n";
    if (dump_polygon) render_polygon_ascii(fa.principal, out);
  }
  out << "index lower bound: " << rep.index_lower_bound
      << (rep.regular ? " (exact: p-regular)" : " (inequality only: not p-regular)") << "\n";
  if (rep.shape) {
    out << "shape of pZ_K: " << rep.shape->to_string() << "\n";
    out << "pZ_K =";
    for (std::size_t i = 0; i < rep.shape->entries.size(); ++i) {
      const auto& [e, f] = rep.shape->entries[i];
      out << (i ? " *" : "") << " P" << i + 1;
      if (e > 1) out << "^" << e;
      out << "(f=" << f << ")";
    }
    out << "\n";
  }
}

void render_certificate(const Certificate& c, std::ostream& out) {
  out << "certificate: p = " << c.prime << " divides i(K) for " << to_string(c.trinomial) << "\n";
  out << "  source " << c.source << ", witness degree d = " << c.witness_d << ": P_d = "
      << c.primes_found << " > N_p(d) = " << c.budget << "\n";
  if (c.engine_shape) {
    out << "  engine shape: " << c.engine_shape->to_string() << " (engine "
        << (c.engine_agrees ? "agrees" : "DISAGREES") << ")\n";
  } else {
    out << "  engine shape unavailable (non-regular)\n";
  }
  if (c.index_valuation) {
    out << "  nu_p(i(K)) = " << *c.index_valuation << " by Engstrom's table\n";
  }
  for (const auto& cm : c.corollaries) {
    out << "  matches family " << cm.family << " clause " << cm.clause << "\n";
  }
  out << "  irreducibility: " << to_string(c.irreducibility) << "\n";
  if (!c.note.empty()) out << "  note: " << c.note << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton-polygon certification of non-monogenic trinomial fields"};
  app.require_subcommand(1);

  TrinomialArgs targs;
  std::int64_t prime = 0;
  bool as_json = false;
  bool dump_polygon = false;
  long long max_d = 0;
  bool bnm_literal = false;

  auto* analyze = app.add_subcommand("analyze", "Newton-polygon report at one prime");
  add_trinomial_options(analyze, targs);
  analyze->add_option("--p", prime, "prime to analyze")->required();
  analyze->add_flag("--json", as_json, "emit the JSON report");
  analyze->add_flag("--dump-polygon", dump_polygon, "ASCII rendering of each polygon");

  auto* certify_cmd = app.add_subcommand("certify", "certify non-monogenity");
  add_trinomial_options(certify_cmd, targs);
  certify_cmd->add_flag("--json", as_json, "emit JSON lines");
  certify_cmd->add_option("--max-d", max_d, "residue-degree scan bound (default n/2)");
  certify_cmd->add_flag("--bnm-cond3-literal", bnm_literal,
                        "also report the literal count reading of bnm condition 3");

  auto* disc_cmd = app.add_subcommand("discriminant", "exact trinomial discriminant");
  add_trinomial_options(disc_cmd, targs);
  disc_cmd->add_flag("--json", as_json, "emit JSON");

  ScanSpec spec;
  std::string nm_list;
  std::string a_min_s, a_max_s, b_min_s, b_max_s;
  std::vector<long long> a_res, b_res;
  auto* scan_cmd = app.add_subcommand("scan", "batch-certify a congruence family");
  scan_cmd->add_option("--nm", nm_list, "comma-separated n:m pairs, e.g. 6:1,6:2")->required();
  scan_cmd->add_option("--a-min", a_min_s, "lower bound for a")->required();
  scan_cmd->add_option("--a-max", a_max_s, "upper bound for a")->required();
  scan_cmd->add_option("--b-min", b_min_s, "lower bound for b")->required();
  scan_cmd->add_option("--b-max", b_max_s, "upper bound for b")->required();
  scan_cmd->add_option("--a-mod", spec.a_mod, "congruence modulus for a");
  scan_cmd->add_option("--a-res", a_res, "accepted residues of a (with --a-mod)");
  scan_cmd->add_option("--b-mod", spec.b_mod, "congruence modulus for b");
  scan_cmd->add_option("--b-res", b_res, "accepted residues of b (with --b-mod)");
  scan_cmd->add_option("--jobs", spec.jobs, "worker count (output is order-stable)");
  scan_cmd->add_option("--cap", spec.cap, "candidate cap (default 10^6)");
  scan_cmd->add_option("--source-filter", spec.source_filter,
                       "only emit certificates whose source starts with this prefix");
  scan_cmd->add_option("--max-d", max_d, "residue-degree scan bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors share the rejected-input code
  }

  try {
    bool engstrom_loaded = false;
    EngstromTable engstrom = load_engstrom_from_env(engstrom_loaded);
    CertifyOptions copts;
    copts.check.max_d = max_d;
    copts.check.bnm_cond3_literal = bnm_literal;
    if (engstrom_loaded) copts.engstrom = &engstrom;

    if (analyze->parsed()) {
      if (!is_prime(prime)) {
        std::cerr << "error: --p must be prime\n";
        return 2;
      }
      const Trinomial t = parse_trinomial(targs);
      const ScreenResult screen = irreducibility_screen(t.to_poly());
      if (screen.verdict == Screen::Reducible) {
        std::cerr << "error: reducible input (" << screen.detail << ")\n";
        return 2;
      }
      const OreReport rep = analyze_prime(t.to_poly(), prime);
      if (as_json) {
        auto j = ore_report_to_json(t, rep);
        j["irreducibility"] = (screen.verdict == Screen::Irreducible) ? "proved" : "unknown";
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "irreducibility: " << to_string(screen.verdict) << " (" << screen.detail
                  << ")\n";
        render_report(t, rep, dump_polygon, std::cout);
      }
      return 0;
    }

    if (certify_cmd->parsed()) {
      const Trinomial t = parse_trinomial(targs);
      std::vector<Certificate> certs;
      try {
        certs = certify(t, copts);
      } catch (const ReducibleInput& e) {
        std::cerr << "error: " << e.what();
        if (!e.witness.is_zero()) std::cerr << " (factor " << to_string(e.witness) << ")";
        std::cerr << "\n";
        return 2;
      }
      for (const auto& c : certs) {
        if (as_json) {
          std::cout << certificate_line(c) << "\n";
        } else {
          render_certificate(c, std::cout);
        }
      }
      if (!as_json && certs.empty()) std::cout << "no certificate found\n";
      return certs.empty() ? 1 : 0;
    }

    if (disc_cmd->parsed()) {
      const Trinomial t = parse_trinomial(targs);
      const Int disc = trinomial_discriminant(t);
      if (as_json) {
        nlohmann::json j{{"schema", 1},
                         {"trinomial", trinomial_to_json(t)},
                         {"discriminant", disc.str()}};
        if (t.is_binomial()) j["binomial"] = true;
        std::cout << j.dump() << "\n";
      } else {
        if (t.is_binomial())
          std::cout << "note: a = 0 (binomial); value from the resultant oracle\n";
        std::cout << disc.str() << "\n";
      }
      return 0;
    }

    if (scan_cmd->parsed()) {
      spec.a_min = Int(a_min_s);
      spec.a_max = Int(a_max_s);
      spec.b_min = Int(b_min_s);
      spec.b_max = Int(b_max_s);
      spec.a_res = {a_res.begin(), a_res.end()};
      spec.b_res = {b_res.begin(), b_res.end()};
      spec.copts = copts;
      std::stringstream nm(nm_list);
      std::string pair;
      while (std::getline(nm, pair, ',')) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad --nm entry: " + pair);
        spec.nm.emplace_back(std::stoll(pair.substr(0, colon)),
                             std::stoll(pair.substr(colon + 1)));
      }
      run_scan(spec, std::cout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
