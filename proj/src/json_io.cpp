#include "trinogen/json_io.hpp"

namespace trinogen {

using nlohmann::json;

json trinomial_to_json(const Trinomial& t) {
  return json{{"n", std::to_string(t.n)},
              {"m", std::to_string(t.m)},
              {"a", t.a.str()},
              {"b", t.b.str()}};
}

Trinomial trinomial_from_json(const json& j) {
  return Trinomial(std::stoll(j.at("n").get<std::string>()),
                   std::stoll(j.at("m").get<std::string>()),
                   Int(j.at("a").get<std::string>()), Int(j.at("b").get<std::string>()));
}

json certificate_to_json(const Certificate& c) {
  json j;
  j["schema"] = 1;
  j["trinomial"] = trinomial_to_json(c.trinomial);
  j["prime"] = c.prime;
  j["source"] = c.source;
  j["witness_d"] = c.witness_d;
  j["P_d"] = c.primes_found;
  j["N_p_d"] = c.budget;
  if (c.engine_shape) {
    json shape = json::array();
    for (const auto& [e, f] : c.engine_shape->entries) shape.push_back(json::array({e, f}));
    j["shape"] = shape;
  } else {
    j["shape"] = nullptr;
  }
  j["engine_agrees"] = c.engine_agrees;
  if (c.index_valuation) {
    j["index_valuation"] = *c.index_valuation;
  } else {
    j["index_valuation"] = "unknown";
  }
  j["irreducibility"] = (c.irreducibility == Screen::Irreducible) ? "proved" : "unknown";
  return j;
}

Certificate certificate_from_json(const json& j) {
  if (j.at("schema").get<int>() != 1) throw std::runtime_error("unsupported certificate schema");
  Trinomial t = trinomial_from_json(j.at("trinomial"));
  Certificate c{t,
                j.at("prime").get<std::int64_t>(),
                j.at("source").get<std::string>(),
                j.at("witness_d").get<long long>(),
                j.at("P_d").get<long long>(),
                j.at("N_p_d").get<long long>(),
                std::nullopt,
                j.at("engine_agrees").get<bool>(),
                std::nullopt,
                Screen::Unknown,
                {},
                ""};
  if (!j.at("shape").is_null()) {
    std::vector<std::pair<long long, long long>> entries;
    for (const auto& ef : j.at("shape")) {
      entries.emplace_back(ef.at(0).get<long long>(), ef.at(1).get<long long>());
    }
    c.engine_shape = FactorizationShape(std::move(entries));
  }
  if (j.at("index_valuation").is_number()) {
    c.index_valuation = j.at("index_valuation").get<long long>();
  }
  if (j.at("irreducibility").get<std::string>() == "proved") {
    c.irreducibility = Screen::Irreducible;
  }
  return c;
}

std::string certificate_line(const Certificate& c) { return certificate_to_json(c).dump(); }

json polygon_to_json(const NewtonPolygon& np) {
  json j;
  json verts = json::array();
  for (const auto& [x, y] : np.vertices()) verts.push_back(json::array({x, y}));
  j["vertices"] = verts;
  json sides = json::array();
  for (const Side& s : np.sides) {
    sides.push_back(json{{"from", json::array({s.x0, s.y0})},
                         {"to", json::array({s.x1, s.y1})},
                         {"slope", s.slope_string()},
                         {"h", s.h},
                         {"e", s.e},
                         {"length", s.length()},
                         {"degree", s.degree()}});
  }
  j["sides"] = sides;
  return j;
}

json ore_report_to_json(const Trinomial& t, const OreReport& rep) {
  json j;
  j["schema"] = 1;
  j["command"] = "analyze";
  j["trinomial"] = trinomial_to_json(t);
  j["prime"] = rep.p;
  j["regular"] = rep.regular;
  j["index_lower_bound"] = rep.index_lower_bound;
  json factors = json::array();
  for (const auto& fa : rep.factors) {
    json jf;
    jf["residue_factor"] = to_string(fa.residue_factor);
    jf["lift"] = to_string(fa.lift);
    jf["multiplicity"] = fa.multiplicity;
    jf["polygon"] = polygon_to_json(fa.principal);
    json residuals = json::array();
    for (std::size_t i = 0; i < fa.residuals.size(); ++i) {
      json jr;
      jr["side"] = i;
      jr["poly"] = to_string(fa.residuals[i].poly);
      json facs = json::array();
      for (const auto& [psi, mult] : fa.residual_factors[i]) {
        facs.push_back(json::array({to_string(psi), mult}));
      }
      jr["factors"] = facs;
      residuals.push_back(jr);
    }
    jf["residuals"] = residuals;
    jf["index"] = fa.index;
    jf["regular"] = fa.regular;
    factors.push_back(jf);
  }
  j["factors"] = factors;
  if (rep.shape) {
    json shape = json::array();
    for (const auto& [e, f] : rep.shape->entries) shape.push_back(json::array({e, f}));
    j["shape"] = shape;
  } else {
    j["shape"] = nullptr;
  }
  return j;
}

}  // namespace trinogen
