// JSON views of certificates and engine reports. Certificate lines follow a
// frozen schema (versioned by the "schema" field); coefficients travel as
// decimal strings to stay exact past 64 bits.
#pragma once

#include <json.hpp>

#include "trinogen/monogenity.hpp"

namespace trinogen {

nlohmann::json trinomial_to_json(const Trinomial& t);
Trinomial trinomial_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

/// Canonical single-line rendering used by `certify --json` and `scan`.
std::string certificate_line(const Certificate& c);

nlohmann::json polygon_to_json(const NewtonPolygon& np);
nlohmann::json ore_report_to_json(const Trinomial& t, const OreReport& rep);

}  // namespace trinogen
