#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "attlab/attractor.hpp"
#include "attlab/instance_gen.hpp"

namespace attlab {

using Json = nlohmann::ordered_json;

std::string format_double(double v);

/// "t,<name>" header plus one row per sample; shortest-roundtrip doubles so
/// reruns are byte-identical.
std::string csv_series(const std::string& value_name,
                       const std::vector<std::pair<double, double>>& rows);

Json universe_to_json(const FiniteUniverse& u);
FiniteUniverse universe_from_json(const Json& j);

Json random_set_to_json(const RandomSet& s);
RandomSet random_set_from_json(const Json& j, int universe_size, int carrier_size);

Json instance_to_json(const FiniteInstance& inst);
FiniteInstance instance_from_json(const Json& j);

Json attraction_report_to_json(const AttractionReport& rep);
Json invariance_report_to_json(const InvarianceReport& rep);
Json cocycle_violations_to_json(const std::vector<CocycleViolation>& violations);

}  // namespace attlab
