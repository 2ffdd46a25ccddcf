#pragma once

#include <string>

#include <json.hpp>

#include "mdcsim/fleet_engine.hpp"

namespace mdcsim {

using Json = nlohmann::ordered_json;

/// Parse and fully validate a scenario file. Unknown keys are rejected,
/// missing required keys are reported with their path, and every default is
/// resolved so the result echoes back complete.
Scenario parse_scenario_file(const std::string& path);

/// Same, from an already-parsed document.
Scenario parse_scenario_json(const Json& doc);

/// Fully resolved scenario document: parse(echo(s)) == s.
Json echo_scenario(const Scenario& scenario);

/// Dotted parameter path ("sites[0].utility_outage_rate_per_year") to a JSON
/// pointer ("/sites/0/utility_outage_rate_per_year").
std::string param_path_to_pointer(const std::string& dotted_path);

}  // namespace mdcsim
