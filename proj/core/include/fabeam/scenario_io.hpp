#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "fabeam/channel.hpp"

namespace fabeam {

// Versioned plain-text scenario record. Complex entries are written as
// re/im pairs, matrices row-major, doubles with round-trip precision.
void save_scenario(std::ostream& os, const Scenario& s);
Scenario load_scenario(std::istream& is);

void save_scenario_file(const std::string& path, const Scenario& s);
Scenario load_scenario_file(const std::string& path);

// key = value configuration text; '#' starts a comment; lists are
// comma-separated. Unknown keys are rejected so typos fail loudly.
ScenarioConfig parse_scenario_config(std::istream& is);
ScenarioConfig parse_scenario_config_file(const std::string& path);

// Low-level key/value reader shared with the experiment config.
std::map<std::string, std::string> read_key_values(std::istream& is);

}  // namespace fabeam
