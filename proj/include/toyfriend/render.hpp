#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "toyfriend/scenario.hpp"

namespace toyfriend {

// "S" / "S'" when a display name is available for the qubit, else "q0" / "q0'".
std::string register_display_name(RegisterId reg, const std::vector<std::string>& qubit_names);

void render_distribution_table(std::ostream& os, const EpistemicState& state,
                               const std::vector<std::string>& qubit_names);
void render_statevector(std::ostream& os, const StateVector& state);
void render_outcome_distribution(std::ostream& os, const OutcomeDistribution& distribution);
void render_step(std::ostream& os, const StepSnapshot& step,
                 const std::vector<std::string>& qubit_names);
void render_report(std::ostream& os, const ProtocolReport& report);

nlohmann::json rational_to_json(const Rational& value);
nlohmann::json state_to_json(const EpistemicState& state,
                             const std::vector<std::string>& qubit_names);
nlohmann::json distribution_to_json(const OutcomeDistribution& distribution);
nlohmann::json report_to_json(const ProtocolReport& report);

}  // namespace toyfriend
