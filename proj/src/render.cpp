#include "toyfriend/render.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace toyfriend {

std::string register_display_name(RegisterId reg, const std::vector<std::string>& qubit_names) {
  std::string base = reg.qubit < qubit_names.size() ? qubit_names[reg.qubit]
                                                    : "q" + std::to_string(reg.qubit);
  if (reg.kind == RegisterKind::Primed) {
    base += "'";
  }
  return base;
}

void render_distribution_table(std::ostream& os, const EpistemicState& state,
                               const std::vector<std::string>& qubit_names) {
  std::vector<std::string> headers;
  std::size_t width = 1;
  for (RegisterId reg : state.registers()) {
    headers.push_back(register_display_name(reg, qubit_names));
    width = std::max(width, headers.back().size());
  }
  os << " ";
  for (const std::string& header : headers) {
    os << " " << std::setw(static_cast<int>(width)) << header;
  }
  os << "   p\n";
  for (const auto& [ontic, weight] : state.weights()) {
    os << " ";
    for (const auto& [reg, bit] : ontic.bits()) {
      os << " " << std::setw(static_cast<int>(width)) << (bit ? "1" : "0");
    }
    os << "   " << weight << "\n";
  }
}

void render_statevector(std::ostream& os, const StateVector& state) {
  os << "  oracle:";
  bool any = false;
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    const auto amp = state.amplitude(i);
    if (std::abs(amp) < 1e-9) {
      continue;
    }
    os << "  |" << state.basis_label(i) << "> " << std::setprecision(6) << amp.real();
    if (std::abs(amp.imag()) >= 1e-9) {
      os << (amp.imag() < 0 ? " - " : " + ") << std::abs(amp.imag()) << "i";
    }
    any = true;
  }
  if (!any) {
    os << " (zero vector)";
  }
  os << "\n";
}

void render_outcome_distribution(std::ostream& os, const OutcomeDistribution& distribution) {
  bool first = true;
  for (const auto& [label, probability] : distribution) {
    os << (first ? "" : "  ") << label << ": " << probability;
    first = false;
  }
}

void render_step(std::ostream& os, const StepSnapshot& step,
                 const std::vector<std::string>& qubit_names) {
  os << "== " << step.label << " ==\n";
  if (!step.note.empty()) {
    os << "  (" << step.note << ")\n";
  }
  for (const auto& [agent, state] : step.agent_states) {
    os << "  " << agent << ":\n";
    render_distribution_table(os, state, qubit_names);
  }
  if (step.oracle_state) {
    render_statevector(os, *step.oracle_state);
  }
}

void render_report(std::ostream& os, const ProtocolReport& report) {
  for (const StepSnapshot& step : report.steps) {
    render_step(os, step, report.qubit_names);
    os << "\n";
  }
  os << "predictions:\n";
  for (const Prediction& prediction : report.predictions) {
    os << "  " << std::setw(16) << std::left << prediction.agent << std::right << " "
       << prediction.measurement << "   ";
    render_outcome_distribution(os, prediction.distribution);
    os << "\n";
  }
  os << "\nverdicts:\n";
  std::size_t passed = 0;
  for (const Verdict& verdict : report.verdicts) {
    os << "  [" << (verdict.passed ? "PASS" : "FAIL") << "] " << verdict.name << ": "
       << verdict.detail << "\n";
    if (verdict.passed) {
      ++passed;
    }
  }
  const std::string total = std::to_string(report.verdicts.size());
  if (passed == report.verdicts.size()) {
    os << "ALL CHECKS PASSED (" << total << "/" << total << ")\n";
  } else {
    os << "CHECKS FAILED (" << passed << "/" << total << ")\n";
  }
}

nlohmann::json rational_to_json(const Rational& value) {
  return {{"num", value.numerator_i64()}, {"den", value.denominator_i64()}};
}

nlohmann::json state_to_json(const EpistemicState& state,
                             const std::vector<std::string>& qubit_names) {
  nlohmann::json registers = nlohmann::json::array();
  for (RegisterId reg : state.registers()) {
    registers.push_back(register_display_name(reg, qubit_names));
  }
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& [ontic, weight] : state.weights()) {
    nlohmann::json entry = rational_to_json(weight);
    entry["state"] = ontic.bitstring();
    weights.push_back(std::move(entry));
  }
  return {{"registers", std::move(registers)}, {"weights", std::move(weights)}};
}

nlohmann::json distribution_to_json(const OutcomeDistribution& distribution) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [label, probability] : distribution) {
    out[label] = rational_to_json(probability);
  }
  return out;
}

namespace {

nlohmann::json statevector_to_json(const StateVector& state) {
  nlohmann::json amplitudes = nlohmann::json::array();
  for (const auto& amp : state.amplitudes()) {
    amplitudes.push_back({amp.real(), amp.imag()});
  }
  return {{"qubits", state.qubit_count()}, {"amplitudes", std::move(amplitudes)}};
}

}  // namespace

nlohmann::json report_to_json(const ProtocolReport& report) {
  nlohmann::json steps = nlohmann::json::array();
  for (const StepSnapshot& step : report.steps) {
    nlohmann::json agents = nlohmann::json::object();
    for (const auto& [agent, state] : step.agent_states) {
      agents[agent] = state_to_json(state, report.qubit_names);
    }
    nlohmann::json entry = {{"label", step.label}, {"agents", std::move(agents)}};
    if (!step.note.empty()) {
      entry["note"] = step.note;
    }
    if (step.oracle_state) {
      entry["oracle"] = statevector_to_json(*step.oracle_state);
    }
    steps.push_back(std::move(entry));
  }
  nlohmann::json predictions = nlohmann::json::array();
  for (const Prediction& prediction : report.predictions) {
    predictions.push_back({{"agent", prediction.agent},
                           {"measurement", prediction.measurement},
                           {"distribution", distribution_to_json(prediction.distribution)}});
  }
  nlohmann::json verdicts = nlohmann::json::array();
  for (const Verdict& verdict : report.verdicts) {
    verdicts.push_back(
        {{"name", verdict.name}, {"passed", verdict.passed}, {"detail", verdict.detail}});
  }
  return {{"qubit_names", report.qubit_names},
          {"steps", std::move(steps)},
          {"predictions", std::move(predictions)},
          {"verdicts", std::move(verdicts)},
          {"all_passed", report.all_passed()}};
}

}  // namespace toyfriend
