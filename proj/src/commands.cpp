#include "toyfriend/commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "toyfriend/dsl.hpp"
#include "toyfriend/render.hpp"
#include "toyfriend/scenario.hpp"

namespace toyfriend {

namespace {

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: file not found: " << path << "\n";
    return std::nullopt;
  }
  std::ostringstream content;
  content << in.rdbuf();
  if (in.bad()) {
    err << "error: failed to read " << path << "\n";
    return std::nullopt;
  }
  return content.str();
}

std::optional<QuantumCircuit> load_circuit(const std::string& path, std::ostream& err) {
  auto text = read_file(path, err);
  if (!text) {
    return std::nullopt;
  }
  try {
    return parse_circuit(*text);
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void render_born(std::ostream& os, const std::map<std::string, double>& distribution) {
  bool first = true;
  for (const auto& [label, p] : distribution) {
    os << (first ? "" : "  ") << label << ": " << std::setprecision(12) << p;
    first = false;
  }
}

}  // namespace

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  if (options.format != "human" && options.format != "json") {
    err << "error: unknown format '" << options.format << "' (expected human or json)\n";
    return 2;
  }
  const ProtocolReport report = run_wigner_friend();

  if (options.step) {
    const StepSnapshot* match = report.find_step(*options.step);
    if (match == nullptr) {
      // Accept a unique label prefix, e.g. "eq8".
      for (const StepSnapshot& step : report.steps) {
        if (step.label.starts_with(*options.step)) {
          if (match != nullptr) {
            err << "error: step prefix '" << *options.step << "' is ambiguous\n";
            return 2;
          }
          match = &step;
        }
      }
    }
    if (match == nullptr) {
      err << "error: no step labelled '" << *options.step << "'\n";
      return 2;
    }
    if (options.format == "json") {
      nlohmann::json report_json = report_to_json(report);
      for (const auto& step : report_json["steps"]) {
        if (step["label"] == match->label) {
          out << step.dump(2) << "\n";
          break;
        }
      }
    } else {
      render_step(out, *match, report.qubit_names);
    }
    return report.all_passed() ? 0 : 1;
  }

  if (options.format == "json") {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    out << "Wigner's friend protocol: toy model with statevector oracle\n\n";
    render_report(out, report);
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  if (options.model != "toy" && options.model != "quantum" && options.model != "both") {
    err << "error: unknown model '" << options.model << "' (expected toy, quantum, or both)\n";
    return 2;
  }
  auto circuit = load_circuit(options.file, err);
  if (!circuit) {
    return 2;
  }

  try {
    std::optional<OutcomeDistribution> toy;
    std::optional<std::map<std::string, double>> born;
    if (options.model == "toy" || options.model == "both") {
      toy = simulate_toy(*circuit);
      out << "toy:      ";
      render_outcome_distribution(out, *toy);
      out << "\n";
    }
    if (options.model == "quantum" || options.model == "both") {
      born = simulate_quantum(*circuit);
      out << "quantum:  ";
      render_born(out, *born);
      out << "\n";
    }
    if (toy && born) {
      double discrepancy = 0.0;
      const bool match = distributions_match(*toy, *born, kOracleTolerance, &discrepancy);
      out << "match:    " << (match ? "yes" : "no") << "  (max discrepancy "
          << std::setprecision(3) << discrepancy << ")\n";
      if (options.require_match && !match) {
        return 1;
      }
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << options.file << ": " << e.what() << "\n";
    return 2;
  }
}

int cmd_compare(const CompareOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<ComparisonRecord> records;
  try {
    records = compare_random_circuits(options.seed, options.count, options.qubits, options.depth);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (options.include_file) {
    auto circuit = load_circuit(*options.include_file, err);
    if (!circuit) {
      return 2;
    }
    try {
      records.push_back(compare_circuit(*circuit));
    } catch (const std::exception& e) {
      err << "error: " << *options.include_file << ": " << e.what() << "\n";
      return 2;
    }
  }

  std::size_t matched = 0;
  const ComparisonRecord* first_mismatch = nullptr;
  for (const ComparisonRecord& record : records) {
    if (record.match) {
      ++matched;
    } else if (first_mismatch == nullptr) {
      first_mismatch = &record;
    }
  }
  out << "matched " << matched << "/" << records.size() << "\n";
  if (first_mismatch != nullptr) {
    out << "first mismatching circuit (max discrepancy " << std::setprecision(6)
        << first_mismatch->max_discrepancy << "):\n";
    out << render_circuit(first_mismatch->circuit);
    out << "toy:      ";
    render_outcome_distribution(out, first_mismatch->toy_distribution);
    out << "\nquantum:  ";
    render_born(out, first_mismatch->born_distribution);
    out << "\n";
  }
  return 0;
}

}  // namespace toyfriend
