#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toyfriend/agents.hpp"
#include "toyfriend/statevector.hpp"

namespace toyfriend {

struct StepSnapshot {
  std::string label;
  std::vector<std::pair<std::string, EpistemicState>> agent_states;
  std::optional<StateVector> oracle_state;
  std::string note;
};

struct Verdict {
  std::string name;
  bool passed = false;
  std::string detail;  // the compared values
};

struct Prediction {
  std::string agent;
  std::string measurement;  // DSL form of the measured gate
  OutcomeDistribution distribution;
};

struct ProtocolReport {
  std::vector<std::string> qubit_names;
  std::vector<StepSnapshot> steps;
  std::vector<Prediction> predictions;
  std::vector<Verdict> verdicts;

  bool all_passed() const;
  const StepSnapshot* find_step(std::string_view label) const;
};

// The two-qubit protocol: prepare S and the friend's pointer F in 0, Hadamard
// on S, the measurement interaction as a cnot S -> F, then Wigner's Bell
// measurement of the pair.
QuantumCircuit protocol_circuit();

// Deterministic end-to-end run. Steps carry stable labels (eq2_prep,
// eq4_post_hadamard, eq7_pre_interaction, eq5_friend_branch_0,
// eq6_friend_branch_1, eq8_wigner_dynamical, eq9_outcome_average,
// eq10_post_bell_reversal, post_eq10_friend_branch_0/1); verdicts carry the
// nine named cross-checks of the run.
ProtocolReport run_wigner_friend();

// Exact toy-model distribution of a circuit's terminal measurement: Bell
// labels for a bellmeas, concatenated bits (in read order) for readouts.
OutcomeDistribution simulate_toy(const QuantumCircuit& circuit);

// Born-rule distribution of the same terminal measurement.
std::map<std::string, double> simulate_quantum(const QuantumCircuit& circuit);

struct ComparisonRecord {
  QuantumCircuit circuit;
  OutcomeDistribution toy_distribution;
  std::map<std::string, double> born_distribution;
  bool match = false;
  double max_discrepancy = 0.0;
};

bool distributions_match(const OutcomeDistribution& toy,
                         const std::map<std::string, double>& born, double tolerance,
                         double* max_discrepancy = nullptr);

ComparisonRecord compare_circuit(const QuantumCircuit& circuit);

// Reproducible sweep over random circuits from the supported gate set with a
// terminal readout of every qubit. max_qubits must be in [1,3], max_depth in
// [0,8]. Mismatches are recorded, never assumed absent.
std::vector<ComparisonRecord> compare_random_circuits(std::uint64_t seed, std::size_t count,
                                                      std::uint32_t max_qubits,
                                                      std::uint32_t max_depth);

}  // namespace toyfriend
