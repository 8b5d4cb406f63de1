#include "toyfriend/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace toyfriend {

namespace {

constexpr std::uint32_t kSystem = 0;
constexpr std::uint32_t kFriendPointer = 1;

// Reference distributions of the protocol, entered as literal weight tables
// over (S, S', F, F') bits in canonical register order.
using Tuple4 = std::array<bool, 4>;

OnticState ontic4(const Tuple4& bits) {
  return OnticState({{RegisterId::unprimed(kSystem), bits[0]},
                     {RegisterId::primed(kSystem), bits[1]},
                     {RegisterId::unprimed(kFriendPointer), bits[2]},
                     {RegisterId::primed(kFriendPointer), bits[3]}});
}

EpistemicState state4(const std::vector<Tuple4>& support, const Rational& each) {
  std::map<OnticState, Rational> weights;
  for (const Tuple4& bits : support) {
    weights.emplace(ontic4(bits), each);
  }
  return EpistemicState::from_weights({RegisterId::unprimed(kSystem), RegisterId::primed(kSystem),
                                       RegisterId::unprimed(kFriendPointer),
                                       RegisterId::primed(kFriendPointer)},
                                      std::move(weights));
}

EpistemicState state_single_qubit(const std::vector<std::pair<bool, bool>>& support,
                                  const Rational& each) {
  std::map<OnticState, Rational> weights;
  for (const auto& [value, hidden] : support) {
    weights.emplace(OnticState({{RegisterId::unprimed(kSystem), value},
                                {RegisterId::primed(kSystem), hidden}}),
                    each);
  }
  return EpistemicState::from_weights(
      {RegisterId::unprimed(kSystem), RegisterId::primed(kSystem)}, std::move(weights));
}

// S prepared in 0: S fixed, S' uniform.
EpistemicState eq2_state() {
  return state_single_qubit({{false, false}, {false, true}}, Rational(1, 2));
}

// S after the Hadamard: S and S' perfectly correlated.
EpistemicState eq4_state() {
  return state_single_qubit({{false, false}, {true, true}}, Rational(1, 2));
}

// Friend's collapsed descriptions per outcome.
EpistemicState eq5_state() {
  return state4({{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 1, 0, 1}}, Rational(1, 4));
}
EpistemicState eq6_state() {
  return state4({{1, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 1, 0}, {1, 1, 1, 1}}, Rational(1, 4));
}

// Joint state just before the measurement interaction.
EpistemicState eq7_state() {
  return state4({{0, 0, 0, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}, {1, 1, 0, 1}}, Rational(1, 4));
}

// Wigner's dynamical description after the interaction.
EpistemicState eq8_state() {
  return state4({{0, 0, 0, 0}, {0, 1, 0, 1}, {1, 1, 1, 0}, {1, 0, 1, 1}}, Rational(1, 4));
}

// Outcome average of the friend's branches: S and F correlated, primed
// registers uniform and uncorrelated.
EpistemicState eq9_state() {
  return state4({{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 1, 0, 1},
                 {1, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 1, 0}, {1, 1, 1, 1}},
                Rational(1, 8));
}

// The initial product state, restored by the Bell-measurement reversal.
EpistemicState eq10_state() {
  return state4({{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 1, 0, 1}}, Rational(1, 4));
}

// The friend's branch states pushed through the three Bell CNOTs.
EpistemicState post_eq10_branch0_state() {
  return state4({{0, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 1}, {0, 0, 0, 1}}, Rational(1, 4));
}
EpistemicState post_eq10_branch1_state() {
  return state4({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}}, Rational(1, 4));
}

OutcomeDistribution bell_point_mass() {
  return {{"phi+", Rational(1)}};
}

OutcomeDistribution bell_even_phi() {
  return {{"phi+", Rational(1, 2)}, {"phi-", Rational(1, 2)}};
}

std::string branch_summary(const std::vector<OutcomeBranch>& branches) {
  std::ostringstream os;
  for (const auto& branch : branches) {
    os << "[" << branch.outcome << " p=" << branch.probability << " " << branch.view.state.str()
       << "]";
  }
  return os.str();
}

double born_lookup(const std::map<std::string, double>& distribution, const std::string& label) {
  auto it = distribution.find(label);
  return it == distribution.end() ? 0.0 : it->second;
}

}  // namespace

bool ProtocolReport::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.passed; });
}

const StepSnapshot* ProtocolReport::find_step(std::string_view label) const {
  for (const StepSnapshot& step : steps) {
    if (step.label == label) {
      return &step;
    }
  }
  return nullptr;
}

QuantumCircuit protocol_circuit() {
  return QuantumCircuit{2,
                        {QuantumGate::prep(kSystem, 0), QuantumGate::prep(kFriendPointer, 0),
                         QuantumGate::hadamard(kSystem), QuantumGate::cnot(kSystem, kFriendPointer),
                         QuantumGate::bell_measure(kSystem, kFriendPointer)}};
}

ProtocolReport run_wigner_friend() {
  ProtocolReport report;
  report.qubit_names = {"S", "F"};

  const CompiledStep hadamard = compile_gate(QuantumGate::hadamard(kSystem));
  const CompiledStep interaction = compile_gate(QuantumGate::cnot(kSystem, kFriendPointer));
  const CompiledStep bell = compile_bell_measurement(kSystem, kFriendPointer);
  const std::string bell_name = bell.source.str();

  // Shared description up to the measurement interaction.
  const EpistemicState prepared = prepare_computational(kSystem, 0);
  const EpistemicState plus = apply_toy_circuit(prepared, hadamard.toy_ops);
  const EpistemicState pre_interaction = tensor(plus, prepare_computational(kFriendPointer, 0));

  // Oracle counterparts.
  const StateVector oracle_zero = simulate({1, {QuantumGate::prep(kSystem, 0)}});
  const StateVector oracle_plus =
      simulate({1, {QuantumGate::prep(kSystem, 0), QuantumGate::hadamard(kSystem)}});
  const QuantumCircuit unitary_prefix{
      2,
      {QuantumGate::prep(kSystem, 0), QuantumGate::prep(kFriendPointer, 0),
       QuantumGate::hadamard(kSystem)}};
  const StateVector oracle_pre = simulate(unitary_prefix);
  QuantumCircuit entangling = unitary_prefix;
  entangling.gates.push_back(QuantumGate::cnot(kSystem, kFriendPointer));
  const StateVector oracle_entangled = simulate(entangling);

  report.steps.push_back({"eq2_prep",
                          {{"friend", prepared}, {"wigner", prepared}},
                          oracle_zero,
                          "system S prepared in 0; hidden S' uniform"});
  report.steps.push_back({"eq4_post_hadamard",
                          {{"friend", plus}, {"wigner", plus}},
                          oracle_plus,
                          "S and S' now perfectly correlated"});
  report.steps.push_back({"eq7_pre_interaction",
                          {{"friend", pre_interaction}, {"wigner", pre_interaction}},
                          oracle_pre,
                          "friend's pointer F in the ready state"});

  // The friend measures and collapses; Wigner tracks the interaction.
  const AgentView friend_before{"friend", pre_interaction, false};
  const std::vector<OutcomeBranch> friend_branches =
      collapse_measure(friend_before, kSystem, kFriendPointer);
  const AgentView wigner_before{"wigner", pre_interaction, true};
  const AgentView wigner_after = dynamical_measure(wigner_before, interaction);
  const EpistemicState averaged = outcome_average(friend_branches);

  for (const OutcomeBranch& branch : friend_branches) {
    const bool one = branch.outcome == "1";
    report.steps.push_back({one ? "eq6_friend_branch_1" : "eq5_friend_branch_0",
                            {{"friend", branch.view.state}},
                            collapse_oracle(oracle_entangled, kSystem, one),
                            "collapse branch, probability " + branch.probability.str()});
  }
  report.steps.push_back({"eq8_wigner_dynamical",
                          {{"wigner", wigner_after.state}},
                          oracle_entangled,
                          "S F and S' F' correlations kept"});
  report.steps.push_back({"eq9_outcome_average",
                          {{"friend", averaged}},
                          std::nullopt,
                          "outcome average of the friend's branches; proper mixture, no pure "
                          "statevector counterpart"});

  // Wigner's Bell measurement reverses the dynamics.
  const EpistemicState reversed = apply_toy_circuit(wigner_after.state, bell.toy_ops);
  StateVector oracle_uncomputed = oracle_entangled;
  oracle_uncomputed.apply_cnot(kSystem, kFriendPointer);
  oracle_uncomputed.apply_hadamard(kSystem);
  report.steps.push_back({"eq10_post_bell_reversal",
                          {{"wigner", reversed}, {"friend", reversed}},
                          oracle_uncomputed,
                          "friend's memory of her measurement is erased; her reconstructed view "
                          "is the ready state again"});

  std::vector<EpistemicState> post_bell_branches;
  for (const OutcomeBranch& branch : friend_branches) {
    const bool one = branch.outcome == "1";
    post_bell_branches.push_back(apply_toy_circuit(branch.view.state, bell.toy_ops));
    StateVector oracle_branch = collapse_oracle(oracle_entangled, kSystem, one);
    oracle_branch.apply_cnot(kSystem, kFriendPointer);
    oracle_branch.apply_hadamard(kSystem);
    report.steps.push_back({one ? "post_eq10_friend_branch_1" : "post_eq10_friend_branch_0",
                            {{"friend", post_bell_branches.back()}},
                            oracle_branch,
                            "friend's branch pushed through the three Bell CNOTs"});
  }

  // Predictions for the terminal Bell measurement.
  const OutcomeDistribution wigner_prediction = predict(wigner_after, bell);
  const OutcomeDistribution friend_prediction_0 = predict(friend_branches.at(0).view, bell);
  const OutcomeDistribution friend_prediction_1 = predict(friend_branches.at(1).view, bell);
  report.predictions.push_back({"wigner", bell_name, wigner_prediction});
  report.predictions.push_back({"friend_branch_0", bell_name, friend_prediction_0});
  report.predictions.push_back({"friend_branch_1", bell_name, friend_prediction_1});

  // Verdicts.
  auto verdict = [&](std::string name, bool passed, std::string detail) {
    report.verdicts.push_back({std::move(name), passed, std::move(detail)});
  };

  verdict("hadamard_fidelity", prepared == eq2_state() && plus == eq4_state(),
          "post-Hadamard state " + plus.str() + " vs expected " + eq4_state().str());

  const bool collapse_ok = friend_branches.size() == 2 &&
                           friend_branches[0].outcome == "0" &&
                           friend_branches[0].probability == Rational(1, 2) &&
                           friend_branches[0].view.state == eq5_state() &&
                           friend_branches[1].outcome == "1" &&
                           friend_branches[1].probability == Rational(1, 2) &&
                           friend_branches[1].view.state == eq6_state();
  verdict("friend_collapse", collapse_ok, "branches " + branch_summary(friend_branches));

  verdict("wigner_dynamical_account",
          pre_interaction == eq7_state() && wigner_after.state == eq8_state(),
          "post-interaction state " + wigner_after.state.str() + " vs expected " +
              eq8_state().str());

  const std::vector<RegisterId> system_pair{RegisterId::unprimed(kSystem),
                                            RegisterId::primed(kSystem)};
  const std::vector<RegisterId> pointer_pair{RegisterId::unprimed(kFriendPointer),
                                             RegisterId::primed(kFriendPointer)};
  const bool averaging_gap =
      averaged == eq9_state() && !(averaged == wigner_after.state) &&
      marginalize(wigner_after.state, system_pair) == marginalize(averaged, system_pair) &&
      marginalize(wigner_after.state, pointer_pair) == marginalize(averaged, pointer_pair);
  verdict("averaging_gap", averaging_gap,
          "average " + averaged.str() + " vs dynamical " + wigner_after.state.str() +
              "; marginals on S,S' and F,F' coincide");

  verdict("wigner_certainty", wigner_prediction == bell_point_mass(),
          "predicted " + distribution_str(wigner_prediction) + " vs expected {phi+: 1}");

  const bool branches_disagree =
      friend_prediction_0 == bell_even_phi() && friend_prediction_1 == bell_even_phi();
  verdict("friend_branch_disagreement", branches_disagree,
          "branch 0 " + distribution_str(friend_prediction_0) + ", branch 1 " +
              distribution_str(friend_prediction_1) + " vs expected {phi+: 1/2, phi-: 1/2}");

  const bool reversal_ok =
      reversed == eq10_state() &&
      reversed == tensor(prepare_computational(kSystem, 0),
                         prepare_computational(kFriendPointer, 0)) &&
      post_bell_branches.at(0) == post_eq10_branch0_state() &&
      post_bell_branches.at(1) == post_eq10_branch1_state();
  verdict("reversal_restores_initial", reversal_ok,
          "post-Bell state " + reversed.str() + " vs initial product; branch images " +
              post_bell_branches.at(0).str() + " / " + post_bell_branches.at(1).str());

  const std::vector<OutcomeBranch> observed = observe_pointer(wigner_after, kFriendPointer);
  const bool coincidence =
      observed.size() == 2 && observed[0].probability == Rational(1, 2) &&
      observed[0].view.state == eq5_state() && observed[1].probability == Rational(1, 2) &&
      observed[1].view.state == eq6_state();
  verdict("wigner_observes_friend_coincidence", coincidence,
          "observation branches " + branch_summary(observed));

  // Toy predictions against the Born rule, at the oracle tolerance.
  const auto born_plus =
      born_probabilities(oracle_plus, std::vector<std::uint32_t>{kSystem});
  const auto born_entangled = born_probabilities(oracle_entangled, bell.source);
  const auto born_branch0 =
      born_probabilities(collapse_oracle(oracle_entangled, kSystem, false), bell.source);
  const auto born_branch1 =
      born_probabilities(collapse_oracle(oracle_entangled, kSystem, true), bell.source);
  auto close = [](const Rational& exact, double oracle_value) {
    return std::abs(exact.to_double() - oracle_value) <= kOracleTolerance;
  };
  const bool oracle_ok =
      close(friend_branches.at(0).probability, born_lookup(born_plus, "0")) &&
      close(friend_branches.at(1).probability, born_lookup(born_plus, "1")) &&
      close(wigner_prediction.at("phi+"), born_lookup(born_entangled, "phi+")) &&
      born_entangled.size() == 1 &&
      close(friend_prediction_0.at("phi+"), born_lookup(born_branch0, "phi+")) &&
      close(friend_prediction_0.at("phi-"), born_lookup(born_branch0, "phi-")) &&
      close(friend_prediction_1.at("phi+"), born_lookup(born_branch1, "phi+")) &&
      close(friend_prediction_1.at("phi-"), born_lookup(born_branch1, "phi-"));
  verdict("oracle_agreement", oracle_ok,
          "toy branch probabilities and Bell predictions match the Born rule within 1e-12");

  return report;
}

OutcomeDistribution simulate_toy(const QuantumCircuit& circuit) {
  const std::vector<CompiledStep> steps = compile_circuit(circuit);

  std::optional<EpistemicState> state;
  for (const CompiledStep& step : steps) {
    if (step.source.kind != GateKind::PrepComputational) {
      continue;
    }
    EpistemicState prep = prepare_computational(step.source.qubit_a, step.source.bit);
    state = state ? tensor(*state, prep) : prep;
  }
  if (!state) {
    throw std::invalid_argument("circuit prepares no qubits");
  }

  const CompiledStep* bell_step = nullptr;
  std::vector<RegisterId> read_registers;
  for (const CompiledStep& step : steps) {
    switch (step.source.kind) {
      case GateKind::Hadamard:
      case GateKind::Cnot:
        state = apply_toy_circuit(*state, step.toy_ops);
        break;
      case GateKind::ReadComputational:
        read_registers.push_back(step.readout_registers.at(0));
        break;
      case GateKind::BellMeasure:
        bell_step = &step;
        break;
      case GateKind::PrepComputational:
        break;
    }
  }

  if (bell_step != nullptr) {
    return predict(AgentView{"", *state, true}, *bell_step);
  }
  if (read_registers.empty()) {
    throw std::invalid_argument("circuit has no terminal measurement");
  }
  std::vector<RegisterId> kept = read_registers;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  EpistemicState readout = marginalize(*state, kept);
  OutcomeDistribution distribution;
  for (const auto& [ontic, weight] : readout.weights()) {
    std::string label;
    label.reserve(read_registers.size());
    for (RegisterId reg : read_registers) {  // label bits in read order
      label.push_back(ontic.bit(reg) ? '1' : '0');
    }
    distribution[label] += weight;
  }
  return distribution;
}

std::map<std::string, double> simulate_quantum(const QuantumCircuit& circuit) {
  circuit.validate();
  QuantumCircuit unitary{circuit.qubit_count, {}};
  std::optional<QuantumGate> bell;
  std::vector<std::uint32_t> read_qubits;
  for (const QuantumGate& gate : circuit.gates) {
    if (gate.kind == GateKind::ReadComputational) {
      read_qubits.push_back(gate.qubit_a);
    } else if (gate.kind == GateKind::BellMeasure) {
      bell = gate;
    } else {
      unitary.gates.push_back(gate);
    }
  }
  const StateVector final_state = simulate(unitary);
  if (bell) {
    return born_probabilities(final_state, *bell);
  }
  if (read_qubits.empty()) {
    throw std::invalid_argument("circuit has no terminal measurement");
  }
  return born_probabilities(final_state, read_qubits);
}

bool distributions_match(const OutcomeDistribution& toy,
                         const std::map<std::string, double>& born, double tolerance,
                         double* max_discrepancy) {
  double worst = 0.0;
  for (const auto& [label, weight] : toy) {
    worst = std::max(worst, std::abs(weight.to_double() - born_lookup(born, label)));
  }
  for (const auto& [label, p] : born) {
    if (!toy.contains(label)) {
      worst = std::max(worst, p);
    }
  }
  if (max_discrepancy != nullptr) {
    *max_discrepancy = worst;
  }
  return worst <= tolerance;
}

ComparisonRecord compare_circuit(const QuantumCircuit& circuit) {
  ComparisonRecord record;
  record.circuit = circuit;
  record.toy_distribution = simulate_toy(circuit);
  record.born_distribution = simulate_quantum(circuit);
  record.match = distributions_match(record.toy_distribution, record.born_distribution,
                                     kOracleTolerance, &record.max_discrepancy);
  return record;
}

std::vector<ComparisonRecord> compare_random_circuits(std::uint64_t seed, std::size_t count,
                                                      std::uint32_t max_qubits,
                                                      std::uint32_t max_depth) {
  if (max_qubits < 1 || max_qubits > 3) {
    throw std::invalid_argument("max_qubits must be in [1, 3]");
  }
  if (max_depth > 8) {
    throw std::invalid_argument("max_depth must be in [0, 8]");
  }
  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::uint64_t bound) { return static_cast<std::uint32_t>(rng() % bound); };

  std::vector<ComparisonRecord> records;
  records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t qubits = 1 + draw(max_qubits);
    QuantumCircuit circuit{qubits, {}};
    for (std::uint32_t q = 0; q < qubits; ++q) {
      circuit.gates.push_back(QuantumGate::prep(q, static_cast<int>(draw(2))));
    }
    const std::uint32_t depth = draw(max_depth + 1);
    for (std::uint32_t d = 0; d < depth; ++d) {
      if (qubits == 1 || draw(2) == 0) {
        circuit.gates.push_back(QuantumGate::hadamard(draw(qubits)));
      } else {
        const std::uint32_t control = draw(qubits);
        const std::uint32_t target = (control + 1 + draw(qubits - 1)) % qubits;
        circuit.gates.push_back(QuantumGate::cnot(control, target));
      }
    }
    for (std::uint32_t q = 0; q < qubits; ++q) {
      circuit.gates.push_back(QuantumGate::read(q));
    }
    records.push_back(compare_circuit(circuit));
  }
  return records;
}

}  // namespace toyfriend
