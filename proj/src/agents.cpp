#include "toyfriend/agents.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace toyfriend {

namespace {

// Marginal of one register as a pair (P(0), P(1)).
std::pair<Rational, Rational> bit_marginal(const EpistemicState& s, RegisterId reg) {
  Rational zero_weight;
  Rational one_weight;
  for (const auto& [state, weight] : s.weights()) {
    (state.bit(reg) ? one_weight : zero_weight) += weight;
  }
  return {zero_weight, one_weight};
}

// Rewrite a register that is deterministic on the support. Injective exactly
// because every support state carries the same current value.
EpistemicState overwrite_deterministic_bit(const EpistemicState& s, RegisterId reg, bool value) {
  std::map<OnticState, Rational> weights;
  for (const auto& [state, weight] : s.weights()) {
    if (!weights.emplace(state.with_bit(reg, value), weight).second) {
      throw std::logic_error("overwrite of non-deterministic register " + reg.str());
    }
  }
  return EpistemicState::from_weights(s.registers(), std::move(weights));
}

void require_qubit(const EpistemicState& s, std::uint32_t qubit, const char* what) {
  if (!s.has_register(RegisterId::unprimed(qubit)) || !s.has_register(RegisterId::primed(qubit))) {
    throw std::invalid_argument(std::string(what) + ": view does not cover qubit q" +
                                std::to_string(qubit));
  }
}

}  // namespace

std::vector<OutcomeBranch> collapse_measure(const AgentView& v, std::uint32_t system_qubit,
                                            std::uint32_t pointer_qubit) {
  require_qubit(v.state, system_qubit, "collapse_measure");
  require_qubit(v.state, pointer_qubit, "collapse_measure");
  const RegisterId system = RegisterId::unprimed(system_qubit);
  const RegisterId system_hidden = RegisterId::primed(system_qubit);
  const RegisterId pointer = RegisterId::unprimed(pointer_qubit);
  const RegisterId pointer_hidden = RegisterId::primed(pointer_qubit);

  if (!bit_marginal(v.state, pointer).second.is_zero()) {
    throw std::invalid_argument("collapse_measure: pointer q" + std::to_string(pointer_qubit) +
                                " is not in the ready state");
  }

  std::vector<OutcomeBranch> branches;
  auto [system_zero, system_one] = bit_marginal(v.state, system);
  for (bool outcome : {false, true}) {
    if ((outcome ? system_one : system_zero).is_zero()) {
      continue;
    }
    auto conditioned = condition(v.state, {{system, outcome}});
    EpistemicState recorded = overwrite_deterministic_bit(conditioned.state, pointer, outcome);
    EpistemicState collapsed = reset_uniform(recorded, {system_hidden, pointer_hidden});
    branches.push_back({outcome ? "1" : "0", conditioned.probability,
                        AgentView{v.name, std::move(collapsed), v.tracks_measurement_dynamics}});
  }
  return branches;
}

AgentView dynamical_measure(const AgentView& v, const CompiledStep& interaction) {
  if (interaction.source.kind != GateKind::Cnot) {
    throw std::invalid_argument("dynamical_measure expects an interaction compiled from a cnot");
  }
  return {v.name, apply_toy_circuit(v.state, interaction.toy_ops), v.tracks_measurement_dynamics};
}

std::vector<OutcomeBranch> observe_pointer(const AgentView& v, std::uint32_t pointer_qubit) {
  require_qubit(v.state, pointer_qubit, "observe_pointer");
  const RegisterId pointer = RegisterId::unprimed(pointer_qubit);
  const RegisterId pointer_hidden = RegisterId::primed(pointer_qubit);

  auto [zero_weight, one_weight] = bit_marginal(v.state, pointer);
  std::vector<OutcomeBranch> branches;
  for (bool outcome : {false, true}) {
    if ((outcome ? one_weight : zero_weight).is_zero()) {
      continue;
    }
    auto conditioned = condition(v.state, {{pointer, outcome}});
    EpistemicState updated = reset_uniform(conditioned.state, {pointer_hidden});
    branches.push_back({outcome ? "1" : "0", conditioned.probability,
                        AgentView{v.name, std::move(updated), v.tracks_measurement_dynamics}});
  }
  return branches;
}

OutcomeDistribution predict(const AgentView& v, const CompiledStep& measurement) {
  if (!measurement.has_readout()) {
    throw std::invalid_argument("predict expects a measurement step with readouts");
  }
  EpistemicState pushed = apply_toy_circuit(v.state, measurement.toy_ops);
  EpistemicState readout = marginalize(pushed, measurement.readout_registers);
  OutcomeDistribution distribution;
  for (const auto& [state, weight] : readout.weights()) {
    distribution[measurement.outcome_label(state)] += weight;
  }
  return distribution;
}

EpistemicState outcome_average(const std::vector<OutcomeBranch>& branches) {
  std::vector<std::pair<Rational, EpistemicState>> components;
  components.reserve(branches.size());
  for (const OutcomeBranch& branch : branches) {
    components.emplace_back(branch.probability, branch.view.state);
  }
  return mixture(components);
}

std::vector<OnticState> sample_trajectory(const EpistemicState& initial,
                                          std::span<const ToyCnot> ops, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // 53 random bits give an exact dyadic target to walk the cumulative
  // weights with; comparisons stay in rational arithmetic.
  const Rational target(static_cast<long>(rng() >> 11), long{1} << 53);
  OnticState point = initial.weights().begin()->first;
  Rational cumulative;
  for (const auto& [state, weight] : initial.weights()) {
    cumulative += weight;
    if (target < cumulative) {
      point = state;
      break;
    }
  }

  std::vector<OnticState> trajectory;
  trajectory.reserve(ops.size() + 1);
  trajectory.push_back(point);
  for (const ToyCnot& op : ops) {
    if (point.bit(op.control)) {
      point = point.with_bit(op.target, !point.bit(op.target));
    }
    trajectory.push_back(point);
  }
  return trajectory;
}

std::string distribution_str(const OutcomeDistribution& distribution) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [label, probability] : distribution) {
    if (!first) {
      os << ", ";
    }
    first = false;
    os << label << ": " << probability;
  }
  os << "}";
  return os.str();
}

}  // namespace toyfriend
