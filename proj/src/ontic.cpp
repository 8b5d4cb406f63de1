#include "toyfriend/ontic.hpp"

#include <algorithm>
#include <sstream>

namespace toyfriend {

std::string RegisterId::str() const {
  std::string s = "q" + std::to_string(qubit);
  if (kind == RegisterKind::Primed) {
    s += "'";
  }
  return s;
}

bool OnticState::bit(RegisterId reg) const {
  auto it = bits_.find(reg);
  if (it == bits_.end()) {
    throw std::out_of_range("ontic state has no register " + reg.str());
  }
  return it->second;
}

OnticState OnticState::with_bit(RegisterId reg, bool value) const {
  auto copy = bits_;
  copy[reg] = value;
  return OnticState(std::move(copy));
}

OnticState OnticState::restricted_to(std::span<const RegisterId> keep) const {
  std::map<RegisterId, bool> out;
  for (RegisterId reg : keep) {
    out.emplace(reg, bit(reg));
  }
  return OnticState(std::move(out));
}

OnticState OnticState::merged(const OnticState& a, const OnticState& b) {
  auto out = a.bits_;
  for (const auto& [reg, value] : b.bits_) {
    if (!out.emplace(reg, value).second) {
      throw std::invalid_argument("merging ontic states with shared register " + reg.str());
    }
  }
  return OnticState(std::move(out));
}

std::string OnticState::bitstring() const {
  std::string s;
  s.reserve(bits_.size());
  for (const auto& [reg, value] : bits_) {
    s.push_back(value ? '1' : '0');
  }
  return s;
}

ToyCnot::ToyCnot(RegisterId control_reg, RegisterId target_reg)
    : control(control_reg), target(target_reg) {
  if (control == target) {
    throw std::invalid_argument("ToyCnot control and target must differ: " + control.str());
  }
}

std::string ToyCnot::str() const {
  return "cnot " + control.str() + " -> " + target.str();
}

namespace {

std::vector<RegisterId> sorted_unique(std::vector<RegisterId> registers) {
  std::sort(registers.begin(), registers.end());
  if (std::adjacent_find(registers.begin(), registers.end()) != registers.end()) {
    throw std::invalid_argument("duplicate register in register set");
  }
  return registers;
}

void require_declared(const EpistemicState& s, RegisterId reg, const char* what) {
  if (!s.has_register(reg)) {
    throw std::out_of_range(std::string(what) + ": register " + reg.str() + " not declared");
  }
}

}  // namespace

EpistemicState EpistemicState::point_mass(OnticState state) {
  std::vector<RegisterId> registers;
  registers.reserve(state.size());
  for (const auto& [reg, value] : state.bits()) {
    registers.push_back(reg);
  }
  std::map<OnticState, Rational> weights;
  weights.emplace(std::move(state), Rational(1));
  return EpistemicState(std::move(registers), std::move(weights));
}

EpistemicState EpistemicState::uniform(std::vector<RegisterId> registers) {
  registers = sorted_unique(std::move(registers));
  const std::size_t n = registers.size();
  if (n >= 63) {
    throw std::invalid_argument("uniform distribution over too many registers");
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  Rational each = Rational(1) / Rational(static_cast<long>(count));
  std::map<OnticState, Rational> weights;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::map<RegisterId, bool> bits;
    for (std::size_t i = 0; i < n; ++i) {
      bits.emplace(registers[i], (mask >> i) & 1);
    }
    weights.emplace(OnticState(std::move(bits)), each);
  }
  return EpistemicState(std::move(registers), std::move(weights));
}

EpistemicState EpistemicState::from_weights(std::vector<RegisterId> registers,
                                            std::map<OnticState, Rational> weights) {
  registers = sorted_unique(std::move(registers));
  Rational total;
  for (auto it = weights.begin(); it != weights.end();) {
    const auto& [state, weight] = *it;
    if (weight.is_negative()) {
      throw std::invalid_argument("negative weight " + weight.str() + " on state " + state.bitstring());
    }
    if (weight.is_zero()) {
      it = weights.erase(it);
      continue;
    }
    if (state.size() != registers.size()) {
      throw std::invalid_argument("ontic state " + state.bitstring() + " does not cover the declared registers");
    }
    for (RegisterId reg : registers) {
      if (!state.has(reg)) {
        throw std::invalid_argument("ontic state missing declared register " + reg.str());
      }
    }
    total += weight;
    ++it;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("weights sum to " + total.str() + ", expected exactly 1");
  }
  return EpistemicState(std::move(registers), std::move(weights));
}

Rational EpistemicState::weight_of(const OnticState& state) const {
  auto it = weights_.find(state);
  return it == weights_.end() ? Rational(0) : it->second;
}

bool EpistemicState::has_register(RegisterId reg) const {
  return std::binary_search(registers_.begin(), registers_.end(), reg);
}

Rational EpistemicState::total_weight() const {
  Rational total;
  for (const auto& [state, weight] : weights_) {
    total += weight;
  }
  return total;
}

std::string EpistemicState::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [state, weight] : weights_) {
    if (!first) {
      os << ", ";
    }
    first = false;
    os << state.bitstring() << ": " << weight;
  }
  os << "}";
  return os.str();
}

EpistemicState prepare_computational(std::uint32_t qubit, int bit) {
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("preparation bit must be 0 or 1, got " + std::to_string(bit));
  }
  const RegisterId value_reg = RegisterId::unprimed(qubit);
  const RegisterId hidden_reg = RegisterId::primed(qubit);
  std::map<OnticState, Rational> weights;
  for (bool hidden : {false, true}) {
    OnticState state(std::map<RegisterId, bool>{{value_reg, bit == 1}, {hidden_reg, hidden}});
    weights.emplace(std::move(state), Rational(1, 2));
  }
  return EpistemicState::from_weights({value_reg, hidden_reg}, std::move(weights));
}

EpistemicState tensor(const EpistemicState& a, const EpistemicState& b) {
  for (RegisterId reg : b.registers()) {
    if (a.has_register(reg)) {
      throw std::invalid_argument("tensor of overlapping register sets: " + reg.str());
    }
  }
  std::vector<RegisterId> registers = a.registers();
  registers.insert(registers.end(), b.registers().begin(), b.registers().end());
  std::map<OnticState, Rational> weights;
  for (const auto& [state_a, weight_a] : a.weights()) {
    for (const auto& [state_b, weight_b] : b.weights()) {
      weights.emplace(OnticState::merged(state_a, state_b), weight_a * weight_b);
    }
  }
  return EpistemicState::from_weights(std::move(registers), std::move(weights));
}

EpistemicState apply_cnot(const EpistemicState& s, const ToyCnot& gate) {
  require_declared(s, gate.control, "apply_cnot");
  require_declared(s, gate.target, "apply_cnot");
  std::map<OnticState, Rational> weights;
  for (const auto& [state, weight] : s.weights()) {
    OnticState image = state.bit(gate.control)
                           ? state.with_bit(gate.target, !state.bit(gate.target))
                           : state;
    weights[std::move(image)] += weight;
  }
  return EpistemicState::from_weights(s.registers(), std::move(weights));
}

EpistemicState apply_toy_circuit(const EpistemicState& s, std::span<const ToyCnot> ops) {
  EpistemicState out = s;
  for (const ToyCnot& gate : ops) {
    out = apply_cnot(out, gate);
  }
  return out;
}

EpistemicState marginalize(const EpistemicState& s, std::vector<RegisterId> keep) {
  keep = sorted_unique(std::move(keep));
  for (RegisterId reg : keep) {
    require_declared(s, reg, "marginalize");
  }
  std::map<OnticState, Rational> weights;
  for (const auto& [state, weight] : s.weights()) {
    weights[state.restricted_to(keep)] += weight;
  }
  return EpistemicState::from_weights(std::move(keep), std::move(weights));
}

ConditionResult condition(const EpistemicState& s, const std::map<RegisterId, bool>& assignments) {
  if (assignments.empty()) {
    throw std::invalid_argument("condition requires at least one assignment");
  }
  for (const auto& [reg, value] : assignments) {
    require_declared(s, reg, "condition");
  }
  auto matches = [&](const OnticState& state) {
    for (const auto& [reg, value] : assignments) {
      if (state.bit(reg) != value) {
        return false;
      }
    }
    return true;
  };
  Rational event_probability;
  for (const auto& [state, weight] : s.weights()) {
    if (matches(state)) {
      event_probability += weight;
    }
  }
  if (event_probability.is_zero()) {
    std::string event;
    for (const auto& [reg, value] : assignments) {
      event += (event.empty() ? "" : ", ") + reg.str() + "=" + (value ? "1" : "0");
    }
    throw ImpossibleEventError("conditioning event has probability zero: " + event);
  }
  std::map<OnticState, Rational> weights;
  for (const auto& [state, weight] : s.weights()) {
    if (matches(state)) {
      weights.emplace(state, weight / event_probability);
    }
  }
  return {EpistemicState::from_weights(s.registers(), std::move(weights)), event_probability};
}

EpistemicState reset_uniform(const EpistemicState& s, const std::vector<RegisterId>& vars) {
  for (RegisterId reg : vars) {
    require_declared(s, reg, "reset_uniform");
  }
  std::vector<RegisterId> kept;
  for (RegisterId reg : s.registers()) {
    if (std::find(vars.begin(), vars.end(), reg) == vars.end()) {
      kept.push_back(reg);
    }
  }
  return tensor(marginalize(s, std::move(kept)), EpistemicState::uniform(vars));
}

EpistemicState mixture(const std::vector<std::pair<Rational, EpistemicState>>& components) {
  if (components.empty()) {
    throw std::invalid_argument("mixture of zero components");
  }
  const auto& registers = components.front().second.registers();
  std::map<OnticState, Rational> weights;
  for (const auto& [probability, component] : components) {
    if (component.registers() != registers) {
      throw std::invalid_argument("mixture components over different register sets");
    }
    for (const auto& [state, weight] : component.weights()) {
      weights[state] += probability * weight;
    }
  }
  return EpistemicState::from_weights(registers, std::move(weights));
}

}  // namespace toyfriend
