#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toyfriend/rational.hpp"

namespace toyfriend {

enum class RegisterKind : std::uint8_t { Unprimed = 0, Primed = 1 };

// One of the two binary registers carried by each toy qubit. The unprimed
// register holds the value a computational readout sees; the primed register
// is the hidden internal degree of freedom. Registers are totally ordered by
// (qubit, kind), which fixes the canonical bit ordering everywhere.
struct RegisterId {
  std::uint32_t qubit = 0;
  RegisterKind kind = RegisterKind::Unprimed;

  static constexpr RegisterId unprimed(std::uint32_t q) { return {q, RegisterKind::Unprimed}; }
  static constexpr RegisterId primed(std::uint32_t q) { return {q, RegisterKind::Primed}; }

  auto operator<=>(const RegisterId&) const = default;

  std::string str() const;  // "q0" or "q0'"
};

// A total bit assignment to a set of registers: one point of the ontic space.
class OnticState {
 public:
  OnticState() = default;
  explicit OnticState(std::map<RegisterId, bool> bits) : bits_(std::move(bits)) {}

  bool has(RegisterId reg) const { return bits_.contains(reg); }
  bool bit(RegisterId reg) const;

  // Copy with `reg` set to `value` (inserting it if absent).
  OnticState with_bit(RegisterId reg, bool value) const;
  OnticState restricted_to(std::span<const RegisterId> keep) const;
  static OnticState merged(const OnticState& a, const OnticState& b);

  const std::map<RegisterId, bool>& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }

  // Bits concatenated in canonical register order, e.g. "0101".
  std::string bitstring() const;

  auto operator<=>(const OnticState&) const = default;

 private:
  std::map<RegisterId, bool> bits_;
};

// CNOT on ontic bits: target ^= control. Always a bijection of the ontic
// space, so applying one never loses or merges probability weight.
struct ToyCnot {
  RegisterId control;
  RegisterId target;

  ToyCnot(RegisterId control_reg, RegisterId target_reg);

  bool operator==(const ToyCnot&) const = default;
  std::string str() const;  // "cnot q0' -> q0"
};

using ToyCircuit = std::vector<ToyCnot>;

// Conditioning on an event of probability zero.
struct ImpossibleEventError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact probability distribution over ontic states. Weights are nonzero
// rationals summing to exactly one; zero-weight states are never stored, so
// equality of distributions is structural map equality.
class EpistemicState {
 public:
  static EpistemicState point_mass(OnticState state);
  static EpistemicState uniform(std::vector<RegisterId> registers);
  static EpistemicState from_weights(std::vector<RegisterId> registers,
                                     std::map<OnticState, Rational> weights);

  const std::vector<RegisterId>& registers() const { return registers_; }
  const std::map<OnticState, Rational>& weights() const { return weights_; }

  Rational weight_of(const OnticState& state) const;
  std::size_t support_size() const { return weights_.size(); }
  bool has_register(RegisterId reg) const;
  Rational total_weight() const;

  // "{00: 1/2, 11: 1/2}" in canonical state order.
  std::string str() const;

  bool operator==(const EpistemicState&) const = default;

 private:
  EpistemicState(std::vector<RegisterId> registers, std::map<OnticState, Rational> weights)
      : registers_(std::move(registers)), weights_(std::move(weights)) {}

  std::vector<RegisterId> registers_;
  std::map<OnticState, Rational> weights_;
};

// Toy representation of a computational-basis preparation: the unprimed
// register is set to `bit`, the primed register is uniformly random.
EpistemicState prepare_computational(std::uint32_t qubit, int bit);

// Product distribution over disjoint register sets.
EpistemicState tensor(const EpistemicState& a, const EpistemicState& b);

// Push-forward through the gate's bijection. Preserves the weight multiset.
EpistemicState apply_cnot(const EpistemicState& s, const ToyCnot& gate);
EpistemicState apply_toy_circuit(const EpistemicState& s, std::span<const ToyCnot> ops);

// Sum out every register not in `keep`.
EpistemicState marginalize(const EpistemicState& s, std::vector<RegisterId> keep);

struct ConditionResult {
  EpistemicState state;    // renormalized conditional distribution
  Rational probability;    // prior probability of the conditioning event
};

// Bayesian update on a partial bit assignment. Throws ImpossibleEventError
// when the event has probability zero.
ConditionResult condition(const EpistemicState& s, const std::map<RegisterId, bool>& assignments);

// Maximum-entropy reset: discard all correlations with `vars` and replace
// their joint marginal by the uniform distribution.
EpistemicState reset_uniform(const EpistemicState& s, const std::vector<RegisterId>& vars);

// Convex combination of distributions over a common register set.
EpistemicState mixture(const std::vector<std::pair<Rational, EpistemicState>>& components);

}  // namespace toyfriend
