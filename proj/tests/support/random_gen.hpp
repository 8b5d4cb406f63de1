#pragma once

// Hand-rolled generators for the randomized property suite. Everything draws
// from a caller-owned mt19937_64 so runs are reproducible by seed.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "toyfriend/ontic.hpp"

namespace toyfriend::testing {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

inline std::vector<RegisterId> register_set(std::uint32_t qubits) {
  std::vector<RegisterId> registers;
  for (std::uint32_t q = 0; q < qubits; ++q) {
    registers.push_back(RegisterId::unprimed(q));
    registers.push_back(RegisterId::primed(q));
  }
  return registers;
}

inline OnticState random_ontic(std::mt19937_64& rng, const std::vector<RegisterId>& registers) {
  std::map<RegisterId, bool> bits;
  for (RegisterId reg : registers) {
    bits.emplace(reg, draw(rng, 2) == 1);
  }
  return OnticState(std::move(bits));
}

// Arbitrary normalized distribution with small integer weights, so
// denominators are usually not powers of two.
inline EpistemicState random_state(std::mt19937_64& rng, const std::vector<RegisterId>& registers) {
  const std::size_t support = 1 + draw(rng, 8);
  std::map<OnticState, long> counts;
  long total = 0;
  for (std::size_t i = 0; i < support; ++i) {
    const long count = 1 + static_cast<long>(draw(rng, 9));
    counts[random_ontic(rng, registers)] += count;
    total += count;
  }
  std::map<OnticState, Rational> weights;
  for (const auto& [state, count] : counts) {
    weights.emplace(state, Rational(count, total));
  }
  return EpistemicState::from_weights(registers, std::move(weights));
}

inline ToyCnot random_cnot(std::mt19937_64& rng, const std::vector<RegisterId>& registers) {
  const std::size_t control = draw(rng, registers.size());
  const std::size_t target =
      (control + 1 + draw(rng, registers.size() - 1)) % registers.size();
  return {registers[control], registers[target]};
}

inline ToyCircuit random_toy_circuit(std::mt19937_64& rng,
                                     const std::vector<RegisterId>& registers,
                                     std::size_t max_depth) {
  ToyCircuit ops;
  const std::size_t depth = draw(rng, max_depth + 1);
  ops.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    ops.push_back(random_cnot(rng, registers));
  }
  return ops;
}

inline std::vector<Rational> sorted_weights(const EpistemicState& state) {
  std::vector<Rational> weights;
  weights.reserve(state.support_size());
  for (const auto& [ontic, weight] : state.weights()) {
    weights.push_back(weight);
  }
  std::sort(weights.begin(), weights.end());
  return weights;
}

}  // namespace toyfriend::testing
