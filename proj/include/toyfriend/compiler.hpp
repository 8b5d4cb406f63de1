#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toyfriend/circuit.hpp"
#include "toyfriend/ontic.hpp"

namespace toyfriend {

enum class BellOutcome : std::uint8_t { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

// Readout bits of the uncomputed pair map to Bell labels as
// 00 -> phi+, 10 -> phi-, 01 -> psi+, 11 -> psi-.
BellOutcome bell_outcome_from_bits(bool first_bit, bool second_bit);
std::string_view bell_outcome_name(BellOutcome outcome);

// One source gate lowered to the toy model: a permutation of the ontic space
// (a list of toy CNOTs), the unprimed registers a measuring agent reads out,
// and the primed registers that agent re-randomizes afterwards.
struct CompiledStep {
  QuantumGate source;
  ToyCircuit toy_ops;
  std::vector<RegisterId> readout_registers;
  std::vector<RegisterId> reset_registers;

  bool has_readout() const { return !readout_registers.empty(); }

  // Label of a concrete readout, given bits covering readout_registers:
  // "0"/"1" for a computational read, a Bell label for a Bell measurement.
  std::string outcome_label(const OnticState& bits) const;
};

// Lowering rules:
//   prep  q        -> no toy ops (handled by state preparation)
//   h     q        -> cnot q' -> q
//   cnot  qc qt    -> cnot qc -> qt, cnot qt' -> qc'
//   read  q        -> readout of q
//   bellmeas qa qb -> see compile_bell_measurement
CompiledStep compile_gate(const QuantumGate& gate);

// Three toy CNOTs, controls first: qa -> qb, qb' -> qa', qa' -> qa; then a
// readout of (qa, qb) mapped to Bell labels and a re-randomization of
// (qa', qb').
CompiledStep compile_bell_measurement(std::uint32_t qubit_a, std::uint32_t qubit_b);

// Validates, then lowers gate by gate in source order.
std::vector<CompiledStep> compile_circuit(const QuantumCircuit& circuit);

// Reversed op order. Each toy CNOT is an involution, so composing a circuit
// with its inversion is the identity permutation.
ToyCircuit invert(const ToyCircuit& ops);

ToyCircuit concatenated_toy_ops(const std::vector<CompiledStep>& steps);

}  // namespace toyfriend
