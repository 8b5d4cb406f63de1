#include "toyfriend/compiler.hpp"

#include <stdexcept>

namespace toyfriend {

BellOutcome bell_outcome_from_bits(bool first_bit, bool second_bit) {
  if (!first_bit && !second_bit) {
    return BellOutcome::PhiPlus;
  }
  if (first_bit && !second_bit) {
    return BellOutcome::PhiMinus;
  }
  if (!first_bit && second_bit) {
    return BellOutcome::PsiPlus;
  }
  return BellOutcome::PsiMinus;
}

std::string_view bell_outcome_name(BellOutcome outcome) {
  switch (outcome) {
    case BellOutcome::PhiPlus:
      return "phi+";
    case BellOutcome::PhiMinus:
      return "phi-";
    case BellOutcome::PsiPlus:
      return "psi+";
    case BellOutcome::PsiMinus:
      return "psi-";
  }
  throw std::logic_error("unreachable Bell outcome");
}

std::string CompiledStep::outcome_label(const OnticState& bits) const {
  switch (source.kind) {
    case GateKind::ReadComputational:
      return bits.bit(readout_registers.at(0)) ? "1" : "0";
    case GateKind::BellMeasure:
      return std::string(bell_outcome_name(bell_outcome_from_bits(
          bits.bit(readout_registers.at(0)), bits.bit(readout_registers.at(1)))));
    default:
      throw std::logic_error("outcome_label on a step without readouts");
  }
}

CompiledStep compile_gate(const QuantumGate& gate) {
  const RegisterId a = RegisterId::unprimed(gate.qubit_a);
  const RegisterId a_hidden = RegisterId::primed(gate.qubit_a);
  const RegisterId b = RegisterId::unprimed(gate.qubit_b);
  const RegisterId b_hidden = RegisterId::primed(gate.qubit_b);

  switch (gate.kind) {
    case GateKind::PrepComputational:
      return {gate, {}, {}, {}};
    case GateKind::Hadamard:
      return {gate, {ToyCnot(a_hidden, a)}, {}, {}};
    case GateKind::Cnot:
      if (gate.qubit_a == gate.qubit_b) {
        throw std::invalid_argument("cnot operands must be distinct qubits");
      }
      return {gate, {ToyCnot(a, b), ToyCnot(b_hidden, a_hidden)}, {}, {}};
    case GateKind::ReadComputational:
      return {gate, {}, {a}, {}};
    case GateKind::BellMeasure:
      return compile_bell_measurement(gate.qubit_a, gate.qubit_b);
  }
  throw std::invalid_argument("unsupported gate variant");
}

CompiledStep compile_bell_measurement(std::uint32_t qubit_a, std::uint32_t qubit_b) {
  if (qubit_a == qubit_b) {
    throw std::invalid_argument("bellmeas operands must be distinct qubits");
  }
  const RegisterId a = RegisterId::unprimed(qubit_a);
  const RegisterId a_hidden = RegisterId::primed(qubit_a);
  const RegisterId b = RegisterId::unprimed(qubit_b);
  const RegisterId b_hidden = RegisterId::primed(qubit_b);
  return {QuantumGate::bell_measure(qubit_a, qubit_b),
          {ToyCnot(a, b), ToyCnot(b_hidden, a_hidden), ToyCnot(a_hidden, a)},
          {a, b},
          {a_hidden, b_hidden}};
}

std::vector<CompiledStep> compile_circuit(const QuantumCircuit& circuit) {
  circuit.validate();
  std::vector<CompiledStep> steps;
  steps.reserve(circuit.gates.size());
  for (const QuantumGate& gate : circuit.gates) {
    steps.push_back(compile_gate(gate));
  }
  return steps;
}

ToyCircuit invert(const ToyCircuit& ops) {
  return ToyCircuit(ops.rbegin(), ops.rend());
}

ToyCircuit concatenated_toy_ops(const std::vector<CompiledStep>& steps) {
  ToyCircuit ops;
  for (const CompiledStep& step : steps) {
    ops.insert(ops.end(), step.toy_ops.begin(), step.toy_ops.end());
  }
  return ops;
}

}  // namespace toyfriend
