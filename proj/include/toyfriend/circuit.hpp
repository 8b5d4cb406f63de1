#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toyfriend {

enum class GateKind : std::uint8_t {
  PrepComputational,
  Hadamard,
  Cnot,
  ReadComputational,
  BellMeasure,
};

struct QuantumGate {
  GateKind kind = GateKind::PrepComputational;
  std::uint32_t qubit_a = 0;  // prepared/rotated/read qubit; Cnot control; first of a Bell pair
  std::uint32_t qubit_b = 0;  // Cnot target; second of a Bell pair
  int bit = 0;                // preparation value

  static QuantumGate prep(std::uint32_t qubit, int bit) {
    return {GateKind::PrepComputational, qubit, 0, bit};
  }
  static QuantumGate hadamard(std::uint32_t qubit) { return {GateKind::Hadamard, qubit, 0, 0}; }
  static QuantumGate cnot(std::uint32_t control, std::uint32_t target) {
    return {GateKind::Cnot, control, target, 0};
  }
  static QuantumGate read(std::uint32_t qubit) { return {GateKind::ReadComputational, qubit, 0, 0}; }
  static QuantumGate bell_measure(std::uint32_t a, std::uint32_t b) {
    return {GateKind::BellMeasure, a, b, 0};
  }

  bool is_measurement() const {
    return kind == GateKind::ReadComputational || kind == GateKind::BellMeasure;
  }

  bool operator==(const QuantumGate&) const = default;

  std::string str() const;  // DSL statement form, e.g. "cnot q0 q1"
};

// Structural defects a circuit can have, in the order they are checked.
enum class CircuitDefect : std::uint8_t {
  QubitOutOfRange,
  BadPrepBit,
  PrepAfterUse,
  UnpreparedQubit,
  SameQubitPair,
  NonTerminalBellMeasure,
  NonTerminalRead,
  MixedMeasurement,
};

struct CircuitCheck {
  CircuitDefect defect;
  std::size_t gate_index;
  std::string message;
};

struct QuantumCircuit {
  std::uint32_t qubit_count = 0;
  std::vector<QuantumGate> gates;

  bool operator==(const QuantumCircuit&) const = default;

  // Throws std::invalid_argument with check_circuit's message on a defect.
  void validate() const;
};

// First structural defect, or nullopt for a well-formed circuit. Rules:
// qubits in range; prep exactly once per qubit and before any other use;
// gates and measurements only on prepared qubits; two-qubit operands
// distinct; measurements form a terminal block that is either a run of
// reads or a single bellmeas.
std::optional<CircuitCheck> check_circuit(const QuantumCircuit& circuit);

}  // namespace toyfriend
