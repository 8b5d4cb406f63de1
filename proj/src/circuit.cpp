#include "toyfriend/circuit.hpp"

#include <stdexcept>

namespace toyfriend {

std::string QuantumGate::str() const {
  auto q = [](std::uint32_t index) { return "q" + std::to_string(index); };
  switch (kind) {
    case GateKind::PrepComputational:
      return "prep " + q(qubit_a) + " " + std::to_string(bit);
    case GateKind::Hadamard:
      return "h " + q(qubit_a);
    case GateKind::Cnot:
      return "cnot " + q(qubit_a) + " " + q(qubit_b);
    case GateKind::ReadComputational:
      return "read " + q(qubit_a);
    case GateKind::BellMeasure:
      return "bellmeas " + q(qubit_a) + " " + q(qubit_b);
  }
  throw std::logic_error("unreachable gate kind");
}

std::optional<CircuitCheck> check_circuit(const QuantumCircuit& circuit) {
  std::vector<bool> prepared(circuit.qubit_count, false);
  bool saw_read = false;
  bool saw_bell = false;

  auto fail = [](CircuitDefect defect, std::size_t index, std::string message) {
    return CircuitCheck{defect, index, std::move(message)};
  };

  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const QuantumGate& gate = circuit.gates[i];
    const std::string where = " in '" + gate.str() + "'";

    auto in_range = [&](std::uint32_t q) { return q < circuit.qubit_count; };
    std::vector<std::uint32_t> operands = {gate.qubit_a};
    if (gate.kind == GateKind::Cnot || gate.kind == GateKind::BellMeasure) {
      operands.push_back(gate.qubit_b);
    }
    for (std::uint32_t q : operands) {
      if (!in_range(q)) {
        return fail(CircuitDefect::QubitOutOfRange, i,
                    "qubit q" + std::to_string(q) + " out of range (declared " +
                        std::to_string(circuit.qubit_count) + ")" + where);
      }
    }

    if (saw_bell) {
      return fail(CircuitDefect::NonTerminalBellMeasure, i,
                  "bellmeas must be the final statement; found" + where);
    }
    if (saw_read && gate.kind != GateKind::ReadComputational) {
      if (gate.kind == GateKind::BellMeasure) {
        return fail(CircuitDefect::MixedMeasurement, i,
                    "bellmeas cannot be combined with readouts" + where);
      }
      return fail(CircuitDefect::NonTerminalRead, i,
                  "only readouts may follow a readout" + where);
    }

    switch (gate.kind) {
      case GateKind::PrepComputational:
        if (gate.bit != 0 && gate.bit != 1) {
          return fail(CircuitDefect::BadPrepBit, i, "preparation bit must be 0 or 1" + where);
        }
        if (prepared[gate.qubit_a]) {
          return fail(CircuitDefect::PrepAfterUse, i,
                      "qubit q" + std::to_string(gate.qubit_a) + " already prepared" + where);
        }
        prepared[gate.qubit_a] = true;
        break;
      case GateKind::Hadamard:
      case GateKind::Cnot:
      case GateKind::ReadComputational:
      case GateKind::BellMeasure:
        for (std::uint32_t q : operands) {
          if (!prepared[q]) {
            return fail(CircuitDefect::UnpreparedQubit, i,
                        "qubit q" + std::to_string(q) + " used before preparation" + where);
          }
        }
        if ((gate.kind == GateKind::Cnot || gate.kind == GateKind::BellMeasure) &&
            gate.qubit_a == gate.qubit_b) {
          return fail(CircuitDefect::SameQubitPair, i, "operands must be distinct qubits" + where);
        }
        if (gate.kind == GateKind::ReadComputational) {
          saw_read = true;
        }
        if (gate.kind == GateKind::BellMeasure) {
          saw_bell = true;
        }
        break;
    }
  }
  return std::nullopt;
}

void QuantumCircuit::validate() const {
  if (auto check = check_circuit(*this)) {
    throw std::invalid_argument("gate " + std::to_string(check->gate_index) + ": " + check->message);
  }
}

}  // namespace toyfriend
