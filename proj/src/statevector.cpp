#include "toyfriend/statevector.hpp"

#include <cmath>
#include <stdexcept>

#include "toyfriend/compiler.hpp"

namespace toyfriend {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

StateVector::StateVector(std::uint32_t qubit_count)
    : qubit_count_(qubit_count), amplitudes_(std::size_t{1} << qubit_count) {
  if (qubit_count > 20) {
    throw std::invalid_argument("statevector limited to 20 qubits");
  }
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::uint32_t qubit_count, std::vector<std::complex<double>> amplitudes)
    : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != (std::size_t{1} << qubit_count)) {
    throw std::invalid_argument("amplitude vector size does not match qubit count");
  }
}

bool StateVector::bit_of(std::uint64_t index, std::uint32_t qubit) const {
  return (index >> (qubit_count_ - 1 - qubit)) & 1;
}

std::string StateVector::basis_label(std::uint64_t index) const {
  std::string label(qubit_count_, '0');
  for (std::uint32_t q = 0; q < qubit_count_; ++q) {
    if (bit_of(index, q)) {
      label[q] = '1';
    }
  }
  return label;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& amp : amplitudes_) {
    total += std::norm(amp);
  }
  return total;
}

void StateVector::apply_x(std::uint32_t qubit) {
  const std::uint64_t mask = std::uint64_t{1} << (qubit_count_ - 1 - qubit);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & mask) {
      std::swap(amplitudes_[i], amplitudes_[i ^ mask]);
    }
  }
}

void StateVector::apply_hadamard(std::uint32_t qubit) {
  const std::uint64_t mask = std::uint64_t{1} << (qubit_count_ - 1 - qubit);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (!(i & mask)) {
      const auto zero_amp = amplitudes_[i];
      const auto one_amp = amplitudes_[i | mask];
      amplitudes_[i] = kInvSqrt2 * (zero_amp + one_amp);
      amplitudes_[i | mask] = kInvSqrt2 * (zero_amp - one_amp);
    }
  }
}

void StateVector::apply_cnot(std::uint32_t control, std::uint32_t target) {
  if (control == target) {
    throw std::invalid_argument("cnot operands must be distinct qubits");
  }
  const std::uint64_t control_mask = std::uint64_t{1} << (qubit_count_ - 1 - control);
  const std::uint64_t target_mask = std::uint64_t{1} << (qubit_count_ - 1 - target);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & control_mask) && (i & target_mask)) {
      std::swap(amplitudes_[i], amplitudes_[i ^ target_mask]);
    }
  }
}

StateVector simulate(const QuantumCircuit& circuit) {
  circuit.validate();
  StateVector state(circuit.qubit_count);
  for (const QuantumGate& gate : circuit.gates) {
    switch (gate.kind) {
      case GateKind::PrepComputational:
        if (gate.bit == 1) {
          state.apply_x(gate.qubit_a);
        }
        break;
      case GateKind::Hadamard:
        state.apply_hadamard(gate.qubit_a);
        break;
      case GateKind::Cnot:
        state.apply_cnot(gate.qubit_a, gate.qubit_b);
        break;
      case GateKind::ReadComputational:
      case GateKind::BellMeasure:
        throw std::invalid_argument("simulate expects a unitary-only circuit, found '" +
                                    gate.str() + "'");
    }
  }
  return state;
}

std::map<std::string, double> born_probabilities(const StateVector& v,
                                                 const std::vector<std::uint32_t>& read_qubits) {
  for (std::uint32_t q : read_qubits) {
    if (q >= v.qubit_count()) {
      throw std::out_of_range("readout of undeclared qubit q" + std::to_string(q));
    }
  }
  std::map<std::string, double> distribution;
  for (std::uint64_t i = 0; i < v.dimension(); ++i) {
    const double p = std::norm(v.amplitude(i));
    if (p == 0.0) {
      continue;
    }
    std::string label;
    label.reserve(read_qubits.size());
    for (std::uint32_t q : read_qubits) {
      label.push_back(v.bit_of(i, q) ? '1' : '0');
    }
    distribution[label] += p;
  }
  for (auto it = distribution.begin(); it != distribution.end();) {
    it = it->second < kOracleTolerance ? distribution.erase(it) : std::next(it);
  }
  return distribution;
}

std::map<std::string, double> born_probabilities(const StateVector& v,
                                                 const QuantumGate& measurement) {
  switch (measurement.kind) {
    case GateKind::ReadComputational:
      return born_probabilities(v, std::vector<std::uint32_t>{measurement.qubit_a});
    case GateKind::BellMeasure: {
      StateVector uncomputed = v;
      uncomputed.apply_cnot(measurement.qubit_a, measurement.qubit_b);
      uncomputed.apply_hadamard(measurement.qubit_a);
      auto bit_distribution =
          born_probabilities(uncomputed, {measurement.qubit_a, measurement.qubit_b});
      std::map<std::string, double> distribution;
      for (const auto& [bits, p] : bit_distribution) {
        distribution[std::string(bell_outcome_name(
            bell_outcome_from_bits(bits[0] == '1', bits[1] == '1')))] += p;
      }
      return distribution;
    }
    default:
      throw std::invalid_argument("born_probabilities expects a measurement gate, got '" +
                                  measurement.str() + "'");
  }
}

StateVector collapse_oracle(const StateVector& v, std::uint32_t qubit, bool outcome) {
  if (qubit >= v.qubit_count()) {
    throw std::out_of_range("collapse of undeclared qubit q" + std::to_string(qubit));
  }
  double probability = 0.0;
  for (std::uint64_t i = 0; i < v.dimension(); ++i) {
    if (v.bit_of(i, qubit) == outcome) {
      probability += std::norm(v.amplitude(i));
    }
  }
  if (probability < kOracleTolerance) {
    throw std::domain_error("collapse onto a zero-probability outcome");
  }
  const double scale = 1.0 / std::sqrt(probability);
  std::vector<std::complex<double>> amplitudes(v.dimension());
  for (std::uint64_t i = 0; i < v.dimension(); ++i) {
    amplitudes[i] = (v.bit_of(i, qubit) == outcome) ? v.amplitude(i) * scale : 0.0;
  }
  return StateVector(v.qubit_count(), std::move(amplitudes));
}

}  // namespace toyfriend
