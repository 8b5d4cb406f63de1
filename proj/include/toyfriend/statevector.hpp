#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "toyfriend/circuit.hpp"

namespace toyfriend {

inline constexpr double kOracleTolerance = 1e-12;

// Dense statevector over 2^n amplitudes. Qubit 0 owns the most significant
// index bit, so basis labels read left to right in qubit order and match the
// toy model's canonical register ordering.
class StateVector {
 public:
  explicit StateVector(std::uint32_t qubit_count);
  StateVector(std::uint32_t qubit_count, std::vector<std::complex<double>> amplitudes);

  std::uint32_t qubit_count() const { return qubit_count_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(std::uint64_t index) const { return amplitudes_.at(index); }

  bool bit_of(std::uint64_t index, std::uint32_t qubit) const;
  std::string basis_label(std::uint64_t index) const;

  double norm_squared() const;

  void apply_x(std::uint32_t qubit);
  void apply_hadamard(std::uint32_t qubit);
  void apply_cnot(std::uint32_t control, std::uint32_t target);

 private:
  std::uint32_t qubit_count_;
  std::vector<std::complex<double>> amplitudes_;
};

// Statevector after the circuit's preparations and unitaries. The circuit
// must not contain measurement gates.
StateVector simulate(const QuantumCircuit& circuit);

// Born-rule distribution of a joint computational readout of `read_qubits`,
// labelled by their bits in the given order. Outcomes with probability below
// kOracleTolerance are omitted.
std::map<std::string, double> born_probabilities(const StateVector& v,
                                                 const std::vector<std::uint32_t>& read_qubits);

// Born-rule distribution of a measurement gate. A Bell measurement is
// evaluated by uncomputing (cnot then Hadamard on the first qubit) and
// reading both qubits computationally.
std::map<std::string, double> born_probabilities(const StateVector& v,
                                                 const QuantumGate& measurement);

// Textbook collapse: project onto `qubit` = `outcome` and renormalize.
// Throws std::domain_error on a zero-probability projection.
StateVector collapse_oracle(const StateVector& v, std::uint32_t qubit, bool outcome);

}  // namespace toyfriend
