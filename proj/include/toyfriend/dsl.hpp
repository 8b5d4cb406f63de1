#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "toyfriend/circuit.hpp"

namespace toyfriend {

// Circuit DSL, one statement per line:
//
//   qubits <n>            header, required first statement
//   prep q<i> <0|1>
//   h q<i>
//   cnot q<i> q<j>
//   read q<i>
//   bellmeas q<i> q<j>
//
// '#' starts a comment anywhere in a line; blank lines are ignored;
// statement order is gate order. Measurements form a terminal block:
// either a run of reads or a single final bellmeas.

enum class Diag : std::uint8_t {
  MissingQubitsHeader,
  DuplicateHeader,
  BadHeader,
  UnknownToken,
  BadOperand,
  BadPrepBit,
  QubitOutOfRange,
  PrepAfterUse,
  UnpreparedQubit,
  SameQubitPair,
  NonTerminalBellMeasure,
  NonTerminalRead,
  MixedMeasurement,
};

std::string_view diag_name(Diag code);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, Diag code, const std::string& message);

  std::size_t line() const { return line_; }
  Diag code() const { return code_; }

 private:
  std::size_t line_;
  Diag code_;
};

QuantumCircuit parse_circuit(std::string_view text);

// Canonical DSL form; parse_circuit(render_circuit(c)) == c.
std::string render_circuit(const QuantumCircuit& circuit);

}  // namespace toyfriend
