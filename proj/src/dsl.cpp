#include "toyfriend/dsl.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace toyfriend {

std::string_view diag_name(Diag code) {
  switch (code) {
    case Diag::MissingQubitsHeader: return "missing_qubits_header";
    case Diag::DuplicateHeader: return "duplicate_header";
    case Diag::BadHeader: return "bad_header";
    case Diag::UnknownToken: return "unknown_token";
    case Diag::BadOperand: return "bad_operand";
    case Diag::BadPrepBit: return "bad_prep_bit";
    case Diag::QubitOutOfRange: return "qubit_out_of_range";
    case Diag::PrepAfterUse: return "prep_after_use";
    case Diag::UnpreparedQubit: return "unprepared_qubit";
    case Diag::SameQubitPair: return "same_qubit_pair";
    case Diag::NonTerminalBellMeasure: return "nonterminal_bellmeas";
    case Diag::NonTerminalRead: return "nonterminal_read";
    case Diag::MixedMeasurement: return "mixed_measurement";
  }
  return "unknown_diagnostic";
}

ParseError::ParseError(std::size_t line, Diag code, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message + " [" +
                         std::string(diag_name(code)) + "]"),
      line_(line),
      code_(code) {}

namespace {

Diag diag_for_defect(CircuitDefect defect) {
  switch (defect) {
    case CircuitDefect::QubitOutOfRange: return Diag::QubitOutOfRange;
    case CircuitDefect::BadPrepBit: return Diag::BadPrepBit;
    case CircuitDefect::PrepAfterUse: return Diag::PrepAfterUse;
    case CircuitDefect::UnpreparedQubit: return Diag::UnpreparedQubit;
    case CircuitDefect::SameQubitPair: return Diag::SameQubitPair;
    case CircuitDefect::NonTerminalBellMeasure: return Diag::NonTerminalBellMeasure;
    case CircuitDefect::NonTerminalRead: return Diag::NonTerminalRead;
    case CircuitDefect::MixedMeasurement: return Diag::MixedMeasurement;
  }
  return Diag::UnknownToken;
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : line) {
    if (c == '#') {
      break;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) {
    tokens.push_back(std::move(current));
  }
  return tokens;
}

std::uint32_t parse_uint(std::string_view token, std::size_t line, Diag code,
                         const std::string& what) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, code, "expected " + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

std::uint32_t parse_qubit(std::string_view token, std::size_t line) {
  if (token.size() < 2 || token[0] != 'q') {
    throw ParseError(line, Diag::BadOperand,
                     "expected qubit operand like 'q0', got '" + std::string(token) + "'");
  }
  return parse_uint(token.substr(1), line, Diag::BadOperand, "a qubit index");
}

void expect_arity(const std::vector<std::string>& tokens, std::size_t arity, std::size_t line) {
  if (tokens.size() != arity + 1) {
    throw ParseError(line, Diag::BadOperand,
                     "'" + tokens[0] + "' takes " + std::to_string(arity) + " operand(s), got " +
                         std::to_string(tokens.size() - 1));
  }
}

}  // namespace

QuantumCircuit parse_circuit(std::string_view text) {
  QuantumCircuit circuit;
  bool saw_header = false;
  std::vector<std::size_t> gate_lines;

  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_number;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    const std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) {
      continue;
    }
    const std::string& keyword = tokens[0];

    if (keyword == "qubits") {
      if (saw_header) {
        throw ParseError(line_number, Diag::DuplicateHeader, "duplicate 'qubits' header");
      }
      expect_arity(tokens, 1, line_number);
      circuit.qubit_count = parse_uint(tokens[1], line_number, Diag::BadHeader, "a qubit count");
      if (circuit.qubit_count == 0) {
        throw ParseError(line_number, Diag::BadHeader, "qubit count must be positive");
      }
      saw_header = true;
      continue;
    }
    if (!saw_header) {
      throw ParseError(line_number, Diag::MissingQubitsHeader,
                       "missing 'qubits <n>' header before '" + keyword + "'");
    }

    if (keyword == "prep") {
      expect_arity(tokens, 2, line_number);
      const std::uint32_t qubit = parse_qubit(tokens[1], line_number);
      if (tokens[2] != "0" && tokens[2] != "1") {
        throw ParseError(line_number, Diag::BadPrepBit,
                         "preparation bit must be 0 or 1, got '" + tokens[2] + "'");
      }
      circuit.gates.push_back(QuantumGate::prep(qubit, tokens[2] == "1" ? 1 : 0));
    } else if (keyword == "h") {
      expect_arity(tokens, 1, line_number);
      circuit.gates.push_back(QuantumGate::hadamard(parse_qubit(tokens[1], line_number)));
    } else if (keyword == "cnot") {
      expect_arity(tokens, 2, line_number);
      circuit.gates.push_back(QuantumGate::cnot(parse_qubit(tokens[1], line_number),
                                                parse_qubit(tokens[2], line_number)));
    } else if (keyword == "read") {
      expect_arity(tokens, 1, line_number);
      circuit.gates.push_back(QuantumGate::read(parse_qubit(tokens[1], line_number)));
    } else if (keyword == "bellmeas") {
      expect_arity(tokens, 2, line_number);
      circuit.gates.push_back(QuantumGate::bell_measure(parse_qubit(tokens[1], line_number),
                                                        parse_qubit(tokens[2], line_number)));
    } else {
      throw ParseError(line_number, Diag::UnknownToken, "unknown statement '" + keyword + "'");
    }
    gate_lines.push_back(line_number);
  }

  if (!saw_header) {
    throw ParseError(1, Diag::MissingQubitsHeader, "missing 'qubits <n>' header");
  }
  if (auto check = check_circuit(circuit)) {
    throw ParseError(gate_lines.at(check->gate_index), diag_for_defect(check->defect),
                     check->message);
  }
  return circuit;
}

std::string render_circuit(const QuantumCircuit& circuit) {
  std::ostringstream os;
  os << "qubits " << circuit.qubit_count << "\n";
  for (const QuantumGate& gate : circuit.gates) {
    os << gate.str() << "\n";
  }
  return os.str();
}

}  // namespace toyfriend
