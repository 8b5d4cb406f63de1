#include "doctest.h"
#include "toyfriend/dsl.hpp"
#include "toyfriend/scenario.hpp"

#include <random>

using namespace toyfriend;

namespace {

ParseError capture(const std::string& text) {
  try {
    parse_circuit(text);
  } catch (const ParseError& e) {
    return e;
  }
  throw std::logic_error("expected a parse error for: " + text);
}

}  // namespace

TEST_CASE("the protocol source parses to the protocol IR") {
  const std::string source =
      "qubits 2\n"
      "prep q0 0\n"
      "prep q1 0\n"
      "h q0\n"
      "cnot q0 q1\n"
      "bellmeas q0 q1\n";
  CHECK(parse_circuit(source) == protocol_circuit());
}

TEST_CASE("comments and blank lines are ignored") {
  const std::string source =
      "# the protocol\n"
      "qubits 2\n"
      "\n"
      "prep q0 0   # system\n"
      "prep q1 0\t# pointer\n"
      "h q0\n"
      "cnot q0 q1\n"
      "bellmeas q0 q1\n";
  CHECK(parse_circuit(source) == protocol_circuit());
}

TEST_CASE("diagnostics carry line numbers and distinct codes") {
  CHECK(capture("").code() == Diag::MissingQubitsHeader);
  CHECK(capture("prep q0 0\n").code() == Diag::MissingQubitsHeader);
  CHECK(capture("qubits 2\nqubits 2\n").code() == Diag::DuplicateHeader);
  CHECK(capture("qubits zero\n").code() == Diag::BadHeader);
  CHECK(capture("qubits 0\n").code() == Diag::BadHeader);
  CHECK(capture("qubits 1\nfoo q0\n").code() == Diag::UnknownToken);
  CHECK(capture("qubits 1\nh 0\n").code() == Diag::BadOperand);
  CHECK(capture("qubits 1\nh q0 q0\n").code() == Diag::BadOperand);
  CHECK(capture("qubits 1\nprep q0 2\n").code() == Diag::BadPrepBit);

  auto out_of_range = capture("qubits 2\nh q5\n");
  CHECK(out_of_range.code() == Diag::QubitOutOfRange);
  CHECK(out_of_range.line() == 2);

  auto reprepared = capture("qubits 1\nprep q0 0\nh q0\nprep q0 1\n");
  CHECK(reprepared.code() == Diag::PrepAfterUse);
  CHECK(reprepared.line() == 4);

  CHECK(capture("qubits 1\nh q0\n").code() == Diag::UnpreparedQubit);
  CHECK(capture("qubits 2\nprep q0 0\nprep q1 0\ncnot q0 q0\n").code() == Diag::SameQubitPair);

  auto nonterminal = capture(
      "qubits 2\nprep q0 0\nprep q1 0\nbellmeas q0 q1\nh q0\n");
  CHECK(nonterminal.code() == Diag::NonTerminalBellMeasure);
  CHECK(nonterminal.line() == 5);

  CHECK(capture("qubits 1\nprep q0 0\nread q0\nh q0\n").code() == Diag::NonTerminalRead);
  CHECK(capture("qubits 2\nprep q0 0\nprep q1 0\nread q0\nbellmeas q0 q1\n").code() ==
        Diag::MixedMeasurement);
}

TEST_CASE("error text names the line, reason, and code") {
  auto e = capture("qubits 2\nh q5\n");
  const std::string what = e.what();
  CHECK(what.find("line 2") != std::string::npos);
  CHECK(what.find("out of range") != std::string::npos);
  CHECK(what.find("qubit_out_of_range") != std::string::npos);
}

TEST_CASE("render/parse round-trips the IR exactly") {
  const QuantumCircuit protocol = protocol_circuit();
  const std::string canonical = render_circuit(protocol);
  CHECK(parse_circuit(canonical) == protocol);
  CHECK(render_circuit(parse_circuit(canonical)) == canonical);

  // Random read-terminated circuits round-trip as well.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (const auto& record : compare_random_circuits(seed, 5, 3, 8)) {
      CHECK(parse_circuit(render_circuit(record.circuit)) == record.circuit);
    }
  }
}
