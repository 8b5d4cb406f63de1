#include "doctest.h"
#include "toyfriend/statevector.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace toyfriend;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-12;
}

bool amplitudes_close(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    return false;
  }
  for (std::uint64_t i = 0; i < a.dimension(); ++i) {
    if (std::abs(a.amplitude(i) - b.amplitude(i)) > 1e-12) {
      return false;
    }
  }
  return true;
}

StateVector random_state(std::mt19937_64& rng, std::uint32_t qubits) {
  std::normal_distribution<double> gauss;
  std::vector<std::complex<double>> amplitudes(std::size_t{1} << qubits);
  double norm2 = 0.0;
  for (auto& amp : amplitudes) {
    amp = {gauss(rng), gauss(rng)};
    norm2 += std::norm(amp);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& amp : amplitudes) {
    amp *= scale;
  }
  return StateVector(qubits, std::move(amplitudes));
}

}  // namespace

TEST_CASE("simulate follows the protocol's unitary prefix") {
  auto plus = simulate({1, {QuantumGate::prep(0, 0), QuantumGate::hadamard(0)}});
  CHECK(close(plus.amplitude(0).real(), kInvSqrt2));
  CHECK(close(plus.amplitude(1).real(), kInvSqrt2));

  auto entangled = simulate({2,
                             {QuantumGate::prep(0, 0), QuantumGate::prep(1, 0),
                              QuantumGate::hadamard(0), QuantumGate::cnot(0, 1)}});
  CHECK(close(entangled.amplitude(0b00).real(), kInvSqrt2));
  CHECK(close(entangled.amplitude(0b11).real(), kInvSqrt2));
  CHECK(close(std::abs(entangled.amplitude(0b01)), 0.0));
  CHECK(close(std::abs(entangled.amplitude(0b10)), 0.0));

  auto empty = simulate({1, {QuantumGate::prep(0, 0)}});
  CHECK(close(empty.amplitude(0).real(), 1.0));
  CHECK(close(std::abs(empty.amplitude(1)), 0.0));

  CHECK_THROWS_AS(simulate({1, {QuantumGate::prep(0, 0), QuantumGate::read(0)}}),
                  std::invalid_argument);
}

TEST_CASE("prep of 1 flips the qubit") {
  auto one = simulate({2, {QuantumGate::prep(0, 1), QuantumGate::prep(1, 0)}});
  CHECK(close(one.amplitude(0b10).real(), 1.0));
  CHECK(one.basis_label(0b10) == "10");
}

TEST_CASE("born probabilities follow the Born rule") {
  auto plus = simulate({1, {QuantumGate::prep(0, 0), QuantumGate::hadamard(0)}});
  auto computational = born_probabilities(plus, QuantumGate::read(0));
  CHECK(close(computational.at("0"), 0.5));
  CHECK(close(computational.at("1"), 0.5));

  auto entangled = simulate({2,
                             {QuantumGate::prep(0, 0), QuantumGate::prep(1, 0),
                              QuantumGate::hadamard(0), QuantumGate::cnot(0, 1)}});
  auto bell = born_probabilities(entangled, QuantumGate::bell_measure(0, 1));
  REQUIRE(bell.size() == 1);
  CHECK(close(bell.at("phi+"), 1.0));

  auto zeros = simulate({2, {QuantumGate::prep(0, 0), QuantumGate::prep(1, 0)}});
  auto joint = born_probabilities(zeros, std::vector<std::uint32_t>{0, 1});
  REQUIRE(joint.size() == 1);
  CHECK(close(joint.at("00"), 1.0));

  // Bell-measuring the unentangled |00> splits evenly between phi+ and phi-.
  auto bell_product = born_probabilities(zeros, QuantumGate::bell_measure(0, 1));
  CHECK(close(bell_product.at("phi+"), 0.5));
  CHECK(close(bell_product.at("phi-"), 0.5));
}

TEST_CASE("collapse projects and renormalizes") {
  auto entangled = simulate({2,
                             {QuantumGate::prep(0, 0), QuantumGate::prep(1, 0),
                              QuantumGate::hadamard(0), QuantumGate::cnot(0, 1)}});
  auto collapsed = collapse_oracle(entangled, 0, false);
  CHECK(close(collapsed.amplitude(0b00).real(), 1.0));
  CHECK(close(collapsed.norm_squared(), 1.0));

  // The friend's quantum-side prediction: an even phi+/phi- split.
  auto bell = born_probabilities(collapsed, QuantumGate::bell_measure(0, 1));
  CHECK(close(bell.at("phi+"), 0.5));
  CHECK(close(bell.at("phi-"), 0.5));

  // Collapsing a basis state onto its own value is the identity.
  auto zeros = simulate({2, {QuantumGate::prep(0, 0), QuantumGate::prep(1, 0)}});
  CHECK(amplitudes_close(collapse_oracle(zeros, 0, false), zeros));

  CHECK_THROWS_AS(collapse_oracle(zeros, 0, true), std::domain_error);
}

TEST_CASE("gates preserve the norm and square to the identity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto state = random_state(rng, 3);
    auto original = state;
    const std::uint32_t q = static_cast<std::uint32_t>(rng() % 3);

    state.apply_hadamard(q);
    CHECK(close(state.norm_squared(), 1.0));
    state.apply_hadamard(q);
    CHECK(amplitudes_close(state, original));

    const std::uint32_t control = static_cast<std::uint32_t>(rng() % 3);
    const std::uint32_t target = (control + 1 + static_cast<std::uint32_t>(rng() % 2)) % 3;
    state.apply_cnot(control, target);
    CHECK(close(state.norm_squared(), 1.0));
    state.apply_cnot(control, target);
    CHECK(amplitudes_close(state, original));
  }
}
