#pragma once

#include <map>
#include <string>
#include <vector>

#include "toyfriend/compiler.hpp"
#include "toyfriend/ontic.hpp"

namespace toyfriend {

// An agent's epistemic description of the experiment. The flag records the
// agent's policy for measurement interactions: account for them dynamically
// (superobserver) or through the collapse update. It is descriptive — both
// update styles are available on any view.
struct AgentView {
  std::string name;
  EpistemicState state;
  bool tracks_measurement_dynamics = false;
};

struct OutcomeBranch {
  std::string outcome;
  Rational probability;
  AgentView view;
};

using OutcomeDistribution = std::map<std::string, Rational>;

// The collapse update for a computational measurement of `system_qubit`
// recorded on `pointer_qubit`: per outcome s with nonzero probability,
// condition on the system bit being s, set the pointer bit to s, and replace
// both primed registers by the maximum-entropy (uniform) marginal. The
// pointer must start in the ready state (unprimed bit deterministically 0).
std::vector<OutcomeBranch> collapse_measure(const AgentView& v, std::uint32_t system_qubit,
                                            std::uint32_t pointer_qubit);

// The dynamical account: push the view through the compiled interaction's
// permutation. No conditioning, no reset — correlations are kept.
AgentView dynamical_measure(const AgentView& v, const CompiledStep& interaction);

// Observe a pointer qubit without describing one's own measurement
// dynamically: per pointer value with nonzero marginal, Bayesian-update on it
// and re-randomize the pointer's primed register.
std::vector<OutcomeBranch> observe_pointer(const AgentView& v, std::uint32_t pointer_qubit);

// Exact outcome distribution the view assigns to a terminal measurement:
// push through the step's toy ops, marginalize onto the readout registers,
// and map bit combinations to outcome labels.
OutcomeDistribution predict(const AgentView& v, const CompiledStep& measurement);

// Probability-weighted average of the branch states.
EpistemicState outcome_average(const std::vector<OutcomeBranch>& branches);

// Demonstration sampler: draw one ontic state from the distribution
// (deterministically, by seed) and push it through the ops, recording the
// point after every gate. Predictions never need this; it exhibits a single
// well-defined state of affairs evolving under the same permutations the
// agents reason about. Element 0 is the initial point.
std::vector<OnticState> sample_trajectory(const EpistemicState& initial,
                                          std::span<const ToyCnot> ops, std::uint64_t seed);

std::string distribution_str(const OutcomeDistribution& distribution);

}  // namespace toyfriend
