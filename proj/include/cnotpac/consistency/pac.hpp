#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cnotpac/consistency/search.hpp"

namespace cnotpac::cons {

/// One i.i.d. draw from the (unknown) sample distribution.
using SampleSource = std::function<LabeledSample(Rng&)>;
using SearchFn = std::function<SearchResult(const SampleSet&)>;

/// Uniform over the samples of `s`.
SampleSource uniform_source(const SampleSet& s);
/// Draws sample i with probability weights[i] / sum(weights).
SampleSource weighted_source(const SampleSet& s, std::vector<double> weights);

/// max(s, ceil(c * s * ln s)).
std::size_t coupon_draws(std::size_t s, double c = 3.0);

struct PacResult {
  SearchOutcome outcome = SearchOutcome::NoneExists;
  std::optional<CnotCircuit> hypothesis;
  std::size_t draws = 0;     // samples drawn
  std::size_t observed = 0;  // distinct samples among them
  SearchStats stats;
  /// Set by pac_decide: hypothesis found and consistent with the hidden set.
  std::optional<bool> accepted;
};

/// Coupon-collector learner: draws coupon_draws(s, c) samples, drops
/// duplicates (first occurrence order) and runs `search` on what was seen.
PacResult pac_learner(std::size_t n, const SampleSource& draw, std::size_t s, const SearchFn& search, Rng& rng,
                      double c = 3.0);

/// Decision protocol on a hidden set: learn from uniform draws over it, accept
/// iff the hypothesis is consistent with all of it.
PacResult pac_decide(const SampleSet& hidden, const SearchFn& search, Rng& rng, double c = 3.0);

/// Inputs of the proper-learning sample bound for Clifford circuits:
/// error epsilon, confidence delta, label thresholds alpha < beta, locality d,
/// depth Delta and gate count Gamma.
struct LearningParameters {
  double epsilon = 0.1;
  double delta = 0.1;
  double alpha = 0.0;
  double beta = 0.5;
  double d = 2;
  double depth = 1;
  double gates = 4;

  /// d = 2, Delta = ceil(log2 n), Gamma = n^2. Requires n >= 2.
  static LearningParameters cnot_defaults(std::size_t n);
  /// Throws PreconditionViolation when out of domain.
  void validate() const;
};

/// (1/eps) * (Delta d^4 Gamma^2 ln(Delta) ln^2(Delta d^4 Gamma^2 ln(Gamma) / ((beta - alpha) eps)) + ln(1/delta))
/// with every hidden constant set to 1. The result is a real number; callers
/// round up for a sample count.
double sample_complexity(const LearningParameters& p);

}  // namespace cnotpac::cons
