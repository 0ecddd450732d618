#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cnotpac/clifford/cnot.hpp"
#include "cnotpac/f2/affine.hpp"

namespace cnotpac::learn {

using cliff::CliffordTableau;
using cliff::CnotCircuit;
using f2::AffineSubspace;
using f2::BitVector;
using stab::Label;
using stab::PauliOperator;
using stab::StabilizerState;

struct BatchSample {
  StabilizerState state;
  Label label;  // Zero or One
};

/// Samples that all share one signed Z-type measurement.
struct SingleMeasurementBatch {
  PauliOperator measurement;
  std::vector<BatchSample> samples;

  /// Throws PreconditionViolation unless the measurement is a non-identity
  /// Z-type Pauli, labels are binary and qubit counts agree.
  void validate() const;
  /// Throws PreconditionViolation when the measurements differ.
  static SingleMeasurementBatch from_sample_set(const SampleSet& s);
  SampleSet to_sample_set() const;
};

/// Feasible (u, s) in GF(2)^{n+1}, meaning C^dagger Z^p C = (-1)^s Z^u with
/// the signless part Z^p of the measurement; coordinate n is s. nullopt when
/// the labels contradict each other.
std::optional<AffineSubspace> single_measurement_constraints(const SingleMeasurementBatch& batch);

struct SingleMeasurementResult {
  CnotCircuit circuit;
  std::size_t completion_draws = 0;  // random vectors drawn to complete both bases
};

/// Picks a feasible image of the measurement and builds a circuit realising
/// it. Throws EmptyIntersection when no CNOT circuit fits the batch.
SingleMeasurementResult learn_single_measurement(const SingleMeasurementBatch& batch, Rng& rng);

/// m samples labelled by `hidden` for the shared measurement. States are
/// basis states with Hadamards on a random subset, mixed by a random CNOT
/// circuit; draws giving label 1/2 are rejected.
SingleMeasurementBatch random_single_measurement_batch(const CnotCircuit& hidden, const PauliOperator& measurement,
                                                       std::size_t m, Rng& rng);

/// Tableau of a random H/P/CNOT sequence of length 4n^2.
CliffordTableau trivial_uniform_learner(std::size_t n, Rng& rng);

struct NonHalfEstimate {
  std::size_t draws = 0;
  std::size_t non_half = 0;
  double frequency = 0;
  double expected = 0;  // 2^n / 4^n
  double sigma = 0;     // binomial standard deviation of the frequency
};

/// Fraction of uniformly random signed Paulis (identity included, where +I
/// counts as label 1 and -I as 0) whose label on `rho` is not 1/2.
NonHalfEstimate non_half_frequency(const StabilizerState& rho, std::size_t draws, Rng& rng);

}  // namespace cnotpac::learn
