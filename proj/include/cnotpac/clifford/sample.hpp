#pragma once

#include <cstddef>
#include <vector>

#include "cnotpac/stabilizer/state.hpp"

namespace cnotpac {

/// One training example: the state fed in, the Pauli measured and the
/// expectation tr[(I+P)/2 C rho C^dagger] reported for the hidden circuit.
struct LabeledSample {
  stab::StabilizerState state;
  stab::PauliOperator measurement;
  stab::Label label;

  bool operator==(const LabeledSample& o) const = default;
};

struct SampleSet {
  std::size_t n = 0;
  std::vector<LabeledSample> samples;

  std::size_t size() const noexcept { return samples.size(); }
  void add(LabeledSample s);
  void append(const SampleSet& other);
  bool operator==(const SampleSet& o) const = default;
};

}  // namespace cnotpac
