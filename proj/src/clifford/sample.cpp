#include "cnotpac/clifford/sample.hpp"

#include "cnotpac/error.hpp"

namespace cnotpac {

void SampleSet::add(LabeledSample s) {
  if (s.state.num_qubits() != n || s.measurement.num_qubits() != n)
    throw DimensionMismatch("sample qubit count differs from the set's n = " + std::to_string(n));
  samples.push_back(std::move(s));
}

void SampleSet::append(const SampleSet& other) {
  for (const auto& s : other.samples) add(s);
}

}  // namespace cnotpac
