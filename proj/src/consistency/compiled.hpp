#pragma once

// Packed evaluation of CNOT hypotheses for small n. Each sample's stabilizer
// group is expanded into a 4^n lookup table once; a hypothesis is then the
// pullback columns as bit masks plus the pullback sign mask.

#include <cstdint>
#include <vector>

#include "cnotpac/clifford/sample.hpp"

namespace cnotpac::cons::detail {

using Mask = std::uint32_t;

inline unsigned pc(Mask m) { return static_cast<unsigned>(__builtin_popcount(m)); }

struct CompiledSample {
  Mask px = 0, pz = 0;
  bool pneg = false;
  stab::Label label;
  // table[x | z << n]: 0 absent, 1 = +letters in group, 2 = -letters in group
  std::vector<std::uint8_t> table;
  unsigned last_column = 0;  // highest qubit in pz (Z-type samples only)
};

struct CompiledSet {
  std::size_t n = 0;
  std::vector<CompiledSample> zs;     // Z-type measurements
  std::vector<CompiledSample> other;  // measurements with an X part
};

CompiledSet compile(const SampleSet& s);

/// cols[c] = column c of G; xt_cols = columns of G^{-T} (only read when an X
/// part is present).
stab::Label evaluate(const CompiledSample& s, std::size_t n, const Mask* cols, const Mask* xt_cols, Mask qt);

}  // namespace cnotpac::cons::detail
