#include "compiled.hpp"

#include "cnotpac/error.hpp"

namespace cnotpac::cons::detail {

namespace {

Mask to_mask(const f2::BitVector& v) { return static_cast<Mask>(v.to_uint()); }

// (x1, z1) <- (x1, z1)(x2, z2); returns the i-exponent of the letter product.
unsigned mul(Mask& x1, Mask& z1, Mask x2, Mask z2) {
  const Mask x1z2 = x1 & z2;
  const Mask anti = x1z2 ^ (z1 & x2);
  x1 ^= x2;
  z1 ^= z2;
  const Mask minus = anti & (x1 ^ z1 ^ x1z2);
  return (pc(anti) + 2 * pc(minus)) & 3U;
}

}  // namespace

CompiledSet compile(const SampleSet& s) {
  const std::size_t n = s.n;
  if (n > 8) throw EnumerationLimit("packed evaluation supports at most 8 qubits");
  CompiledSet out;
  out.n = n;
  for (const auto& smp : s.samples) {
    CompiledSample c;
    c.px = to_mask(smp.measurement.x());
    c.pz = to_mask(smp.measurement.z());
    c.pneg = smp.measurement.negative();
    c.label = smp.label;
    c.last_column = c.pz ? 31U - static_cast<unsigned>(__builtin_clz(c.pz)) : 0U;
    c.table.assign(std::size_t{1} << (2 * n), 0);
    const auto& gens = smp.state.generators();
    // Gray-code walk over all 2^n group elements.
    Mask x = 0, z = 0;
    unsigned phase = 0;
    c.table[0] = 1;
    for (std::uint32_t i = 1; i < (1U << n); ++i) {
      const unsigned g = static_cast<unsigned>(__builtin_ctz(i));
      const auto& gp = gens[g];
      phase = (phase + mul(x, z, to_mask(gp.x()), to_mask(gp.z())) + (gp.negative() ? 2U : 0U)) & 3U;
      c.table[x | (static_cast<std::size_t>(z) << n)] = phase == 0 ? 1 : 2;
    }
    (c.px ? out.other : out.zs).push_back(std::move(c));
  }
  return out;
}

stab::Label evaluate(const CompiledSample& s, std::size_t n, const Mask* cols, const Mask* xt_cols, Mask qt) {
  Mask z = 0, x = 0;
  for (Mask m = s.pz; m; m &= m - 1) z ^= cols[__builtin_ctz(m)];
  for (Mask m = s.px; m; m &= m - 1) x ^= xt_cols[__builtin_ctz(m)];
  // P = sign i^{|px pz|} X^px Z^pz and the image letters carry i^{|x z|}.
  const unsigned e = (pc(s.px & s.pz) + 4 - (pc(x & z) & 3U)) & 3U;
  const bool neg = s.pneg ^ ((pc(qt & s.pz) & 1U) != 0) ^ (e == 2);
  const std::uint8_t t = s.table[x | (static_cast<std::size_t>(z) << n)];
  if (t == 0) return stab::Label::Half;
  const bool in_plus = (t == 1) != neg;
  return in_plus ? stab::Label::One : stab::Label::Zero;
}

}  // namespace cnotpac::cons::detail
