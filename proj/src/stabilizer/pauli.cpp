#include "cnotpac/stabilizer/pauli.hpp"

#include <stdexcept>

#include "cnotpac/error.hpp"

namespace cnotpac::stab {

namespace {
void require_same(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch("qubit counts differ: " + std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace

PauliOperator::PauliOperator(bool negative, BitVector x, BitVector z)
    : negative_(negative), x_(std::move(x)), z_(std::move(z)) {
  require_same(x_.size(), z_.size());
}

PauliOperator PauliOperator::z_power(const BitVector& v) { return PauliOperator(false, BitVector(v.size()), v); }

PauliOperator PauliOperator::x_power(const BitVector& v) { return PauliOperator(false, v, BitVector(v.size())); }

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, char letter, bool negative) {
  if (q >= n) throw DimensionMismatch("qubit index out of range");
  PauliOperator p(n);
  p.negative_ = negative;
  switch (letter) {
    case 'I': break;
    case 'X': p.x_.set(q); break;
    case 'Z': p.z_.set(q); break;
    case 'Y':
      p.x_.set(q);
      p.z_.set(q);
      break;
    default: throw ParseError(0, std::string("unknown Pauli letter '") + letter + "'");
  }
  return p;
}

PauliOperator PauliOperator::parse(const std::string& s) {
  std::size_t start = 0;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    start = 1;
  }
  const std::size_t n = s.size() - start;
  PauliOperator p(n);
  p.negative_ = neg;
  for (std::size_t i = 0; i < n; ++i) {
    const char c = s[start + i];
    if (c == 'X' || c == 'Y') p.x_.set(i);
    if (c == 'Z' || c == 'Y') p.z_.set(i);
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') throw ParseError(0, "bad Pauli string '" + s + "'");
  }
  return p;
}

PauliOperator PauliOperator::random(std::size_t n, Rng& rng) {
  BitVector x = BitVector::random(n, rng);
  BitVector z = BitVector::random(n, rng);
  return PauliOperator(coin(rng), std::move(x), std::move(z));
}

char PauliOperator::letter(std::size_t q) const {
  static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  return kLetters[(x_.get(q) ? 1 : 0) | (z_.get(q) ? 2 : 0)];
}

bool PauliOperator::operator<(const PauliOperator& o) const {
  if (x_ != o.x_) return x_ < o.x_;
  if (z_ != o.z_) return z_ < o.z_;
  return negative_ < o.negative_;
}

std::string PauliOperator::to_string() const {
  std::string s(1, negative_ ? '-' : '+');
  for (std::size_t q = 0; q < num_qubits(); ++q) s += letter(q);
  return s;
}

PhasedPauli& PhasedPauli::operator*=(const PhasedPauli& rhs) {
  require_same(x.size(), rhs.x.size());
  const unsigned e = x.size() == 0 ? 0U
                                   : f2::kernels::active().pauli_mul(x.words().data(), z.words().data(),
                                                                     rhs.x.words().data(), rhs.z.words().data(),
                                                                     x.words().size());
  phase = (phase + rhs.phase + e) & 3U;
  return *this;
}

PhasedPauli& PhasedPauli::operator*=(const PauliOperator& rhs) { return *this *= PhasedPauli(rhs); }

PauliOperator PhasedPauli::to_real() const {
  if (!is_real()) throw std::logic_error("Pauli product carries an imaginary phase");
  return PauliOperator(phase == 2, x, z);
}

PhasedPauli operator*(const PauliOperator& a, const PauliOperator& b) {
  PhasedPauli r(a);
  r *= b;
  return r;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  require_same(p.num_qubits(), q.num_qubits());
  return !(p.x().dot(q.z()) ^ p.z().dot(q.x()));
}

BitVector encode_pauli(const PauliOperator& p) {
  const std::size_t n = p.num_qubits();
  BitVector bits(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    bits.set(2 * i, p.x().get(i));
    bits.set(2 * i + 1, p.z().get(i));
  }
  bits.set(2 * n, p.negative());
  return bits;
}

PauliOperator decode_pauli(const BitVector& bits, std::size_t n) {
  if (bits.size() != 2 * n + 1)
    throw DimensionMismatch("encoded Pauli needs " + std::to_string(2 * n + 1) + " bits, got " +
                            std::to_string(bits.size()));
  PauliOperator p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.x().set(i, bits.get(2 * i));
    p.z().set(i, bits.get(2 * i + 1));
  }
  p.set_negative(bits.get(2 * n));
  return p;
}

}  // namespace cnotpac::stab
