#include "cnotpac/consistency/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>
#include <vector>

#include "cnotpac/error.hpp"
#include "compiled.hpp"

namespace cnotpac::cons {

using detail::Mask;
using stab::Label;

const char* outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::NoneExists: return "none";
    case SearchOutcome::OracleFault: return "oracle-fault";
  }
  return "?";
}

std::optional<std::size_t> first_violation(const CliffordTableau& h, const SampleSet& s) {
  if (h.num_qubits() != s.n) throw DimensionMismatch("hypothesis and sample set qubit counts differ");
  for (std::size_t i = 0; i < s.samples.size(); ++i)
    if (cliff::evaluate_sample(h, s.samples[i]) != s.samples[i].label) return i;
  return std::nullopt;
}

bool check_consistent(const CliffordTableau& h, const SampleSet& s) { return !first_violation(h, s).has_value(); }

bool check_consistent(const CnotCircuit& h, const SampleSet& s) {
  const auto t = h.tableau();
  if (!t.gamma_block().is_zero() || !t.beta_block().is_zero() || !t.p_signs().is_zero()) return false;
  return check_consistent(t, s);
}

namespace {

using Clock = std::chrono::steady_clock;

// Columns of G^{-T} from the columns of G, by Gauss-Jordan on G^T.
void inverse_transpose(std::size_t n, const Mask* cols, Mask* out) {
  // Row c of G^T is cols[c]. Reduce [G^T | I]; the right half becomes
  // (G^T)^{-1} = G^{-T}, whose rows are then transposed into columns.
  Mask a[8], inv[8];
  for (std::size_t c = 0; c < n; ++c) {
    a[c] = cols[c];
    inv[c] = Mask{1} << c;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (!((a[p] >> c) & 1U)) ++p;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && ((a[r] >> c) & 1U)) {
        a[r] ^= a[c];
        inv[r] ^= inv[c];
      }
  }
  for (std::size_t j = 0; j < n; ++j) {
    Mask col = 0;
    for (std::size_t r = 0; r < n; ++r)
      if ((inv[r] >> j) & 1U) col |= Mask{1} << r;
    out[j] = col;
  }
}

// Row of the sign system, pivot at its lowest set bit.
struct Parity {
  Mask pz;
  bool r;
};

class Searcher {
 public:
  Searcher(const detail::CompiledSet& cs, const std::atomic<std::uint64_t>& best)
      : cs_(cs), n_(cs.n), best_(best), by_column_(cs.n) {
    for (const auto& s : cs.zs) by_column_[s.last_column].push_back(&s);
  }

  // Explores the subtree where column 0 equals e_0 ^ k0.
  bool run(std::uint64_t k0) {
    k0_ = k0;
    const Mask v = static_cast<Mask>(1U ^ k0);
    if (v == 0) return false;
    return place(0, v);
  }

  SearchStats stats;
  Mask cols[8] = {};
  Mask qt = 0;

 private:
  bool place(std::size_t c, Mask v) {
    ++stats.nodes;
    cols[c] = v;
    const std::size_t np = parities_.size();
    for (const auto* s : by_column_[c]) {
      Mask z = 0;
      for (Mask m = s->pz; m; m &= m - 1) z ^= cols[__builtin_ctz(m)];
      const std::uint8_t t = s->table[static_cast<std::size_t>(z) << n_];
      if ((t == 0) != (s->label == Label::Half)) {
        ++stats.pruned;
        parities_.resize(np);
        return false;
      }
      // sign of the pulled-back Pauli must make it land in the labelled coset
      if (t != 0 && !add_parity(s->pz, s->pneg != ((t == 1) != (s->label == Label::One)))) {
        ++stats.pruned;
        parities_.resize(np);
        return false;
      }
    }
    const bool found = c + 1 == n_ ? leaf() : descend(c + 1);
    if (!found) parities_.resize(np);
    return found;
  }

  // Adds qt . pz = r to the echelon of sign constraints; false on a conflict.
  bool add_parity(Mask pz, bool r) {
    for (const auto& p : parities_)
      if (pz & (p.pz & -p.pz)) {
        pz ^= p.pz;
        r ^= p.r;
      }
    if (pz == 0) return !r;
    parities_.push_back({pz, r});
    return true;
  }

  bool descend(std::size_t c) {
    // Echelon basis of the columns fixed so far, for the rank filter.
    Mask basis[8];
    std::size_t nb = 0;
    for (std::size_t i = 0; i < c; ++i) {
      Mask v = cols[i];
      for (std::size_t b = 0; b < nb; ++b) v = std::min(v, v ^ basis[b]);
      basis[nb++] = v;
      std::sort(basis, basis + nb, [](Mask a, Mask b) { return a > b; });
    }
    const Mask ec = Mask{1} << c;
    for (Mask k = 0; k < (Mask{1} << n_); ++k) {
      if ((stats.nodes & 1023U) == 0 && best_.load(std::memory_order_relaxed) < k0_) return false;
      const Mask v = ec ^ k;
      Mask r = v;
      for (std::size_t b = 0; b < nb; ++b) r = std::min(r, r ^ basis[b]);
      if (r == 0) continue;
      if (place(c, v)) return true;
    }
    return false;
  }

  bool leaf() {
    ++stats.full_rank;
    Mask xt[8];
    if (!cs_.other.empty()) inverse_transpose(n_, cols, xt);
    for (Mask q = 0; q < (Mask{1} << n_); ++q) {
      bool ok = true;
      for (const auto& p : parities_)
        if (((__builtin_popcount(q & p.pz) & 1) != 0) != p.r) {
          ok = false;
          break;
        }
      if (!ok) continue;
      ++stats.examined;
      for (const auto& s : cs_.other)
        if (detail::evaluate(s, n_, cols, xt, q) != s.label) {
          ok = false;
          break;
        }
      if (ok) {
        qt = q;
        return true;
      }
    }
    return false;
  }

  const detail::CompiledSet& cs_;
  std::size_t n_;
  const std::atomic<std::uint64_t>& best_;
  std::uint64_t k0_ = 0;
  std::vector<std::vector<const detail::CompiledSample*>> by_column_;
  std::vector<Parity> parities_;
};

void add(SearchStats& a, const SearchStats& b) {
  a.nodes += b.nodes;
  a.full_rank += b.full_rank;
  a.examined += b.examined;
  a.pruned += b.pruned;
}

}  // namespace

SearchResult brute_force_search(const SampleSet& s, const SearchOptions& opt) {
  const auto start = Clock::now();
  const std::size_t n = s.n;
  if (n > opt.max_n || n > 8)
    throw EnumerationLimit("enumeration limit: brute force supports n <= " + std::to_string(std::min<std::size_t>(opt.max_n, 8)) +
                           ", got n = " + std::to_string(n));
  SearchResult res;
  if (n == 0) {
    res.outcome = SearchOutcome::Found;
    res.circuit = CnotCircuit(0, {});
    return res;
  }
  const detail::CompiledSet cs = detail::compile(s);
  const std::uint64_t top = std::uint64_t{1} << n;

  std::atomic<std::uint64_t> best{top};
  std::atomic<std::uint64_t> next{0};
  std::vector<SearchStats> per_k0(top);
  std::vector<Mask> found_cols(n);
  Mask found_qt = 0;
  std::mutex mu;

  auto work = [&] {
    for (;;) {
      const std::uint64_t k0 = next.fetch_add(1);
      if (k0 >= top || k0 > best.load()) return;
      Searcher sr(cs, best);
      const bool ok = sr.run(k0);
      per_k0[k0] = sr.stats;
      if (ok) {
        std::lock_guard<std::mutex> lock(mu);
        if (k0 < best.load()) {
          best.store(k0);
          std::copy(sr.cols, sr.cols + n, found_cols.begin());
          found_qt = sr.qt;
        }
        return;
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, opt.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Statistics of the subtrees up to and including the winning one; these do
  // not depend on how the work was split.
  const std::uint64_t b = best.load();
  for (std::uint64_t k = 0; k < std::min(b + 1, top); ++k) add(res.stats, per_k0[k]);
  if (b < top) {
    BitMatrix g(n, n);
    for (std::size_t c = 0; c < n; ++c) g.set_column(c, BitVector::from_uint(n, found_cols[c]));
    CnotCircuit circuit = CnotCircuit::from_pullback(g, BitVector::from_uint(n, found_qt));
    if (!check_consistent(circuit, s)) throw std::logic_error("brute-force witness failed re-verification");
    res.outcome = SearchOutcome::Found;
    res.circuit = std::move(circuit);
  } else {
    res.outcome = SearchOutcome::NoneExists;
  }
  res.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

std::optional<BitVector> affine_family_search(const red::NonSingularityInstance& inst) {
  const std::size_t k = inst.num_vars();
  if (k > 24) throw EnumerationLimit("enumeration limit: affine search supports at most 24 variables");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
    BitVector assignment(k);
    for (std::size_t i = 0; i < k; ++i)
      if ((a >> (k - 1 - i)) & 1U) assignment.set(i);
    if (f2::determinant(inst.evaluate(assignment))) return assignment;
  }
  return std::nullopt;
}

SearchResult search_from_decision(const DecisionOracle& decide, const SampleSet& s) {
  const auto start = Clock::now();
  const std::size_t n = s.n;
  SearchResult res;
  auto ask = [&](const SampleSet& t) {
    ++res.stats.oracle_calls;
    return decide(t);
  };
  auto finish = [&] {
    res.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return res;
  };
  if (!ask(s)) {
    res.outcome = SearchOutcome::NoneExists;
    return finish();
  }

  SampleSet cur = s;
  BitMatrix g(n, n);
  BitVector qt(n);
  for (std::size_t c = 0; c < n; ++c) {
    const stab::PauliOperator zc = stab::PauliOperator::z_power(BitVector::unit(n, c));
    // |0...0> answers 1 exactly when the pulled-back sign of Z_c is +.
    LabeledSample sign{stab::StabilizerState::zero(n), zc, Label::One};
    SampleSet trial = cur;
    trial.add(sign);
    if (!ask(trial)) {
      qt.set(c);
      sign.label = Label::Zero;
      trial = cur;
      trial.add(sign);
    }
    cur = std::move(trial);
    // |e_r> answers 1 exactly when bit r of column c equals the sign bit.
    for (std::size_t r = 0; r < n; ++r) {
      LabeledSample bit{stab::StabilizerState::basis(BitVector::unit(n, r)), zc,
                        qt.get(c) ? Label::Zero : Label::One};
      trial = cur;
      trial.add(bit);
      if (!ask(trial)) {
        g.set(r, c);
        bit.label = bit.label == Label::One ? Label::Zero : Label::One;
        trial = cur;
        trial.add(bit);
      }
      cur = std::move(trial);
    }
  }
  if (f2::rank(g) < n) {
    res.outcome = SearchOutcome::OracleFault;
    return finish();
  }
  CnotCircuit circuit = CnotCircuit::from_pullback(g, qt);
  if (!check_consistent(circuit, s)) {
    res.outcome = SearchOutcome::OracleFault;
    return finish();
  }
  res.outcome = SearchOutcome::Found;
  res.circuit = std::move(circuit);
  return finish();
}

DecisionOracle brute_force_decider(const SearchOptions& opt) {
  return [opt](const SampleSet& s) { return brute_force_search(s, opt).outcome == SearchOutcome::Found; };
}

}  // namespace cnotpac::cons
