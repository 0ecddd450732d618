#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "cnotpac/clifford/cnot.hpp"
#include "cnotpac/reduction/graph.hpp"

namespace cnotpac::cons {

using cliff::CliffordTableau;
using cliff::CnotCircuit;
using f2::BitMatrix;
using f2::BitVector;

/// True iff the hypothesis reproduces every label.
bool check_consistent(const CliffordTableau& h, const SampleSet& s);
/// Also confirms the tableau has the CNOT shape (gamma = 0, beta = 0, p = 0).
bool check_consistent(const CnotCircuit& h, const SampleSet& s);
/// Index of the first sample the hypothesis mislabels.
std::optional<std::size_t> first_violation(const CliffordTableau& h, const SampleSet& s);

enum class SearchOutcome { Found, NoneExists, OracleFault };
const char* outcome_name(SearchOutcome o);

struct SearchStats {
  std::uint64_t nodes = 0;       // partial pullbacks visited
  std::uint64_t full_rank = 0;   // complete invertible pullbacks reached
  std::uint64_t examined = 0;    // (pullback, signs) pairs tested against all samples
  std::uint64_t pruned = 0;      // subtrees cut by a sample check
  std::uint64_t oracle_calls = 0;
  double wall_seconds = 0;       // never part of any digest
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::NoneExists;
  std::optional<CnotCircuit> circuit;
  SearchStats stats;
};

struct SearchOptions {
  std::size_t workers = 1;
  std::size_t max_n = 5;
};

/// Exhaustive search over CNOT circuits as (pullback G, pullback signs qt).
/// Column c of G ranges over e_c ^ k for k = 0, 1, ... (so the identity comes
/// first), columns are fixed in order 0..n-1 and qt is innermost. Returns the
/// first consistent circuit in that order for any number of workers. Throws
/// EnumerationLimit when n > max_n.
SearchResult brute_force_search(const SampleSet& s, const SearchOptions& opt = {});

/// First assignment, counting with alpha_1 as the most significant bit, whose
/// M(a) is invertible. Throws EnumerationLimit for more than 24 variables.
std::optional<BitVector> affine_family_search(const red::NonSingularityInstance& inst);

using DecisionOracle = std::function<bool(const SampleSet&)>;

/// Search via a decision oracle only: pins each pullback sign and column bit
/// by appending basis-state samples and asking the oracle which completion
/// stays satisfiable. OracleFault when the assembled candidate is singular or
/// inconsistent.
SearchResult search_from_decision(const DecisionOracle& decide, const SampleSet& s);

/// decide(S) := brute_force_search(S).outcome == Found.
DecisionOracle brute_force_decider(const SearchOptions& opt = {});

}  // namespace cnotpac::cons
