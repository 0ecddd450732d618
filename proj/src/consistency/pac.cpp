#include "cnotpac/consistency/pac.hpp"

#include <cmath>
#include <set>

#include "cnotpac/error.hpp"

namespace cnotpac::cons {

SampleSource uniform_source(const SampleSet& s) {
  if (s.samples.empty()) throw PreconditionViolation("cannot draw from an empty sample set");
  return [samples = s.samples](Rng& rng) { return samples[uniform_below(rng, samples.size())]; };
}

SampleSource weighted_source(const SampleSet& s, std::vector<double> weights) {
  if (weights.size() != s.samples.size()) throw DimensionMismatch("one weight per sample is required");
  double total = 0;
  for (double w : weights) {
    if (!(w >= 0) || !std::isfinite(w)) throw PreconditionViolation("weights must be finite and non-negative");
    total += w;
  }
  if (!(total > 0)) throw PreconditionViolation("weights must not all be zero");
  std::vector<double> cumulative;
  double acc = 0;
  for (double w : weights) cumulative.push_back(acc += w / total);
  return [samples = s.samples, cumulative](Rng& rng) {
    // 53 random bits give a uniform double in [0, 1).
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    std::size_t i = 0;
    while (i + 1 < cumulative.size() && !(u < cumulative[i])) ++i;
    return samples[i];
  };
}

std::size_t coupon_draws(std::size_t s, double c) {
  if (s == 0) return 0;
  const double m = std::ceil(c * static_cast<double>(s) * std::log(static_cast<double>(s)));
  return std::max(s, static_cast<std::size_t>(m));
}

namespace {

// Total order on samples so duplicates can be dropped.
struct SampleLess {
  bool operator()(const LabeledSample& a, const LabeledSample& b) const {
    if (!(a.measurement == b.measurement)) return a.measurement < b.measurement;
    if (a.label != b.label) return a.label < b.label;
    return a.state.generators() < b.state.generators();
  }
};

}  // namespace

PacResult pac_learner(std::size_t n, const SampleSource& draw, std::size_t s, const SearchFn& search, Rng& rng,
                      double c) {
  if (!(c > 0)) throw PreconditionViolation("draw constant must be positive");
  PacResult out;
  out.draws = coupon_draws(s, c);
  SampleSet seen{n, {}};
  std::set<LabeledSample, SampleLess> distinct;
  for (std::size_t i = 0; i < out.draws; ++i) {
    LabeledSample smp = draw(rng);
    if (distinct.insert(smp).second) seen.add(std::move(smp));
  }
  out.observed = seen.size();
  SearchResult r = search(seen);
  out.outcome = r.outcome;
  out.hypothesis = std::move(r.circuit);
  out.stats = r.stats;
  return out;
}

PacResult pac_decide(const SampleSet& hidden, const SearchFn& search, Rng& rng, double c) {
  PacResult r = pac_learner(hidden.n, uniform_source(hidden), hidden.size(), search, rng, c);
  r.accepted = r.hypothesis && check_consistent(*r.hypothesis, hidden);
  return r;
}

LearningParameters LearningParameters::cnot_defaults(std::size_t n) {
  if (n < 2) throw PreconditionViolation("CNOT defaults need n >= 2");
  LearningParameters p;
  p.d = 2;
  p.depth = std::ceil(std::log2(static_cast<double>(n)));
  p.gates = static_cast<double>(n) * static_cast<double>(n);
  return p;
}

void LearningParameters::validate() const {
  if (!(epsilon > 0 && epsilon <= 1)) throw PreconditionViolation("epsilon must lie in (0, 1]");
  if (!(delta > 0 && delta < 1)) throw PreconditionViolation("delta must lie in (0, 1)");
  if (!(alpha >= 0 && alpha < 1 && beta <= 1)) throw PreconditionViolation("alpha must lie in [0, 1) and beta in (0, 1]");
  if (!(beta > alpha)) throw PreconditionViolation("beta must exceed alpha");
  if (!(d >= 1)) throw PreconditionViolation("locality d must be at least 1");
  if (!(depth >= 1)) throw PreconditionViolation("depth must be at least 1");
  if (!(gates >= 2)) throw PreconditionViolation("gate count must be at least 2");
}

double sample_complexity(const LearningParameters& p) {
  p.validate();
  const double size = p.depth * std::pow(p.d, 4) * p.gates * p.gates;
  const double inner = std::log(size * std::log(p.gates) / ((p.beta - p.alpha) * p.epsilon));
  return (size * std::log(p.depth) * inner * inner + std::log(1 / p.delta)) / p.epsilon;
}

}  // namespace cnotpac::cons
