#include "cnotpac/reduction/graph.hpp"

#include "cnotpac/error.hpp"

namespace cnotpac::red {

namespace {

struct Builder {
  VertexOrder order;
  std::vector<Edge> edges;
  std::size_t next = 0;
  // Internal vertices in their final order; ids from fresh() are provisional.
  std::vector<std::size_t> sequence;

  std::size_t fresh() { return next++; }

  // Adds the gadget for f between existing vertices s and t.
  void build(const ArithFormula& f, std::size_t s, std::size_t t) {
    using K = ArithFormula::Kind;
    switch (f.kind()) {
      case K::Constant:
      case K::Variable: {
        const std::size_t v = fresh();
        sequence.push_back(v);
        if (f.kind() == K::Variable)
          edges.push_back({s, v, f.index()});
        else if (f.value())
          edges.push_back({s, v, 0});
        edges.push_back({v, t, 0});
        break;
      }
      case K::Sum:
        build(f.left(), s, t);
        build(f.right(), s, t);
        break;
      case K::Product: {
        const std::size_t j = fresh();
        if (order == VertexOrder::Creation) sequence.push_back(j);
        build(f.left(), s, j);
        if (order == VertexOrder::WorkedExample) sequence.push_back(j);
        build(f.right(), j, t);
        break;
      }
    }
  }
};

}  // namespace

WeightedDigraph formula_to_graph(const ArithFormula& f, VertexOrder order) {
  Builder b{order, {}, 0, {}};
  const std::size_t s = b.fresh();
  const std::size_t t = b.fresh();
  b.build(f, s, t);

  // Final numbering.
  std::vector<std::size_t> pos(b.next);
  std::vector<std::size_t> seq;
  seq.push_back(s);
  if (order == VertexOrder::Creation) seq.push_back(t);
  seq.insert(seq.end(), b.sequence.begin(), b.sequence.end());
  if (order == VertexOrder::WorkedExample) seq.push_back(t);
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = i;

  WeightedDigraph g;
  g.num_vertices = b.next;
  g.s = pos[s];
  g.t = pos[t];
  g.num_vars = f.max_variable();
  for (const auto& e : b.edges) g.edges.push_back({pos[e.from], pos[e.to], e.var});
  g.edges.push_back({g.t, g.s, 0});
  for (std::size_t v = 0; v < g.num_vertices; ++v)
    if (v != g.s) g.edges.push_back({v, v, 0});
  return g;
}

BitMatrix NonSingularityInstance::evaluate(const BitVector& assignment) const {
  if (assignment.size() != ms.size()) throw DimensionMismatch("assignment length differs from variable count");
  BitMatrix m = m0;
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (assignment.get(i)) m ^= ms[i];
  return m;
}

std::vector<std::size_t> NonSingularityInstance::support_columns(std::size_t i) const {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < size; ++c)
    if (!ms[i].column(c).is_zero()) cols.push_back(c);
  return cols;
}

NonSingularityInstance graph_to_instance(const WeightedDigraph& g) {
  NonSingularityInstance inst;
  inst.size = g.num_vertices;
  inst.m0 = BitMatrix(g.num_vertices, g.num_vertices);
  inst.ms.assign(g.num_vars, BitMatrix(g.num_vertices, g.num_vertices));
  for (const auto& e : g.edges) {
    BitMatrix& target = e.var == 0 ? inst.m0 : inst.ms[e.var - 1];
    if (target.get(e.from, e.to)) throw PreconditionViolation("parallel edges with the same weight");
    target.set(e.from, e.to);
  }
  return inst;
}

bool validate_simplified(const NonSingularityInstance& inst) {
  const std::size_t n = inst.size;
  if (inst.m0.rows() != n || inst.m0.cols() != n) return false;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < inst.ms.size(); ++i) {
    if (inst.ms[i].rows() != n || inst.ms[i].cols() != n) return false;
    for (std::size_t c : inst.support_columns(i)) {
      if (used[c]) return false;
      used[c] = true;
      const BitVector v = inst.m0.column(c), w = inst.ms[i].column(c);
      if (v.is_zero() || v == w) return false;
    }
  }
  return true;
}

}  // namespace cnotpac::red
