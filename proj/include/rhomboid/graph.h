#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rhomboid/expression.h"
#include "rhomboid/types.h"

namespace rhomboid {

enum class Family : std::uint8_t { kFsr, kSr, kFibonacci, kGeneric };

std::string FamilyName(Family f);

struct Edge {
  EdgeLabel label;
  VertexRef from;
  VertexRef to;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Ordered label sequence of one directed path.
struct PathMonomial {
  std::vector<EdgeLabel> labels;

  std::size_t size() const { return labels.size(); }
  friend auto operator<=>(const PathMonomial&, const PathMonomial&) = default;
};

// A labeled two-terminal DAG. Instances are immutable and validated on
// construction: acyclic, unique source and sink, every vertex on some
// source-to-sink path, labels unique.
class StDag {
 public:
  static StDag Create(Family family, int size, std::vector<Edge> edges,
                      VertexRef source, VertexRef sink);

  Family family() const { return family_; }
  int size() const { return size_; }
  VertexRef source() const { return source_; }
  VertexRef sink() const { return sink_; }

  // Sorted by (tier, index).
  std::span<const VertexRef> vertices() const { return vertices_; }
  // Insertion order.
  std::span<const Edge> edges() const { return edges_; }

  bool Contains(VertexRef v) const;
  bool HasLabel(EdgeLabel label) const;

  // Indices into edges(), in insertion order.
  std::span<const int> OutEdges(VertexRef v) const;

  // Vertices in a topological order (source first).
  const std::vector<VertexRef>& TopologicalOrder() const { return topo_; }

 private:
  StDag() = default;
  int VertexId(VertexRef v) const;  // throws LookupError

  Family family_ = Family::kGeneric;
  int size_ = 0;
  VertexRef source_;
  VertexRef sink_;
  std::vector<VertexRef> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<VertexRef> topo_;
  std::map<VertexRef, int> ids_;
};

// Full square rhomboid with n basic vertices. Edges are inserted grouped by
// series in the order b, e, d, c, a, f, g.
StDag BuildFsr(int n);
// FSR(n) without the crossing f/g edges.
StDag BuildSr(int n);
// Vertices 1..m, edges a_v: v->v+1 and b_v: v->v+2.
StDag BuildFibonacci(int m);
// The four-vertex series-parallel example with unindexed labels a..f:
// canonical expression abd+abe+acd+ace+fd+fe.
StDag BuildSeriesParallelExample();

// All directed paths between two vertices in DFS order (out-edges tried in
// insertion order). A single empty path when from == to.
std::vector<PathMonomial> EnumeratePaths(const StDag& g, VertexRef from,
                                         VertexRef to);

// Path count and total label count over all from->to paths, computed by
// dynamic programming over the DAG. Saturates at UINT64_MAX.
struct PathStats {
  std::uint64_t paths = 0;
  std::uint64_t symbols = 0;
};
PathStats CountPaths(const StDag& g, VertexRef from, VertexRef to);

// Sum over all from->to paths of the product of their label residues modulo
// `modulus`, computed without enumerating paths. `residue` must cover every
// edge label of g.
std::uint64_t EvalPathsMod(
    const StDag& g, VertexRef from, VertexRef to, std::uint64_t modulus,
    const std::function<std::uint64_t(EdgeLabel)>& residue);

std::string ExportDot(const StDag& g);

// Canonical expression of the whole graph: sum over source-to-sink paths of
// label products, in EnumeratePaths order. A single One for a one-vertex
// graph. Throws LookupError when `to` is unreachable from `from`.
Expr CanonicalExpression(const StDag& g);
Expr CanonicalExpression(const StDag& g, VertexRef from, VertexRef to);


}  // namespace rhomboid
