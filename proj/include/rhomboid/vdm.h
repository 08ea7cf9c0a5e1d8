#pragma once

#include <variant>

#include "rhomboid/expression.h"
#include "rhomboid/graph.h"
#include "rhomboid/shapes.h"
#include "rhomboid/types.h"

namespace rhomboid {

// A subgraph of a square rhomboid (family sr) or full square rhomboid
// (family fsr) given by its source and sink vertex.
class SubgraphSpec {
 public:
  // Throws InvalidSpecError for other families, non-positive indices, or a
  // sink that does not lie at least one column right of the source.
  static SubgraphSpec Make(Family family, VertexRef src, VertexRef dst);
  // The size-n subgraph of the given shape whose leftmost column is 1.
  static SubgraphSpec Canonical(Family family, Shape shape, int n);

  Family family() const { return family_; }
  VertexRef src() const { return src_; }
  VertexRef dst() const { return dst_; }

  Shape shape() const;
  // Basic vertices spanned: q-p+1 when the source is basic, q-p otherwise.
  int size() const;
  // Index of the first spanned basic vertex.
  int first_basic() const;
  // Smallest rhomboid of this family containing the subgraph.
  int host_size() const;
  StDag BuildHost() const;

  friend auto operator<=>(const SubgraphSpec&, const SubgraphSpec&) = default;

 private:
  SubgraphSpec(Family f, VertexRef s, VertexRef d) : family_(f), src_(s), dst_(d) {}

  Family family_;
  VertexRef src_;
  VertexRef dst_;
};

inline Shape ShapeOf(const SubgraphSpec& spec) { return spec.shape(); }

struct VertexPair {
  VertexRef upper;
  VertexRef lower;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};
using SplitVertex = std::variant<VertexPair, VertexRef>;

// Decomposition vertex of the first step `method` takes on `spec`: an
// upper/lower pair for two-vertex steps, a basic vertex for one-vertex
// steps. Throws NoSplitError when that step is a base case.
SplitVertex SplitVertexOf(const SubgraphSpec& spec, Method method);

// Direct expression of a one-column subgraph. Throws NotBaseCaseError for
// larger subgraphs.
Expr BaseExpression(const SubgraphSpec& spec);

// Normalized expression of `spec` built by recursive decomposition.
Expr Generate(const SubgraphSpec& spec, Method method);

}  // namespace rhomboid
