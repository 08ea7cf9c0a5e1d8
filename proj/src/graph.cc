#include "rhomboid/graph.h"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "rhomboid/errors.h"
#include "rhomboid/modarith.h"

namespace rhomboid {

std::string VertexName(VertexRef v) {
  char prefix = v.tier == Tier::kBasic ? 'B' : v.tier == Tier::kUpper ? 'U' : 'L';
  return prefix + std::to_string(v.index);
}

std::optional<Series> SeriesFromChar(char c) {
  if (c < 'a' || c > 'g') return std::nullopt;
  return static_cast<Series>(c);
}

int SeriesRank(Series s) {
  switch (s) {
    case Series::kB: return 0;
    case Series::kE: return 1;
    case Series::kD: return 2;
    case Series::kC: return 3;
    case Series::kA: return 4;
    case Series::kF: return 5;
    case Series::kG: return 6;
  }
  return 7;
}

std::string LabelName(EdgeLabel label) {
  std::string s(1, static_cast<char>(label.series));
  if (label.ordinal > 0) s += std::to_string(label.ordinal);
  return s;
}

std::string FamilyName(Family f) {
  switch (f) {
    case Family::kFsr: return "fsr";
    case Family::kSr: return "sr";
    case Family::kFibonacci: return "fibonacci";
    case Family::kGeneric: return "generic";
  }
  return "?";
}

StDag StDag::Create(Family family, int size, std::vector<Edge> edges,
                    VertexRef source, VertexRef sink) {
  StDag g;
  g.family_ = family;
  g.size_ = size;
  g.source_ = source;
  g.sink_ = sink;

  std::set<VertexRef> vs{source, sink};
  std::set<EdgeLabel> labels;
  for (const Edge& e : edges) {
    if (e.from.index < 1 || e.to.index < 1) {
      throw InvalidGraphError("vertex index must be positive");
    }
    if (!labels.insert(e.label).second) {
      throw InvalidGraphError("duplicate edge label " + LabelName(e.label));
    }
    vs.insert(e.from);
    vs.insert(e.to);
  }
  g.vertices_.assign(vs.begin(), vs.end());
  for (int i = 0; i < static_cast<int>(g.vertices_.size()); ++i) {
    g.ids_[g.vertices_[i]] = i;
  }
  const int nv = static_cast<int>(g.vertices_.size());
  g.out_.assign(nv, {});
  std::vector<int> indeg(nv, 0);
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    int u = g.ids_[edges[k].from];
    int w = g.ids_[edges[k].to];
    g.out_[u].push_back(k);
    ++indeg[w];
  }
  g.edges_ = std::move(edges);

  // Kahn's algorithm; a leftover vertex means a cycle.
  std::vector<int> pending = indeg;
  std::vector<int> queue;
  for (int v = 0; v < nv; ++v) {
    if (pending[v] == 0) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    g.topo_.push_back(g.vertices_[v]);
    for (int k : g.out_[v]) {
      int w = g.ids_[g.edges_[k].to];
      if (--pending[w] == 0) queue.push_back(w);
    }
  }
  if (static_cast<int>(g.topo_.size()) != nv) {
    throw InvalidGraphError("graph contains a cycle");
  }

  for (int v = 0; v < nv; ++v) {
    VertexRef ref = g.vertices_[v];
    if (indeg[v] == 0 && ref != source) {
      throw InvalidGraphError("extra source vertex " + VertexName(ref));
    }
    if (g.out_[v].empty() && ref != sink) {
      throw InvalidGraphError("extra sink vertex " + VertexName(ref));
    }
  }
  if (indeg[g.ids_[source]] != 0) throw InvalidGraphError("source has incoming edges");
  if (!g.out_[g.ids_[sink]].empty()) throw InvalidGraphError("sink has outgoing edges");
  // With a unique in-degree-0 source and a unique out-degree-0 sink in a DAG,
  // every vertex is reachable from the source and reaches the sink.
  return g;
}

int StDag::VertexId(VertexRef v) const {
  auto it = ids_.find(v);
  if (it == ids_.end()) throw LookupError("unknown vertex " + VertexName(v));
  return it->second;
}

bool StDag::Contains(VertexRef v) const { return ids_.contains(v); }

bool StDag::HasLabel(EdgeLabel label) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return e.label == label; });
}

std::span<const int> StDag::OutEdges(VertexRef v) const { return out_[VertexId(v)]; }

namespace {

StDag BuildRhomboid(int n, bool full) {
  if (n < 1) throw InvalidSizeError("invalid size: rhomboid size must be >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({Label(Series::kB, i), Basic(i), Basic(i + 1)});
  for (int i = 1; i < n; ++i) {
    edges.push_back({Label(Series::kE, 2 * i - 1), Basic(i), Upper(i)});
    edges.push_back({Label(Series::kE, 2 * i), Upper(i), Basic(i + 1)});
  }
  for (int i = 1; i < n; ++i) {
    edges.push_back({Label(Series::kD, 2 * i - 1), Basic(i), Lower(i)});
    edges.push_back({Label(Series::kD, 2 * i), Lower(i), Basic(i + 1)});
  }
  for (int i = 1; i + 1 < n; ++i) edges.push_back({Label(Series::kC, i), Upper(i), Upper(i + 1)});
  for (int i = 1; i + 1 < n; ++i) edges.push_back({Label(Series::kA, i), Lower(i), Lower(i + 1)});
  if (full) {
    for (int i = 1; i + 1 < n; ++i) edges.push_back({Label(Series::kF, i), Lower(i), Upper(i + 1)});
    for (int i = 1; i + 1 < n; ++i) edges.push_back({Label(Series::kG, i), Upper(i), Lower(i + 1)});
  }
  return StDag::Create(full ? Family::kFsr : Family::kSr, n, std::move(edges), Basic(1), Basic(n));
}

}  // namespace

StDag BuildFsr(int n) { return BuildRhomboid(n, true); }
StDag BuildSr(int n) { return BuildRhomboid(n, false); }

StDag BuildFibonacci(int m) {
  if (m < 2) throw InvalidSizeError("invalid size: Fibonacci graph needs >= 2 vertices");
  std::vector<Edge> edges;
  for (int v = 1; v < m; ++v) edges.push_back({Label(Series::kA, v), Basic(v), Basic(v + 1)});
  for (int v = 1; v + 1 < m; ++v) edges.push_back({Label(Series::kB, v), Basic(v), Basic(v + 2)});
  return StDag::Create(Family::kFibonacci, m, std::move(edges), Basic(1), Basic(m));
}

StDag BuildSeriesParallelExample() {
  std::vector<Edge> edges{
      {Label(Series::kA, 0), Basic(1), Basic(2)}, {Label(Series::kB, 0), Basic(2), Basic(3)},
      {Label(Series::kC, 0), Basic(2), Basic(3)}, {Label(Series::kD, 0), Basic(3), Basic(4)},
      {Label(Series::kE, 0), Basic(3), Basic(4)}, {Label(Series::kF, 0), Basic(1), Basic(3)},
  };
  return StDag::Create(Family::kGeneric, 4, std::move(edges), Basic(1), Basic(4));
}

std::vector<PathMonomial> EnumeratePaths(const StDag& g, VertexRef from, VertexRef to) {
  if (!g.Contains(from)) throw LookupError("unknown vertex " + VertexName(from));
  if (!g.Contains(to)) throw LookupError("unknown vertex " + VertexName(to));

  std::vector<PathMonomial> paths;
  // Explicit DFS stack of (vertex, next out-edge position).
  struct Frame {
    VertexRef vertex;
    std::size_t next = 0;
  };
  std::vector<Frame> stack{{from}};
  std::vector<EdgeLabel> current;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.vertex == to) {
      paths.push_back({current});
      stack.pop_back();
      if (!current.empty()) current.pop_back();
      continue;
    }
    auto out = g.OutEdges(top.vertex);
    if (top.next == out.size()) {
      stack.pop_back();
      if (!current.empty()) current.pop_back();
      continue;
    }
    const Edge& e = g.edges()[out[top.next++]];
    current.push_back(e.label);
    stack.push_back({e.to});
  }
  return paths;
}

namespace {

std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

}  // namespace

PathStats CountPaths(const StDag& g, VertexRef from, VertexRef to) {
  if (!g.Contains(from)) throw LookupError("unknown vertex " + VertexName(from));
  if (!g.Contains(to)) throw LookupError("unknown vertex " + VertexName(to));
  // Suffix DP in reverse topological order: stats of paths v -> to.
  std::map<VertexRef, PathStats> stats;
  const auto& topo = g.TopologicalOrder();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    PathStats s;
    if (*it == to) {
      s.paths = 1;
    } else {
      for (int k : g.OutEdges(*it)) {
        const PathStats& t = stats[g.edges()[k].to];
        s.paths = SatAdd(s.paths, t.paths);
        s.symbols = SatAdd(s.symbols, SatAdd(t.symbols, t.paths));
      }
    }
    stats[*it] = s;
  }
  return stats[from];
}

std::uint64_t EvalPathsMod(const StDag& g, VertexRef from, VertexRef to,
                           std::uint64_t modulus,
                           const std::function<std::uint64_t(EdgeLabel)>& residue) {
  if (!g.Contains(from)) throw LookupError("unknown vertex " + VertexName(from));
  if (!g.Contains(to)) throw LookupError("unknown vertex " + VertexName(to));
  std::map<VertexRef, std::uint64_t> value;
  const auto& topo = g.TopologicalOrder();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    std::uint64_t v = 0;
    if (*it == to) {
      v = 1 % modulus;
    } else {
      for (int k : g.OutEdges(*it)) {
        const Edge& e = g.edges()[k];
        v = AddMod(v, MulMod(residue(e.label) % modulus, value[e.to], modulus), modulus);
      }
    }
    value[*it] = v;
  }
  return value[from];
}

std::string ExportDot(const StDag& g) {
  std::ostringstream os;
  os << "digraph " << FamilyName(g.family()) << g.size() << " {\n";
  os << "  rankdir=LR;\n";
  for (VertexRef v : g.vertices()) os << "  " << VertexName(v) << ";\n";
  for (const Edge& e : g.edges()) {
    os << "  " << VertexName(e.from) << " -> " << VertexName(e.to) << " [label=\""
       << LabelName(e.label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Expr CanonicalExpression(const StDag& g, VertexRef from, VertexRef to) {
  std::vector<PathMonomial> paths = EnumeratePaths(g, from, to);
  if (paths.empty()) {
    throw LookupError("no path from " + VertexName(from) + " to " + VertexName(to));
  }
  std::vector<Expr> terms;
  terms.reserve(paths.size());
  for (const PathMonomial& p : paths) {
    std::vector<Expr> factors;
    for (EdgeLabel l : p.labels) factors.push_back(Expr::Literal(l));
    terms.push_back(Expr::Product(std::move(factors)));
  }
  return Expr::Sum(std::move(terms));
}

Expr CanonicalExpression(const StDag& g) { return CanonicalExpression(g, g.source(), g.sink()); }

}  // namespace rhomboid
