#include "rhomboid/equivalence.h"

#include <stdexcept>

#include "rhomboid/errors.h"

namespace rhomboid {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t DeriveResidue(EdgeLabel label, std::uint64_t modulus, std::uint64_t seed) {
  std::uint64_t key = (static_cast<std::uint64_t>(label.ordinal) << 8) |
                      static_cast<std::uint64_t>(static_cast<unsigned char>(label.series));
  std::uint64_t h = SplitMix64(SplitMix64(seed) ^ SplitMix64(key + 0x632be59bd9b4e019ull));
  return 1 + h % (modulus - 1);
}

std::uint64_t EvalModImpl(const Expr& e, const LabelAssignment& asg,
                          std::unordered_map<const void*, std::uint64_t>& memo) {
  if (auto it = memo.find(e.node_id()); it != memo.end()) return it->second;
  const std::uint64_t m = asg.modulus();
  std::uint64_t v = 0;
  switch (e.kind()) {
    case Expr::Kind::kOne: v = 1; break;
    case Expr::Kind::kLiteral: v = asg.Residue(e.label()); break;
    case Expr::Kind::kSum:
      for (const Expr& c : e.children()) v = AddMod(v, EvalModImpl(c, asg, memo), m);
      break;
    case Expr::Kind::kProduct:
      v = 1;
      for (const Expr& c : e.children()) v = MulMod(v, EvalModImpl(c, asg, memo), m);
      break;
  }
  memo.emplace(e.node_id(), v);
  return v;
}

std::vector<EdgeLabel> UnionLabels(const Expr& a, const Expr& b) {
  std::vector<EdgeLabel> la = CollectLabels(a);
  std::vector<EdgeLabel> lb = CollectLabels(b);
  la.insert(la.end(), lb.begin(), lb.end());
  return la;
}

bool RandomizedVerdict(const Expr& a, const Expr& b, const RandomizedOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<EdgeLabel> labels = UnionLabels(a, b);
  for (int t = 0; t < opt.trials; ++t) {
    auto asg = LabelAssignment::ForLabels(labels, opt.modulus, opt.seed + t);
    if (EvalMod(a, asg) != EvalMod(b, asg)) return false;
  }
  return true;
}

}  // namespace

LabelAssignment LabelAssignment::ForLabels(std::span<const EdgeLabel> labels,
                                           std::uint64_t modulus, std::uint64_t seed) {
  if (modulus >= (std::uint64_t{1} << 63) || !IsPrime(modulus)) {
    throw std::invalid_argument("modulus must be a prime below 2^63");
  }
  LabelAssignment asg(modulus, seed);
  for (EdgeLabel l : labels) asg.residues_[l] = DeriveResidue(l, modulus, seed);
  return asg;
}

std::uint64_t LabelAssignment::Residue(EdgeLabel label) const {
  auto it = residues_.find(label);
  if (it == residues_.end()) {
    throw AssignmentIncompleteError("no residue assigned to " + LabelName(label));
  }
  return it->second;
}

void LabelAssignment::Set(EdgeLabel label, std::uint64_t residue) {
  if (residue == 0 || residue >= modulus_) {
    throw std::invalid_argument("residue must lie in [1, modulus-1]");
  }
  residues_[label] = residue;
}

std::uint64_t EvalMod(const Expr& e, const LabelAssignment& asg) {
  std::unordered_map<const void*, std::uint64_t> memo;
  return EvalModImpl(e, asg, memo);
}

bool Equivalent(const Expr& a, const Expr& b, const EquivalenceOptions& options) {
  if (options.mode == EquivalenceMode::kExact) {
    return Expand(a, options.expansion_bound) == Expand(b, options.expansion_bound);
  }
  return RandomizedVerdict(a, b, options.randomized);
}

EquivalenceReport CheckEquivalence(const Expr& a, const Expr& b,
                                   const EquivalenceOptions& options) {
  EquivalenceReport report;
  try {
    report.exact = Expand(a, options.expansion_bound) == Expand(b, options.expansion_bound);
  } catch (const ExpansionOverflowError&) {
    report.exact.reset();
  }
  report.randomized = RandomizedVerdict(a, b, options.randomized);
  return report;
}

OracleVerdict CheckAgainstPaths(const Expr& e, const StDag& g, VertexRef from, VertexRef to,
                                const EquivalenceOptions& options) {
  OracleVerdict verdict;
  for (EdgeLabel l : CollectLabels(e)) {
    if (!g.HasLabel(l)) {
      verdict.mode = options.mode;
      verdict.detail = "label " + LabelName(l) + " is not an edge of the graph";
      return verdict;
    }
  }

  const PathStats paths = CountPaths(g, from, to);
  const ExpansionSize expr_size = MeasureExpansion(e);
  const std::uint64_t bound = options.expansion_bound;
  const bool fits = paths.symbols <= bound && paths.paths <= bound &&
                    expr_size.symbols <= bound && expr_size.monomials <= bound;

  if (options.mode == EquivalenceMode::kExact && fits) {
    verdict.mode = EquivalenceMode::kExact;
    MonomialMultiset oracle;
    for (PathMonomial& p : EnumeratePaths(g, from, to)) oracle[std::move(p.labels)] += 1;
    verdict.equivalent = Expand(e, bound) == oracle;
    if (!verdict.equivalent) {
      verdict.detail = "monomial multisets differ (" + std::to_string(paths.paths) +
                       " paths vs " + std::to_string(expr_size.monomials) + " monomials)";
    }
    return verdict;
  }

  verdict.mode = EquivalenceMode::kRandomized;
  std::vector<EdgeLabel> labels;
  for (const Edge& edge : g.edges()) labels.push_back(edge.label);
  const RandomizedOptions& opt = options.randomized;
  if (opt.trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (int t = 0; t < opt.trials; ++t) {
    auto asg = LabelAssignment::ForLabels(labels, opt.modulus, opt.seed + t);
    std::uint64_t lhs = EvalMod(e, asg);
    std::uint64_t rhs = EvalPathsMod(g, from, to, opt.modulus,
                                     [&](EdgeLabel l) { return asg.Residue(l); });
    if (lhs != rhs) {
      verdict.detail = "residues differ at seed " + std::to_string(opt.seed + t);
      return verdict;
    }
  }
  verdict.equivalent = true;
  return verdict;
}

}  // namespace rhomboid
