#include "rhomboid/vdm.h"

#include <map>
#include <optional>

#include "rhomboid/complexity.h"
#include "rhomboid/errors.h"

namespace rhomboid {

SubgraphSpec SubgraphSpec::Make(Family family, VertexRef src, VertexRef dst) {
  if (family != Family::kFsr && family != Family::kSr) {
    throw InvalidSpecError("subgraph family must be fsr or sr");
  }
  if (src.index < 1 || dst.index < 1) throw InvalidSpecError("vertex index must be positive");
  const int first = IsHat(src.tier) ? src.index + 1 : src.index;
  if (dst.index < first) {
    throw InvalidSpecError("sink " + VertexName(dst) + " does not follow source " +
                           VertexName(src));
  }
  return SubgraphSpec(family, src, dst);
}

SubgraphSpec SubgraphSpec::Canonical(Family family, Shape shape, int n) {
  if (n < 1) throw InvalidSizeError("invalid size: subgraph size must be >= 1");
  switch (shape) {
    case Shape::kCore: return Make(family, Basic(1), Basic(n));
    case Shape::kLeafRightUp: return Make(family, Basic(1), Upper(n));
    case Shape::kLeafRightDown: return Make(family, Basic(1), Lower(n));
    case Shape::kLeafLeftUp: return Make(family, Upper(1), Basic(n + 1));
    case Shape::kLeafLeftDown: return Make(family, Lower(1), Basic(n + 1));
    case Shape::kParallelogram: return Make(family, Upper(1), Upper(n + 1));
    case Shape::kTrapezoid: return Make(family, Upper(1), Lower(n + 1));
  }
  throw InvalidSpecError("unknown shape");
}

Shape SubgraphSpec::shape() const {
  const bool src_hat = IsHat(src_.tier);
  const bool dst_hat = IsHat(dst_.tier);
  if (!src_hat && !dst_hat) return Shape::kCore;
  if (!src_hat) return dst_.tier == Tier::kUpper ? Shape::kLeafRightUp : Shape::kLeafRightDown;
  if (!dst_hat) return src_.tier == Tier::kUpper ? Shape::kLeafLeftUp : Shape::kLeafLeftDown;
  return src_.tier == dst_.tier ? Shape::kParallelogram : Shape::kTrapezoid;
}

int SubgraphSpec::first_basic() const { return IsHat(src_.tier) ? src_.index + 1 : src_.index; }

int SubgraphSpec::size() const { return dst_.index - first_basic() + 1; }

int SubgraphSpec::host_size() const { return IsHat(dst_.tier) ? dst_.index + 1 : dst_.index; }

StDag SubgraphSpec::BuildHost() const {
  return family_ == Family::kFsr ? BuildFsr(host_size()) : BuildSr(host_size());
}

namespace {

int SplitIndex(const SubgraphSpec& spec, Step step) {
  const int n = spec.size();
  const int part = step == Step::kOneVertex ? OneVertexSourcePart(spec.shape(), n)
                                            : TwoVertexSourcePart(spec.shape(), n);
  return spec.first_basic() + part - 1;
}

class Generator {
 public:
  Generator(Family family, Method method, int max_size)
      : family_(family), method_(method) {
    if (family_ == Family::kFsr && method_ != Method::kTwoVdm && max_size >= 3) {
      model_.emplace(method_, max_size);
    }
  }

  Expr Build(VertexRef src, VertexRef dst) {
    auto key = std::make_pair(src, dst);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const SubgraphSpec spec = SubgraphSpec::Make(family_, src, dst);
    Expr e;
    switch (StepFor(method_, ClassOf(spec.shape()), spec.size())) {
      case Step::kBase: e = BaseExpression(spec); break;
      case Step::kTwoVertex: e = TwoVertex(spec); break;
      case Step::kOneVertex: e = OneVertex(spec); break;
    }
    memo_.emplace(key, e);
    return e;
  }

 private:
  // E(p,i) b_i E(i+1,q) + E(p,i-upper) E(i-upper,q) + E(p,i-lower) E(i-lower,q)
  Expr TwoVertex(const SubgraphSpec& spec) {
    const int i = SplitIndex(spec, Step::kTwoVertex);
    VertexRef p = spec.src(), q = spec.dst();
    return Expr::Sum({
        Expr::Product({Build(p, Basic(i)), Lit(Series::kB, i), Build(Basic(i + 1), q)}),
        Expr::Product({Build(p, Upper(i)), Build(Upper(i), q)}),
        Expr::Product({Build(p, Lower(i)), Build(Lower(i), q)}),
    });
  }

  // Paths through basic i, or across column i via c_{i-1}, a_{i-1} and, in
  // an FSR, the crossing edges g_{i-1}, f_{i-1}.
  Expr OneVertex(const SubgraphSpec& spec) {
    const int i = SplitIndex(spec, Step::kOneVertex);
    VertexRef p = spec.src(), q = spec.dst();
    Expr through = Expr::Product({Build(p, Basic(i)), Build(Basic(i), q)});
    Expr src_up = Build(p, Upper(i - 1));
    Expr src_low = Build(p, Lower(i - 1));
    Expr sink_up = Build(Upper(i), q);
    Expr sink_low = Build(Lower(i), q);
    Expr c = Lit(Series::kC, i - 1);
    Expr a = Lit(Series::kA, i - 1);

    if (family_ == Family::kSr) {
      return Expr::Sum({through, Expr::Product({src_up, c, sink_up}),
                        Expr::Product({src_low, a, sink_low})});
    }
    Expr g = Lit(Series::kG, i - 1);
    Expr f = Lit(Series::kF, i - 1);
    if (model_->OneVdmFactoring(spec.shape(), spec.size()) == Factoring::kDuplicateSinkPair) {
      return Expr::Sum({
          through,
          Expr::Product({src_up, Expr::Sum({Expr::Product({c, sink_up}),
                                            Expr::Product({g, sink_low})})}),
          Expr::Product({src_low, Expr::Sum({Expr::Product({a, sink_low}),
                                             Expr::Product({f, sink_up})})}),
      });
    }
    return Expr::Sum({
        through,
        Expr::Product({Expr::Sum({Expr::Product({src_up, c}), Expr::Product({src_low, f})}),
                       sink_up}),
        Expr::Product({Expr::Sum({Expr::Product({src_up, g}), Expr::Product({src_low, a})}),
                       sink_low}),
    });
  }

  Family family_;
  Method method_;
  std::optional<ComplexityModel> model_;
  std::map<std::pair<VertexRef, VertexRef>, Expr> memo_;
};

}  // namespace

SplitVertex SplitVertexOf(const SubgraphSpec& spec, Method method) {
  const Step step = StepFor(method, ClassOf(spec.shape()), spec.size());
  if (step == Step::kBase) {
    throw NoSplitError("subgraph of size " + std::to_string(spec.size()) + " has no split");
  }
  const int i = SplitIndex(spec, step);
  if (step == Step::kOneVertex) return Basic(i);
  return VertexPair{Upper(i), Lower(i)};
}

Expr BaseExpression(const SubgraphSpec& spec) {
  if (spec.size() != 1) {
    throw NotBaseCaseError("subgraph of size " + std::to_string(spec.size()) +
                           " is not a base case");
  }
  const VertexRef s = spec.src();
  const VertexRef t = spec.dst();
  const int p = s.index;
  const bool full = spec.family() == Family::kFsr;
  auto up = [](Tier tier) { return tier == Tier::kUpper; };

  switch (spec.shape()) {
    case Shape::kCore: return Expr::One();
    case Shape::kLeafRightUp: return Lit(Series::kE, 2 * t.index - 1);
    case Shape::kLeafRightDown: return Lit(Series::kD, 2 * t.index - 1);
    case Shape::kLeafLeftUp: return Lit(Series::kE, 2 * p);
    case Shape::kLeafLeftDown: return Lit(Series::kD, 2 * p);
    case Shape::kParallelogram:
    case Shape::kTrapezoid: break;
  }
  const Series out_series = up(s.tier) ? Series::kE : Series::kD;
  const Series in_series = up(t.tier) ? Series::kE : Series::kD;
  Expr via_basic = Expr::Product({Lit(out_series, 2 * p), Lit(in_series, 2 * p + 1)});
  if (s.tier == t.tier) {
    // c_p + e_{2p} e_{2p+1} / a_p + d_{2p} d_{2p+1}
    Expr direct = Lit(up(s.tier) ? Series::kC : Series::kA, p);
    return Expr::Sum({direct, via_basic});
  }
  if (!full) return via_basic;
  // e_{2p} d_{2p+1} + g_p / d_{2p} e_{2p+1} + f_p
  Expr crossing = Lit(up(s.tier) ? Series::kG : Series::kF, p);
  return Expr::Sum({via_basic, crossing});
}

Expr Generate(const SubgraphSpec& spec, Method method) {
  Generator gen(spec.family(), method, spec.size());
  return gen.Build(spec.src(), spec.dst());
}

}  // namespace rhomboid
