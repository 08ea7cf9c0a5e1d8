#include "rhomboid/expression.h"

#include <limits>
#include <set>
#include <unordered_map>

#include "rhomboid/errors.h"

namespace rhomboid {

struct Expr::Node {
  Kind kind = Kind::kOne;
  EdgeLabel label;
  std::vector<Expr> children;
  std::uint64_t literals = 0;
};

namespace {

std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t SatMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

}  // namespace

Expr::Expr() : Expr(One()) {}

Expr Expr::One() {
  static const auto one = std::make_shared<const Node>();
  return Expr(one);
}

Expr Expr::Literal(EdgeLabel label) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kLiteral;
  n->label = label;
  n->literals = 1;
  return Expr(std::move(n));
}

Expr Expr::RawSum(std::vector<Expr> children) {
  if (children.empty()) throw std::invalid_argument("sum needs at least one child");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSum;
  for (const Expr& c : children) n->literals = SatAdd(n->literals, c.literals());
  n->children = std::move(children);
  return Expr(std::move(n));
}

Expr Expr::RawProduct(std::vector<Expr> factors) {
  if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kProduct;
  for (const Expr& c : factors) n->literals = SatAdd(n->literals, c.literals());
  n->children = std::move(factors);
  return Expr(std::move(n));
}

Expr Expr::Sum(std::vector<Expr> children) {
  std::vector<Expr> flat;
  flat.reserve(children.size());
  for (Expr& c : children) {
    if (c.kind() == Kind::kSum) {
      for (const Expr& g : c.children()) flat.push_back(g);
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) throw std::invalid_argument("sum needs at least one child");
  if (flat.size() == 1) return flat.front();
  return RawSum(std::move(flat));
}

Expr Expr::Product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  flat.reserve(factors.size());
  for (Expr& f : factors) {
    if (f.kind() == Kind::kProduct) {
      for (const Expr& g : f.children()) flat.push_back(g);
    } else if (!f.is_one()) {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return One();
  if (flat.size() == 1) return flat.front();
  return RawProduct(std::move(flat));
}

Expr::Kind Expr::kind() const { return node_->kind; }

EdgeLabel Expr::label() const {
  if (node_->kind != Kind::kLiteral) throw std::logic_error("not a literal");
  return node_->label;
}

std::span<const Expr> Expr::children() const { return node_->children; }

std::uint64_t Expr::literals() const { return node_->literals; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.literals() != b.literals()) return false;
  switch (a.kind()) {
    case Expr::Kind::kOne: return true;
    case Expr::Kind::kLiteral: return a.label() == b.label();
    default: break;
  }
  auto ca = a.children();
  auto cb = b.children();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!(ca[i] == cb[i])) return false;
  }
  return true;
}

std::uint64_t Complexity(const Expr& e) { return e.literals(); }

namespace {

bool IsNormalizedImpl(const Expr& e, std::unordered_map<const void*, bool>& memo) {
  if (auto it = memo.find(e.node_id()); it != memo.end()) return it->second;
  bool ok = true;
  if (e.kind() == Expr::Kind::kSum || e.kind() == Expr::Kind::kProduct) {
    ok = e.children().size() >= 2;
    for (const Expr& c : e.children()) {
      if (!ok) break;
      if (c.kind() == e.kind()) ok = false;
      if (e.kind() == Expr::Kind::kProduct && c.is_one()) ok = false;
      if (ok) ok = IsNormalizedImpl(c, memo);
    }
  }
  memo[e.node_id()] = ok;
  return ok;
}

Expr NormalizeImpl(const Expr& e, std::unordered_map<const void*, Expr>& memo) {
  if (auto it = memo.find(e.node_id()); it != memo.end()) return it->second;
  Expr out = e;
  if (e.kind() == Expr::Kind::kSum || e.kind() == Expr::Kind::kProduct) {
    std::vector<Expr> kids;
    kids.reserve(e.children().size());
    for (const Expr& c : e.children()) kids.push_back(NormalizeImpl(c, memo));
    out = e.kind() == Expr::Kind::kSum ? Expr::Sum(std::move(kids))
                                       : Expr::Product(std::move(kids));
  }
  memo.emplace(e.node_id(), out);
  return out;
}

void CollectLabelsImpl(const Expr& e, std::set<const void*>& seen, std::set<EdgeLabel>& out) {
  if (!seen.insert(e.node_id()).second) return;
  if (e.kind() == Expr::Kind::kLiteral) out.insert(e.label());
  for (const Expr& c : e.children()) CollectLabelsImpl(c, seen, out);
}

ExpansionSize MeasureImpl(const Expr& e, std::unordered_map<const void*, ExpansionSize>& memo) {
  if (auto it = memo.find(e.node_id()); it != memo.end()) return it->second;
  ExpansionSize s;
  switch (e.kind()) {
    case Expr::Kind::kOne: s = {1, 0}; break;
    case Expr::Kind::kLiteral: s = {1, 1}; break;
    case Expr::Kind::kSum:
      for (const Expr& c : e.children()) {
        ExpansionSize t = MeasureImpl(c, memo);
        s.monomials = SatAdd(s.monomials, t.monomials);
        s.symbols = SatAdd(s.symbols, t.symbols);
      }
      break;
    case Expr::Kind::kProduct:
      s = {1, 0};
      for (const Expr& c : e.children()) {
        ExpansionSize t = MeasureImpl(c, memo);
        // |AB| symbols = sym(A)*cnt(B) + cnt(A)*sym(B)
        s.symbols = SatAdd(SatMul(s.symbols, t.monomials), SatMul(s.monomials, t.symbols));
        s.monomials = SatMul(s.monomials, t.monomials);
      }
      break;
  }
  memo.emplace(e.node_id(), s);
  return s;
}

using Terms = MonomialMultiset;

const Terms& ExpandImpl(const Expr& e, std::unordered_map<const void*, Terms>& memo) {
  if (auto it = memo.find(e.node_id()); it != memo.end()) return it->second;
  Terms out;
  switch (e.kind()) {
    case Expr::Kind::kOne: out[{}] = 1; break;
    case Expr::Kind::kLiteral: out[{e.label()}] = 1; break;
    case Expr::Kind::kSum:
      for (const Expr& c : e.children()) {
        for (const auto& [mono, count] : ExpandImpl(c, memo)) out[mono] += count;
      }
      break;
    case Expr::Kind::kProduct: {
      out[{}] = 1;
      for (const Expr& c : e.children()) {
        const Terms& rhs = ExpandImpl(c, memo);
        Terms next;
        for (const auto& [left, lc] : out) {
          for (const auto& [right, rc] : rhs) {
            std::vector<EdgeLabel> mono = left;
            mono.insert(mono.end(), right.begin(), right.end());
            next[std::move(mono)] += lc * rc;
          }
        }
        out = std::move(next);
      }
      break;
    }
  }
  return memo.emplace(e.node_id(), std::move(out)).first->second;
}

void RenderImpl(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::kOne: out += '1'; return;
    case Expr::Kind::kLiteral: out += LabelName(e.label()); return;
    case Expr::Kind::kSum: {
      bool first = true;
      for (const Expr& c : e.children()) {
        if (!first) out += '+';
        first = false;
        RenderImpl(c, out);
      }
      return;
    }
    case Expr::Kind::kProduct: {
      bool first = true;
      for (const Expr& c : e.children()) {
        if (!first) out += '*';
        first = false;
        if (c.kind() == Expr::Kind::kSum) {
          out += '(';
          RenderImpl(c, out);
          out += ')';
        } else {
          RenderImpl(c, out);
        }
      }
      return;
    }
  }
}

}  // namespace

bool IsNormalized(const Expr& e) {
  std::unordered_map<const void*, bool> memo;
  return IsNormalizedImpl(e, memo);
}

Expr Normalize(const Expr& e) {
  std::unordered_map<const void*, Expr> memo;
  return NormalizeImpl(e, memo);
}

std::vector<EdgeLabel> CollectLabels(const Expr& e) {
  std::set<const void*> seen;
  std::set<EdgeLabel> out;
  CollectLabelsImpl(e, seen, out);
  return {out.begin(), out.end()};
}

ExpansionSize MeasureExpansion(const Expr& e) {
  std::unordered_map<const void*, ExpansionSize> memo;
  return MeasureImpl(e, memo);
}

MonomialMultiset Expand(const Expr& e, std::uint64_t bound) {
  ExpansionSize size = MeasureExpansion(e);
  if (size.symbols > bound || size.monomials > bound) {
    throw ExpansionOverflowError("expansion of " + std::to_string(size.symbols) +
                                 " monomial-symbols exceeds bound " + std::to_string(bound));
  }
  std::unordered_map<const void*, Terms> memo;
  return ExpandImpl(e, memo);
}

std::string Render(const Expr& e) {
  std::string out;
  out.reserve(e.literals() * 4);
  RenderImpl(e, out);
  return out;
}

}  // namespace rhomboid
