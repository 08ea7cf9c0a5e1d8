#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rhomboid/types.h"

namespace rhomboid {

// Immutable expression tree over edge labels: literals, the multiplicative
// identity, sums and (order-significant) products. Copies share structure;
// a subtree may appear at several places, and every occurrence counts toward
// the literal total.
class Expr {
 public:
  enum class Kind : std::uint8_t { kOne, kLiteral, kSum, kProduct };

  // Defaults to One.
  Expr();

  static Expr One();
  static Expr Literal(EdgeLabel label);
  // Raw constructors: keep children exactly as given. Require >= 1 child.
  static Expr RawSum(std::vector<Expr> children);
  static Expr RawProduct(std::vector<Expr> factors);
  // Smart constructors: given normalized children, return a normalized node
  // (nested sums/products are flattened, One factors dropped, single-child
  // nodes collapsed). An empty product is One.
  static Expr Sum(std::vector<Expr> children);
  static Expr Product(std::vector<Expr> factors);

  Kind kind() const;
  bool is_one() const { return kind() == Kind::kOne; }
  // Only valid for literals.
  EdgeLabel label() const;
  std::span<const Expr> children() const;

  // Number of literal leaves, counted with multiplicity. O(1).
  std::uint64_t literals() const;

  friend bool operator==(const Expr& a, const Expr& b);

  // Identity of the shared node; used for memoized traversals.
  const void* node_id() const { return node_.get(); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline Expr Lit(Series s, int ordinal) { return Expr::Literal(Label(s, ordinal)); }

std::uint64_t Complexity(const Expr& e);

bool IsNormalized(const Expr& e);
Expr Normalize(const Expr& e);

// Distinct labels occurring in e, sorted.
std::vector<EdgeLabel> CollectLabels(const Expr& e);

// Ordered monomial -> multiplicity.
using MonomialMultiset = std::map<std::vector<EdgeLabel>, std::uint64_t>;

inline constexpr std::uint64_t kDefaultExpansionBound = 10'000'000;

// Size of the full distribution of e: number of monomials (with
// multiplicity) and total label occurrences across them. Saturating.
struct ExpansionSize {
  std::uint64_t monomials = 0;
  std::uint64_t symbols = 0;
};
ExpansionSize MeasureExpansion(const Expr& e);

// Distributes products over sums, preserving factor order. Throws
// ExpansionOverflowError when the expansion would exceed `bound`
// monomial-symbols.
MonomialMultiset Expand(const Expr& e, std::uint64_t bound = kDefaultExpansionBound);

// Canonical text form: '+' between summands, '*' between factors,
// parentheses only around sums inside products, "1" for One.
std::string Render(const Expr& e);

// Grammar:
//   sum     := product ('+' product)*
//   product := atom ('*' atom)*
//   atom    := label | '1' | '(' sum ')'
//   label   := [a-g] digit*
// Whitespace between tokens is ignored. The result is normalized.
// Throws ParseError carrying the offending position.
Expr Parse(std::string_view text);

}  // namespace rhomboid
