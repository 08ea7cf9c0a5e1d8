#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>

#include "rhomboid/expression.h"
#include "rhomboid/graph.h"
#include "rhomboid/modarith.h"

namespace rhomboid {

// Random nonzero residues for a set of labels. Each residue depends only on
// (seed, modulus, label), so two assignments built from overlapping label
// sets agree on the overlap.
class LabelAssignment {
 public:
  // Throws std::invalid_argument unless modulus is a prime below 2^63.
  static LabelAssignment ForLabels(std::span<const EdgeLabel> labels,
                                   std::uint64_t modulus, std::uint64_t seed);

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t size() const { return residues_.size(); }

  bool Covers(EdgeLabel label) const { return residues_.contains(label); }
  // Throws AssignmentIncompleteError for an unassigned label.
  std::uint64_t Residue(EdgeLabel label) const;

  // Overrides one residue; rejects values outside [1, modulus-1].
  void Set(EdgeLabel label, std::uint64_t residue);

 private:
  LabelAssignment(std::uint64_t modulus, std::uint64_t seed) : modulus_(modulus), seed_(seed) {}

  std::uint64_t modulus_;
  std::uint64_t seed_;
  std::unordered_map<EdgeLabel, std::uint64_t, EdgeLabelHash> residues_;
};

// Homomorphic image of e in Z/M: literals map to residues, One to 1.
std::uint64_t EvalMod(const Expr& e, const LabelAssignment& asg);

struct RandomizedOptions {
  int trials = 3;
  std::uint64_t seed = 0;  // trial t uses seed + t
  std::uint64_t modulus = kMersenne61;
};

enum class EquivalenceMode { kExact, kRandomized };

struct EquivalenceOptions {
  EquivalenceMode mode = EquivalenceMode::kExact;
  RandomizedOptions randomized;
  std::uint64_t expansion_bound = kDefaultExpansionBound;
};

// Exact mode compares ordered-monomial multisets; randomized mode compares
// commutative images under `trials` seeded assignments (one-sided error).
bool Equivalent(const Expr& a, const Expr& b, const EquivalenceOptions& options = {});

// Both verdicts where they can be computed. The exact verdict is absent when
// either expansion exceeds the bound. When both are present and disagree,
// the expressions have the same commutative image but different factor
// order somewhere.
struct EquivalenceReport {
  std::optional<bool> exact;
  bool randomized = false;

  bool disagree() const { return exact.has_value() && *exact != randomized; }
};
EquivalenceReport CheckEquivalence(const Expr& a, const Expr& b,
                                   const EquivalenceOptions& options = {});

// Checks an expression against the path oracle of `g` between two vertices:
// exact (path enumeration vs expansion) when both sides fit within the
// expansion bound, randomized (path-sum dynamic program vs EvalMod)
// otherwise, or always randomized when options.mode is kRandomized.
struct OracleVerdict {
  EquivalenceMode mode = EquivalenceMode::kExact;
  bool equivalent = false;
  std::string detail;
};
OracleVerdict CheckAgainstPaths(const Expr& e, const StDag& g, VertexRef from, VertexRef to,
                                const EquivalenceOptions& options = {});

}  // namespace rhomboid
