#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rhomboid/equivalence.h"
#include "rhomboid/shapes.h"

namespace rhomboid {

struct CrosscheckOptions {
  // kExact here means "exact when within the expansion bound, randomized
  // otherwise"; kRandomized forces randomized checks.
  EquivalenceOptions equivalence;
  bool check_equivalence = true;
};

struct CrosscheckEntry {
  Method method = Method::kTwoVdm;
  int n = 0;
  Shape shape = Shape::kCore;
  std::uint64_t predicted = 0;
  std::uint64_t generated = 0;
  std::string equivalence;  // "exact", "randomized" or "skipped"
  bool pass = false;
};

struct CrosscheckReport {
  std::vector<CrosscheckEntry> entries;

  bool all_pass() const;
  std::string ToJson() const;
  // Header `method,n,shape,predicted,generated,equivalence,pass`.
  std::string ToCsv() const;
};

// For each size and each of the seven FSR shapes: literal count of the
// generated expression, predicted count, and an oracle verdict against the
// host graph's paths. Failures are recorded in the report, never thrown.
CrosscheckReport Crosscheck(Method method, std::span<const int> sizes,
                            const CrosscheckOptions& options = {});

}  // namespace rhomboid
