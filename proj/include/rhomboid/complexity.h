#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rhomboid/shapes.h"

namespace rhomboid {

// Literal counts of the generated FSR expressions of one size: core
// subgraph, single-leaf subgraph, dipterous subgraph.
struct ComplexityTriple {
  std::uint64_t core = 0;
  std::uint64_t leaf = 0;
  std::uint64_t dipterous = 0;

  std::uint64_t at(ShapeClass c) const;
  friend auto operator<=>(const ComplexityTriple&, const ComplexityTriple&) = default;
};

inline constexpr int kMaxPredictSize = 4096;

// Dynamic program over (shape class, size) for one method, sizes 1..max_n.
// Two-vertex steps follow the ceil/floor halving recurrences; one-vertex
// steps use the balanced split with the cheaper duplicated pair. The model
// is also the policy table the generator consults for one-vertex
// factoring, so both always agree.
class ComplexityModel {
 public:
  // Throws InvalidSizeError unless 1 <= max_n <= kMaxPredictSize.
  ComplexityModel(Method method, int max_n);

  Method method() const { return method_; }
  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

  const ComplexityTriple& at(int n) const;

  // Factoring of a one-vertex FSR step on a size-n subgraph of shape s
  // (n >= 3). Costs come from this model's table.
  Factoring OneVdmFactoring(Shape s, int n) const;

 private:
  void Extend(int n);

  Method method_;
  std::vector<ComplexityTriple> rows_;  // rows_[0] unused
};

// Throws InvalidSizeError for n < 1 or n > kMaxPredictSize.
ComplexityTriple Predict(Method method, int n);

// Closed forms of the two-vertex recurrences at n = 2^k, evaluated over the
// rationals: 89/45*6^k - {20/9, 5/9, -10/9}*3^k - 1/5. Throws
// InternalConsistencyError if a value is not integral, InvalidSizeError for
// k outside [1, 20].
ComplexityTriple ClosedForm2Vdm(int k);

struct MethodTable {
  Method method = Method::kTwoVdm;
  std::vector<std::pair<int, ComplexityTriple>> rows;
};

MethodTable EmitTable(Method method, std::span<const int> sizes);

// CSV rows `method,shape,n,literals` with shape in core|leaf|dipterous,
// preceded by that header line.
std::string TableCsv(const MethodTable& table);
std::string TableJson(const MethodTable& table);
// Fixed-width text, one row per size.
std::string TableText(const MethodTable& table);

}  // namespace rhomboid
