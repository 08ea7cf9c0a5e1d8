#include "rhomboid/complexity.h"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "rhomboid/errors.h"

namespace rhomboid {
namespace {

std::uint64_t Checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalConsistencyError("literal count overflow");
  return r;
}

std::uint64_t Times(std::uint64_t k, std::uint64_t a) {
  std::uint64_t r;
  if (__builtin_mul_overflow(k, a, &r)) throw InternalConsistencyError("literal count overflow");
  return r;
}

// Sum of k_i * v_i plus a constant, overflow-checked.
std::uint64_t Combine(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> terms,
                      std::uint64_t constant) {
  std::uint64_t total = constant;
  for (auto [k, v] : terms) total = Checked(total, Times(k, v));
  return total;
}

}  // namespace

std::uint64_t ComplexityTriple::at(ShapeClass c) const {
  switch (c) {
    case ShapeClass::kCore: return core;
    case ShapeClass::kLeaf: return leaf;
    case ShapeClass::kDipterous: return dipterous;
  }
  return 0;
}

ComplexityModel::ComplexityModel(Method method, int max_n) : method_(method) {
  if (max_n < 1 || max_n > kMaxPredictSize) {
    throw InvalidSizeError("invalid size: prediction supports 1 <= n <= " +
                           std::to_string(kMaxPredictSize));
  }
  rows_.resize(max_n + 1);
  rows_[1] = {0, 1, 3};
  for (int n = 2; n <= max_n; ++n) Extend(n);
}

const ComplexityTriple& ComplexityModel::at(int n) const {
  if (n < 1 || n > max_n()) throw InvalidSizeError("invalid size: n out of model range");
  return rows_[n];
}

Factoring ComplexityModel::OneVdmFactoring(Shape s, int n) const {
  const int source_part = OneVertexSourcePart(s, n);
  const int sink_part = n + 1 - source_part;
  // Pieces ending/starting on the split column's neighbours: a basic
  // endpoint makes them single-leaf, a tier endpoint dipterous.
  const bool source_on_tier = s == Shape::kLeafLeftUp || s == Shape::kLeafLeftDown ||
                              ClassOf(s) == ShapeClass::kDipterous;
  const bool sink_on_tier = s == Shape::kLeafRightUp || s == Shape::kLeafRightDown ||
                            ClassOf(s) == ShapeClass::kDipterous;
  const ShapeClass source_class = source_on_tier ? ShapeClass::kDipterous : ShapeClass::kLeaf;
  const ShapeClass sink_class = sink_on_tier ? ShapeClass::kDipterous : ShapeClass::kLeaf;
  return ChooseFactoring(at(source_part - 1).at(source_class), at(sink_part - 1).at(sink_class));
}

void ComplexityModel::Extend(int n) {
  const int hi = (n + 1) / 2;  // ceil(n/2)
  const int lo = n / 2;        // floor(n/2)
  ComplexityTriple& out = rows_[n];

  auto one_vertex = [&](Shape canonical, std::uint64_t source_whole,
                        std::uint64_t sink_whole, ShapeClass source_pair,
                        ShapeClass sink_pair) {
    const int source_part = OneVertexSourcePart(canonical, n);
    const int sink_part = n + 1 - source_part;
    const std::uint64_t s = rows_[source_part - 1].at(source_pair);
    const std::uint64_t k = rows_[sink_part - 1].at(sink_pair);
    const bool dup_sink = OneVdmFactoring(canonical, n) == Factoring::kDuplicateSinkPair;
    return Combine({{1, source_whole}, {1, sink_whole}, {dup_sink ? 2 : 4, s}, {dup_sink ? 4 : 2, k}},
                   4);
  };

  const int source_part = OneVertexSourcePart(Shape::kCore, n);
  const int sink_part = n + 1 - source_part;

  if (StepFor(method_, ShapeClass::kCore, n) == Step::kOneVertex) {
    out.core = one_vertex(Shape::kCore, rows_[source_part].core, rows_[sink_part].core,
                          ShapeClass::kLeaf, ShapeClass::kLeaf);
  } else {
    out.core = Combine({{1, rows_[hi].core}, {1, rows_[lo].core}, {2, rows_[hi].leaf},
                        {2, rows_[lo].leaf}},
                       1);
  }

  if (StepFor(method_, ShapeClass::kLeaf, n) == Step::kOneVertex) {
    const int ls = OneVertexSourcePart(Shape::kLeafRightUp, n);
    out.leaf = one_vertex(Shape::kLeafRightUp, rows_[ls].core, rows_[n + 1 - ls].leaf,
                          ShapeClass::kLeaf, ShapeClass::kDipterous);
  } else {
    out.leaf = Combine({{1, rows_[hi].core}, {1, rows_[lo].leaf}, {2, rows_[hi].leaf},
                        {2, rows_[lo].dipterous}},
                       1);
  }

  if (StepFor(method_, ShapeClass::kDipterous, n) == Step::kOneVertex) {
    const int ds = OneVertexSourcePart(Shape::kParallelogram, n);
    out.dipterous = one_vertex(Shape::kParallelogram, rows_[ds].leaf, rows_[n + 1 - ds].leaf,
                               ShapeClass::kDipterous, ShapeClass::kDipterous);
  } else {
    out.dipterous = Combine({{1, rows_[hi].leaf}, {1, rows_[lo].leaf}, {2, rows_[hi].dipterous},
                             {2, rows_[lo].dipterous}},
                            1);
  }
}

ComplexityTriple Predict(Method method, int n) { return ComplexityModel(method, n).at(n); }

ComplexityTriple ClosedForm2Vdm(int k) {
  if (k < 1 || k > 20) throw InvalidSizeError("invalid size: closed form needs 1 <= k <= 20");
  __int128 six = 1, three = 1;
  for (int i = 0; i < k; ++i) {
    six *= 6;
    three *= 3;
  }
  // Common denominator 45: 89/45 = 89/45, c/9 = 5c/45, 1/5 = 9/45.
  auto eval = [&](__int128 three_coeff_over_9) -> std::uint64_t {
    __int128 numerator = 89 * six + 5 * three_coeff_over_9 * three - 9;
    if (numerator % 45 != 0) {
      throw InternalConsistencyError("closed form is not integral at k=" + std::to_string(k));
    }
    return static_cast<std::uint64_t>(numerator / 45);
  };
  return {eval(-20), eval(-5), eval(10)};
}

MethodTable EmitTable(Method method, std::span<const int> sizes) {
  MethodTable table;
  table.method = method;
  int max_n = 1;
  for (int n : sizes) max_n = std::max(max_n, n);
  ComplexityModel model(method, max_n);
  for (int n : sizes) table.rows.emplace_back(n, model.at(n));
  return table;
}

std::string TableCsv(const MethodTable& table) {
  std::ostringstream os;
  os << "method,shape,n,literals\n";
  const std::string m = MethodName(table.method);
  for (const auto& [n, t] : table.rows) {
    for (ShapeClass c : {ShapeClass::kCore, ShapeClass::kLeaf, ShapeClass::kDipterous}) {
      os << m << ',' << ShapeClassName(c) << ',' << n << ',' << t.at(c) << '\n';
    }
  }
  return os.str();
}

std::string TableJson(const MethodTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [n, t] : table.rows) {
    rows.push_back({{"n", n}, {"core", t.core}, {"leaf", t.leaf}, {"dipterous", t.dipterous}});
  }
  nlohmann::json doc{{"method", MethodName(table.method)}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

std::string TableText(const MethodTable& table) {
  std::ostringstream os;
  os << "method " << MethodName(table.method) << '\n';
  os << std::setw(6) << "n" << std::setw(12) << "T" << std::setw(12) << "T^" << std::setw(12)
     << "T^^" << '\n';
  for (const auto& [n, t] : table.rows) {
    os << std::setw(6) << n << std::setw(12) << t.core << std::setw(12) << t.leaf
       << std::setw(12) << t.dipterous << '\n';
  }
  return os.str();
}

}  // namespace rhomboid
