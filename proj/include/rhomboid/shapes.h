#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rhomboid {

enum class Method : std::uint8_t { kTwoVdm, kOneVdm, kCombined };

inline constexpr std::array<Method, 3> kAllMethods{Method::kTwoVdm, Method::kOneVdm,
                                                   Method::kCombined};

// "2vdm", "1vdm", "combined".
std::string MethodName(Method m);
std::optional<Method> MethodFromName(std::string_view name);

// Subgraph shapes of a (full) square rhomboid, named by where the extra edge
// pairs sit. "Right" leaves end on the upper/lower tier; "left" leaves start
// there.
enum class Shape : std::uint8_t {
  kCore,           // basic p -> basic q
  kLeafRightUp,    // basic p -> upper q
  kLeafRightDown,  // basic p -> lower q
  kLeafLeftUp,     // upper p -> basic q
  kLeafLeftDown,   // lower p -> basic q
  kParallelogram,  // upper -> upper, lower -> lower
  kTrapezoid,      // upper -> lower, lower -> upper
};

inline constexpr std::array<Shape, 7> kAllShapes{
    Shape::kCore,       Shape::kLeafRightUp,   Shape::kLeafRightDown, Shape::kLeafLeftUp,
    Shape::kLeafLeftDown, Shape::kParallelogram, Shape::kTrapezoid};

enum class ShapeClass : std::uint8_t { kCore, kLeaf, kDipterous };

ShapeClass ClassOf(Shape s);
std::string ShapeName(Shape s);
std::string ShapeClassName(ShapeClass c);
// Accepts every ShapeName plus the class names "leaf" (= leaf-right-up) and
// "dipterous" (= parallelogram).
std::optional<Shape> ShapeFromName(std::string_view name);

// How one decomposition step is carried out for a subgraph.
enum class Step : std::uint8_t { kBase, kTwoVertex, kOneVertex };

// Base case at size 1; sizes <= 2 always use the two-vertex relations. The
// combined method switches to one-vertex splitting at size 3 (every shape)
// and at size 5 (dipterous only).
Step StepFor(Method m, ShapeClass c, int size);

// Which pair of subexpressions a one-vertex FSR step writes twice. The
// sink pair is E(i-upper, q), E(i-lower, q); the source pair is
// E(p, (i-1)-upper), E(p, (i-1)-lower).
enum class Factoring : std::uint8_t { kDuplicateSinkPair, kDuplicateSourcePair };

// Duplicate the cheaper pair; ties duplicate the sink pair.
inline Factoring ChooseFactoring(std::uint64_t source_pair_cost, std::uint64_t sink_pair_cost) {
  return sink_pair_cost <= source_pair_cost ? Factoring::kDuplicateSinkPair
                                            : Factoring::kDuplicateSourcePair;
}

// Number of basic vertices in the source-side part E(p, i) of a one-vertex
// split of a size-n subgraph (the sink-side part E(i, q) has n + 1 minus
// that). The core part of a leaf sits at its leafless end.
int OneVertexSourcePart(Shape s, int n);
// Number of basic vertices left of the upper/lower split pair of a
// two-vertex split of a size-n subgraph.
int TwoVertexSourcePart(Shape s, int n);

}  // namespace rhomboid
