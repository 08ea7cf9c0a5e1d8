#include "rhomboid/shapes.h"

namespace rhomboid {

std::string MethodName(Method m) {
  switch (m) {
    case Method::kTwoVdm: return "2vdm";
    case Method::kOneVdm: return "1vdm";
    case Method::kCombined: return "combined";
  }
  return "?";
}

std::optional<Method> MethodFromName(std::string_view name) {
  if (name == "2vdm" || name == "two_vdm") return Method::kTwoVdm;
  if (name == "1vdm" || name == "one_vdm") return Method::kOneVdm;
  if (name == "combined") return Method::kCombined;
  return std::nullopt;
}

ShapeClass ClassOf(Shape s) {
  switch (s) {
    case Shape::kCore: return ShapeClass::kCore;
    case Shape::kLeafRightUp:
    case Shape::kLeafRightDown:
    case Shape::kLeafLeftUp:
    case Shape::kLeafLeftDown: return ShapeClass::kLeaf;
    case Shape::kParallelogram:
    case Shape::kTrapezoid: return ShapeClass::kDipterous;
  }
  return ShapeClass::kCore;
}

std::string ShapeName(Shape s) {
  switch (s) {
    case Shape::kCore: return "core";
    case Shape::kLeafRightUp: return "leaf-right-up";
    case Shape::kLeafRightDown: return "leaf-right-down";
    case Shape::kLeafLeftUp: return "leaf-left-up";
    case Shape::kLeafLeftDown: return "leaf-left-down";
    case Shape::kParallelogram: return "parallelogram";
    case Shape::kTrapezoid: return "trapezoid";
  }
  return "?";
}

std::string ShapeClassName(ShapeClass c) {
  switch (c) {
    case ShapeClass::kCore: return "core";
    case ShapeClass::kLeaf: return "leaf";
    case ShapeClass::kDipterous: return "dipterous";
  }
  return "?";
}

std::optional<Shape> ShapeFromName(std::string_view name) {
  for (Shape s : kAllShapes) {
    if (name == ShapeName(s)) return s;
  }
  if (name == "leaf") return Shape::kLeafRightUp;
  if (name == "dipterous") return Shape::kParallelogram;
  return std::nullopt;
}

Step StepFor(Method m, ShapeClass c, int size) {
  if (size <= 1) return Step::kBase;
  if (size == 2) return Step::kTwoVertex;
  switch (m) {
    case Method::kTwoVdm: return Step::kTwoVertex;
    case Method::kOneVdm: return Step::kOneVertex;
    case Method::kCombined:
      if (size == 3 || (size == 5 && c == ShapeClass::kDipterous)) return Step::kOneVertex;
      return Step::kTwoVertex;
  }
  return Step::kTwoVertex;
}

int OneVertexSourcePart(Shape s, int n) {
  if (s == Shape::kLeafLeftUp || s == Shape::kLeafLeftDown) return (n + 1) / 2;
  return n / 2 + 1;
}

int TwoVertexSourcePart(Shape s, int n) {
  if (s == Shape::kLeafRightUp || s == Shape::kLeafRightDown) return (n + 1) / 2;
  return n / 2;
}

}  // namespace rhomboid
