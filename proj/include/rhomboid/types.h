#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rhomboid {

// Vertex tiers of a (full) square rhomboid. Fibonacci and free-form graphs
// only use the basic tier.
enum class Tier : std::uint8_t { kBasic, kUpper, kLower };

struct VertexRef {
  Tier tier = Tier::kBasic;
  int index = 1;  // 1-based within the tier

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

inline VertexRef Basic(int i) { return {Tier::kBasic, i}; }
inline VertexRef Upper(int i) { return {Tier::kUpper, i}; }
inline VertexRef Lower(int i) { return {Tier::kLower, i}; }

inline bool IsHat(Tier t) { return t != Tier::kBasic; }

// "B3", "U2", "L1".
std::string VertexName(VertexRef v);

enum class Series : char {
  kA = 'a',
  kB = 'b',
  kC = 'c',
  kD = 'd',
  kE = 'e',
  kF = 'f',
  kG = 'g',
};

std::optional<Series> SeriesFromChar(char c);

// Position of a series in the fixed out-edge order b, e, d, c, a, f, g.
int SeriesRank(Series s);

// An edge label such as e7. Ordinal 0 denotes an unindexed label ("a" in
// small free-form examples); the rhomboid builders always use ordinals >= 1.
struct EdgeLabel {
  Series series = Series::kA;
  int ordinal = 0;

  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

inline EdgeLabel Label(Series s, int ordinal) { return {s, ordinal}; }

std::string LabelName(EdgeLabel label);

struct EdgeLabelHash {
  std::size_t operator()(const EdgeLabel& l) const noexcept {
    return std::hash<int>{}(l.ordinal * 8 + (static_cast<int>(l.series) - 'a'));
  }
};

}  // namespace rhomboid
