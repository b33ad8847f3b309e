#pragma once

// The eight structural variants of one-vertex maps. A variant is a choice of
// three independent flags: edges signed or not, edges directed or not, and
// half-edges (unmatched dangling arcs) forbidden or allowed. Each variant is
// written as a 3-letter code, one letter per flag, uppercase = flag set:
//
//   position 1: s/S  unsigned / signed
//   position 2: d/D  undirected / directed
//   position 3: g/G  half-edges allowed (pre-graph) / forbidden (graph)
//
// so "sdg" is the plainest variant and "SDG" the richest.

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace onevertex {

struct MapType {
  bool signed_edges = false;
  bool directed = false;
  bool graph_only = false;  // true: every vertex position must be matched

  friend constexpr bool operator==(MapType, MapType) = default;
};

// Counting parameters attached to a map type:
//   s  ways to match a vertex with its mirror image across a reflection axis
//      (including leaving both unmatched, where half-edges are allowed)
//   t  decorations per proper edge (sign and/or direction choices)
//   m  ways to match the two vertices lying on a reflection axis
struct TypeParams {
  int s;
  int t;
  int m;
};

inline MapType parse_type_code(std::string_view code) {
  if (code.size() != 3)
    throw std::invalid_argument("type code must have exactly 3 characters: '" +
                                std::string(code) + "'");
  auto flag = [&](std::size_t pos, char off, char on) {
    char c = code[pos];
    if (c == off) return false;
    if (c == on) return true;
    throw std::invalid_argument(std::string("invalid character '") + c +
                                "' at position " + std::to_string(pos + 1) +
                                " of type code '" + std::string(code) + "'");
  };
  return MapType{flag(0, 's', 'S'), flag(1, 'd', 'D'), flag(2, 'g', 'G')};
}

inline std::string type_code(MapType t) {
  return {t.signed_edges ? 'S' : 's', t.directed ? 'D' : 'd',
          t.graph_only ? 'G' : 'g'};
}

inline constexpr TypeParams params(MapType t) {
  // sign/direction choices per proper edge
  const int decorations = (t.signed_edges ? 2 : 1) * (t.directed ? 2 : 1);
  // A mirror edge u-u' is reversed by the reflection, so no direction
  // survives; a half-edge is one further option unless forbidden.
  const int mirror = (t.graph_only ? 0 : 1) +
                     (t.directed ? 0 : (t.signed_edges ? 2 : 1));
  // The two on-axis vertices are fixed pointwise, so every decoration
  // survives there.
  const int on_axis = (t.graph_only ? 0 : 1) + decorations;
  return TypeParams{mirror, decorations, on_axis};
}

// All eight types, in the column order of the published count tables:
// within each half, undirected before directed, unsigned before signed.
inline constexpr std::array<MapType, 8> all_types() {
  return {{{false, false, false},
           {true, false, false},
           {false, true, false},
           {true, true, false},
           {false, false, true},
           {true, false, true},
           {false, true, true},
           {true, true, true}}};
}

// The four half-edge-allowing types (pre-map table columns).
inline constexpr std::array<MapType, 4> premap_types() {
  return {{{false, false, false},
           {true, false, false},
           {false, true, false},
           {true, true, false}}};
}

// The four graph-only types (map table columns).
inline constexpr std::array<MapType, 4> map_types() {
  return {{{false, false, true},
           {true, false, true},
           {false, true, true},
           {true, true, true}}};
}

}  // namespace onevertex
