#pragma once

// Brute-force ground truth: exhaustive enumeration of decorated matchings of
// d points on a circle, the dihedral group action on them, and orbit counts
// obtained two independent ways (Burnside fix-counting and canonical-form
// minimality). Deliberately free of every closed-form formula in this
// library, so the two sides can check each other.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "onevertex/arith.hpp"
#include "onevertex/types.hpp"

namespace onevertex {

// Positions 0..d-1 run counter-clockwise around the circle.
// A proper edge is stored with lo < hi; decorations the type does not carry
// are 0, so structural equality of the records is matching equality.
struct Edge {
  std::uint8_t lo = 0;
  std::uint8_t hi = 0;
  std::uint8_t direction = 0;  // 1: the edge runs hi -> lo (directed types)
  std::uint8_t negative = 0;   // 1: sign is -1 (signed types)

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A matching plus per-edge decorations. Positions absent from `edges` are
// unmatched (half-edges); graph-only types never have any.
struct DecoratedMatching {
  MapType type;
  std::uint8_t degree = 0;
  std::vector<Edge> edges;  // sorted by lo endpoint

  friend bool operator==(const DecoratedMatching&,
                         const DecoratedMatching&) = default;

  // The involution on positions; pairing[i] == i marks a half-edge.
  std::vector<int> pairing() const {
    std::vector<int> p(degree);
    for (int i = 0; i < degree; ++i) p[i] = i;
    for (const Edge& e : edges) {
      p[e.lo] = e.hi;
      p[e.hi] = e.lo;
    }
    return p;
  }
};

// One of the 2d symmetries of the circle of d points.
struct SymmetryElement {
  enum class Kind : std::uint8_t { rotation, reflection };
  Kind kind = Kind::rotation;
  std::uint8_t degree = 0;
  std::uint8_t index = 0;  // rotation: i -> i+k; reflection: i -> a-i (mod d)

  int map(int i) const {
    const int d = degree;
    return kind == Kind::rotation ? (i + index) % d
                                  : ((index - i) % d + d) % d;
  }
};

inline std::vector<SymmetryElement> dihedral_group(int d) {
  if (d < 1) throw std::domain_error("dihedral_group: d must be positive");
  std::vector<SymmetryElement> g;
  g.reserve(2 * d);
  for (int k = 0; k < d; ++k)
    g.push_back({SymmetryElement::Kind::rotation, std::uint8_t(d),
                 std::uint8_t(k)});
  for (int a = 0; a < d; ++a)
    g.push_back({SymmetryElement::Kind::reflection, std::uint8_t(d),
                 std::uint8_t(a)});
  return g;
}

namespace detail {

// Enumeration bounds; beyond these the stream size is an accident waiting
// to happen (> 10^8 decorated matchings).
inline constexpr int kMaxDegreePlain = 14;
inline constexpr int kMaxDegreeDecorated = 12;

inline void check_degree(MapType type, int d) {
  if (d < 1) throw std::domain_error("matching enumeration: d must be >= 1");
  const int limit =
      params(type).t == 1 ? kMaxDegreePlain : kMaxDegreeDecorated;
  if (d > limit)
    throw std::domain_error("matching enumeration: d = " + std::to_string(d) +
                            " exceeds the practical bound " +
                            std::to_string(limit));
}

// Packed encoding: one 16-bit record per edge, (lo<<12)|(hi<<8)|(dir<<1)|neg,
// sorted ascending, 0xFFFF past the end. Numeric order on records equals
// lexicographic order on (lo, hi, direction, negative), so array comparison
// is the canonical-form order.
inline constexpr std::uint16_t kNoEdge = 0xFFFF;
using PackedMatching = std::array<std::uint16_t, 7>;

inline std::uint16_t pack_edge(int lo, int hi, int direction, int negative) {
  return std::uint16_t((lo << 12) | (hi << 8) | (direction << 1) | negative);
}

inline PackedMatching pack(const DecoratedMatching& m) {
  PackedMatching p;
  p.fill(kNoEdge);
  std::size_t i = 0;
  for (const Edge& e : m.edges)
    p[i++] = pack_edge(e.lo, e.hi, e.direction, e.negative);
  return p;
}

// Image of a packed matching under a symmetry, re-normalized and re-sorted.
inline PackedMatching apply_packed(const SymmetryElement& sym,
                                   const PackedMatching& m, MapType type) {
  PackedMatching out;
  out.fill(kNoEdge);
  std::size_t n = 0;
  for (std::uint16_t rec : m) {
    if (rec == kNoEdge) break;
    const int lo = rec >> 12, hi = (rec >> 8) & 0xF;
    const int dir = (rec >> 1) & 1, neg = rec & 1;
    int from = dir ? hi : lo, to = dir ? lo : hi;
    from = sym.map(from);
    to = sym.map(to);
    const int nlo = std::min(from, to), nhi = std::max(from, to);
    const int ndir = type.directed ? (from == nlo ? 0 : 1) : 0;
    const std::uint16_t packed = pack_edge(nlo, nhi, ndir, neg);
    // insertion sort; at most 7 records
    std::size_t j = n++;
    for (; j > 0 && out[j - 1] > packed; --j) out[j] = out[j - 1];
    out[j] = packed;
  }
  return out;
}

// Visits every decorated matching of the given type exactly once, in a
// deterministic order: smallest unmatched position first, half-edge before
// proper edges, partners ascending, directions before signs. The visited
// object is scratch storage; copy it to keep it.
template <class Visitor>
void enumerate(MapType type, int d, Visitor&& visit) {
  check_degree(type, d);
  DecoratedMatching scratch;
  scratch.type = type;
  scratch.degree = std::uint8_t(d);
  std::vector<bool> used(d, false);

  auto rec = [&](auto&& self, int from) -> void {
    int u = from;
    while (u < d && used[u]) ++u;
    if (u == d) {
      visit(std::as_const(scratch));
      return;
    }
    used[u] = true;
    if (!type.graph_only) self(self, u + 1);  // u stays a half-edge
    for (int v = u + 1; v < d; ++v) {
      if (used[v]) continue;
      used[v] = true;
      const int dirs = type.directed ? 2 : 1;
      const int signs = type.signed_edges ? 2 : 1;
      for (int dir = 0; dir < dirs; ++dir) {
        for (int neg = 0; neg < signs; ++neg) {
          scratch.edges.push_back({std::uint8_t(u), std::uint8_t(v),
                                   std::uint8_t(dir), std::uint8_t(neg)});
          self(self, u + 1);
          scratch.edges.pop_back();
        }
      }
      used[v] = false;
    }
    used[u] = false;
  };
  rec(rec, 0);
}

}  // namespace detail

// Every decorated matching of the type, materialized. Prefer the counting
// entry points below for anything large.
inline std::vector<DecoratedMatching> enumerate_matchings(MapType type,
                                                          int d) {
  std::vector<DecoratedMatching> all;
  detail::enumerate(type, d, [&](const DecoratedMatching& m) {
    all.push_back(m);
  });
  return all;
}

// Image of a matching under a symmetry: positions map through sym, a
// direction follows its endpoints, signs are untouched (every proper edge
// here is a loop of the single vertex, and loops keep their sign under
// orientation changes).
inline DecoratedMatching apply_symmetry(const SymmetryElement& sym,
                                        const DecoratedMatching& m) {
  if (sym.degree != m.degree)
    throw std::domain_error("apply_symmetry: degree mismatch");
  DecoratedMatching out;
  out.type = m.type;
  out.degree = m.degree;
  out.edges.reserve(m.edges.size());
  for (const Edge& e : m.edges) {
    int from = e.direction ? e.hi : e.lo;
    int to = e.direction ? e.lo : e.hi;
    from = sym.map(from);
    to = sym.map(to);
    Edge img;
    img.lo = std::uint8_t(std::min(from, to));
    img.hi = std::uint8_t(std::max(from, to));
    img.direction = std::uint8_t(m.type.directed && from != img.lo ? 1 : 0);
    img.negative = e.negative;
    out.edges.push_back(img);
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const Edge& a, const Edge& b) {
    return a.lo < b.lo;
  });
  return out;
}

// Number of matchings the symmetry fixes (decorations included).
inline Count fixed_count(MapType type, int d, const SymmetryElement& sym) {
  if (sym.degree != d) throw std::domain_error("fixed_count: degree mismatch");
  std::uint64_t fixed = 0;
  detail::enumerate(type, d, [&](const DecoratedMatching& m) {
    const detail::PackedMatching p = detail::pack(m);
    if (detail::apply_packed(sym, p, type) == p) ++fixed;
  });
  return Count(fixed);
}

// Orbit count by the Cauchy-Frobenius lemma: average fixed count over the
// 2d symmetries. The division must come out exact.
inline Count orbit_count_burnside(MapType type, int d) {
  Count total = 0;
  for (const SymmetryElement& sym : dihedral_group(d))
    total += fixed_count(type, d, sym);
  return exact_div(total, Count(2) * d, "orbit_count_burnside");
}

// Orbit count by canonical forms: a matching is counted iff no symmetry
// image has a smaller encoding, which holds for exactly one member of each
// orbit.
inline Count orbit_count_canonical(MapType type, int d) {
  const std::vector<SymmetryElement> group = dihedral_group(d);
  std::uint64_t orbits = 0;
  detail::enumerate(type, d, [&](const DecoratedMatching& m) {
    const detail::PackedMatching p = detail::pack(m);
    for (const SymmetryElement& sym : group)
      if (detail::apply_packed(sym, p, type) < p) return;
    ++orbits;
  });
  return Count(orbits);
}

}  // namespace onevertex
