#pragma once

// Formula-vs-oracle cross-validation. Each check pits an independent
// evaluation route against another and reports the first disagreement;
// these back both the `verify` CLI subcommand and the acceptance suite.

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "onevertex/formulas.hpp"
#include "onevertex/matchings.hpp"
#include "onevertex/types.hpp"

namespace onevertex {

struct OrbitComparison {
  MapType type;
  unsigned degree = 0;
  Count burnside;
  Count canonical;
  Count formula;

  bool consistent() const {
    return burnside == canonical && canonical == formula;
  }
};

// Brute-force orbit counts (both routes) against the closed formula, for
// every type and 1 <= d <= d_max.
inline std::vector<OrbitComparison> compare_orbit_counts(unsigned d_max) {
  std::vector<OrbitComparison> out;
  for (MapType type : all_types()) {
    for (unsigned d = 1; d <= d_max; ++d) {
      OrbitComparison c;
      c.type = type;
      c.degree = d;
      c.burnside = orbit_count_burnside(type, int(d));
      c.canonical = orbit_count_canonical(type, int(d));
      c.formula = premap_count(type, d);
      out.push_back(std::move(c));
    }
  }
  return out;
}

// The four evaluation routes for the mirror-fixed sequence must agree for
// every type through n_max.
inline bool mirror_count_agreement(unsigned n_max,
                                   std::string* detail = nullptr) {
  for (MapType type : all_types()) {
    const SeriesPrefix egf = mirror_fixed_egf(type, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
      const Count rec = mirror_fixed_count(type, n);
      const Count sum = mirror_fixed_count_sum(type, n);
      const Count series = egf_term(egf, n);
      const Count hermite = mirror_fixed_count_hermite(type, n);
      if (rec != sum || rec != series || rec != hermite) {
        if (detail) {
          std::ostringstream os;
          os << type_code(type) << " n=" << n << ": recurrence=" << rec
             << " sum=" << sum << " egf=" << series << " hermite=" << hermite;
          *detail = os.str();
        }
        return false;
      }
    }
  }
  return true;
}

// For even d every reflection axis either runs between points (odd index;
// fixes mirror_fixed_count(d/2) matchings) or through two opposite points
// (even index; fixes m * mirror_fixed_count(d/2 - 1)). Checks each of the
// d fixed counts individually against the brute force.
inline bool reflection_structure_check(unsigned d_max,
                                       std::string* detail = nullptr) {
  for (MapType type : all_types()) {
    const TypeParams p = params(type);
    for (unsigned d = 2; d <= d_max; d += 2) {
      const Count median = mirror_fixed_count(type, d / 2);
      const Count diagonal = p.m * mirror_fixed_count(type, d / 2 - 1);
      for (unsigned a = 0; a < d; ++a) {
        const SymmetryElement sym{SymmetryElement::Kind::reflection,
                                  std::uint8_t(d), std::uint8_t(a)};
        const Count expected = (a % 2 == 1) ? median : diagonal;
        const Count actual = fixed_count(type, int(d), sym);
        if (actual != expected) {
          if (detail) {
            std::ostringstream os;
            os << type_code(type) << " d=" << d << " reflection a=" << a
               << ": fixed=" << actual << " expected=" << expected;
            *detail = os.str();
          }
          return false;
        }
      }
    }
  }
  return true;
}

// A rotation's fixed count depends only on gcd(step, d) and must equal the
// per-divisor closed form; checks all d rotations for d <= d_max.
inline bool rotation_structure_check(unsigned d_max,
                                     std::string* detail = nullptr) {
  for (MapType type : all_types()) {
    for (unsigned d = 1; d <= d_max; ++d) {
      for (unsigned k = 0; k < d; ++k) {
        const std::uint64_t r = std::gcd<std::uint64_t>(k, d);  // gcd(0,d) = d
        const SymmetryElement sym{SymmetryElement::Kind::rotation,
                                  std::uint8_t(d), std::uint8_t(k)};
        const Count expected = rotation_fixed_count(type, r, d);
        const Count actual = fixed_count(type, int(d), sym);
        if (actual != expected) {
          if (detail) {
            std::ostringstream os;
            os << type_code(type) << " d=" << d << " rotation k=" << k
               << ": fixed=" << actual << " expected=" << expected;
            *detail = os.str();
          }
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace onevertex
