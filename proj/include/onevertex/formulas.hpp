#pragma once

// Closed-form counting of non-isomorphic one-vertex maps and pre-maps.
//
// A one-vertex map of valence d is a matching of d points arranged on a
// circle (possibly decorated with signs/directions per edge), counted up to
// the dihedral symmetries of the circle. The orbit count is obtained from
// the Cauchy-Frobenius (Burnside) lemma: average, over the 2d symmetries,
// of the number of matchings each symmetry fixes. Reflections and rotations
// contribute in closed form; both contributions are implemented here, along
// with several independent evaluation routes used to cross-validate them.

#include <cstdint>
#include <string>

#include "onevertex/arith.hpp"
#include "onevertex/quadext.hpp"
#include "onevertex/series.hpp"
#include "onevertex/types.hpp"

namespace onevertex {

// --- matchings fixed by a median reflection -------------------------------
//
// mirror_fixed_count(t, n) counts type-t matchings of 2n points that a
// reflection without on-axis vertices fixes; n points sit on each side of
// the axis. Four independent routes compute the same sequence.

// Route 1: distinguished-element recurrence
//   f(n) = s f(n-1) + 2 t (n-1) f(n-2),  f(0) = 1, f(1) = s.
inline Count mirror_fixed_count(MapType type, unsigned n) {
  const TypeParams p = params(type);
  Count prev = 1;          // f(0)
  Count cur = Count(p.s);  // f(1)
  if (n == 0) return prev;
  for (unsigned i = 2; i <= n; ++i) {
    Count next = p.s * cur + 2 * p.t * Count(i - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Route 2: direct count. Choose 2j of the n mirror pairs to match crosswise
// (C(n,2j)(2j-1)!! pairings, 2t decorations each), match the rest with
// their mirror images (s ways each):
//   f(n) = sum_j s^(n-2j) (2t)^j C(n,2j) (2j-1)!!,  with 0^0 = 1.
inline Count mirror_fixed_count_sum(MapType type, unsigned n) {
  const TypeParams p = params(type);
  Count total = 0;
  for (unsigned j = 0; 2 * j <= n; ++j) {
    total += ipow(Count(p.s), n - 2 * j) * ipow(Count(2 * p.t), j) *
             binomial(n, 2 * j) * odd_double_factorial(2 * int64_t(j) - 1);
  }
  return total;
}

// Route 3: the exponential generating function exp(s x + t x^2),
// expanded exactly; f(n) = n! * coefficient of x^n.
inline SeriesPrefix mirror_fixed_egf(MapType type, unsigned order) {
  const TypeParams p = params(type);
  RationalSeries arg{Rational(0), Rational(p.s), Rational(p.t)};
  return SeriesPrefix{SeriesKind::egf, series_exp(arg, order)};
}

// Route 4: Hermite polynomials. Comparing EGFs gives
//   f(n) = w^n H_n(s / (2w))  with w = i sqrt(t),
// evaluated exactly in Q(w), w^2 = -t. The w-component of the result must
// vanish and the rational part must be a non-negative integer; anything
// else is an internal bug.
inline Count mirror_fixed_count_hermite(MapType type, unsigned n) {
  const TypeParams p = params(type);
  const unsigned t = static_cast<unsigned>(p.t);
  // s/(2w) = -(s/(2t)) w since 1/w = -w/t
  const QuadExt z(Rational(0), Rational(-p.s) / Rational(2 * p.t), t);
  QuadExt h_prev(Rational(1), Rational(0), t);  // H_0
  QuadExt h = Rational(2) * z;                  // H_1
  if (n == 0) h = h_prev;
  for (unsigned k = 1; k < n; ++k) {
    // H_{k+1}(z) = 2 z H_k(z) - 2 k H_{k-1}(z)
    QuadExt next = Rational(2) * (z * h) - QuadExt(Rational(2 * k), Rational(0), t) * h_prev;
    h_prev = h;
    h = next;
  }
  // w^n: (-t)^(n/2) for even n, (-t)^((n-1)/2) * w for odd n
  const Rational tpow = rpow(Rational(-int(t)), n / 2);
  QuadExt w_n = (n % 2 == 0) ? QuadExt(tpow, Rational(0), t)
                             : QuadExt(Rational(0), tpow, t);
  const QuadExt value = w_n * h;
  if (!value.b.is_zero())
    throw consistency_error("mirror_fixed_count_hermite: w-component nonzero");
  if (boost::multiprecision::denominator(value.a) != 1 || value.a < 0)
    throw consistency_error(
        "mirror_fixed_count_hermite: result not a non-negative integer");
  return Count(boost::multiprecision::numerator(value.a));
}

// --- contribution of the d reflections ------------------------------------
//
// Even d has d/2 axes through edge midpoints (each fixes f(d/2) matchings)
// and d/2 axes through two opposite vertices (m f(d/2 - 1) each). Odd d has
// d axes through one vertex; the on-axis vertex must stay unmatched, so
// graph-only types contribute nothing.
inline Count reflection_total(MapType type, unsigned d) {
  if (d == 0) throw std::domain_error("reflection_total: d must be positive");
  const TypeParams p = params(type);
  if (d % 2 == 0) {
    return Count(d / 2) * (mirror_fixed_count(type, d / 2) +
                           p.m * mirror_fixed_count(type, d / 2 - 1));
  }
  if (type.graph_only) return 0;
  return Count(d) * mirror_fixed_count(type, (d - 1) / 2);
}

// --- contribution of the d rotations ---------------------------------------

// Options for matching one orbit of a rotation subgroup to itself or leaving
// it unmatched. An orbit of size d/r pairs with itself only when antipodal
// points share the orbit, i.e. r | d/2 (never for odd d).
inline Count self_match_options(MapType type, std::uint64_t r,
                                std::uint64_t d) {
  if (d == 0 || r == 0 || d % r != 0)
    throw std::domain_error("self_match_options: r must divide d");
  const bool divides_half = (d % 2 == 0) && ((d / 2) % r == 0);
  if (divides_half) return Count(params(type).s);
  return type.graph_only ? Count(0) : Count(1);
}

// Matchings fixed by a rotation whose orbit count is r (i.e. gcd of the
// rotation step and d is r): choose 2j of the r orbits to match in pairs,
// t d/r decorated ways per pair, and self-match the rest.
inline Count rotation_fixed_count(MapType type, std::uint64_t r,
                                  std::uint64_t d) {
  if (d == 0 || r == 0 || d % r != 0)
    throw std::domain_error("rotation_fixed_count: r must divide d");
  const TypeParams p = params(type);
  const Count w = self_match_options(type, r, d);
  const Count pair_ways = Count(p.t) * Count(d / r);
  Count total = 0;
  for (std::uint64_t j = 0; 2 * j <= r; ++j) {
    total += binomial(r, 2 * j) * odd_double_factorial(2 * int64_t(j) - 1) *
             ipow(pair_ways, j) * ipow(w, r - 2 * j);
  }
  return total;
}

// Sum over all d rotations: phi(d/r) rotations share each divisor r of d.
inline Count rotation_total(MapType type, unsigned d) {
  if (d == 0) throw std::domain_error("rotation_total: d must be positive");
  Count total = 0;
  for (std::uint64_t r : divisors(d))
    total += euler_phi(d / r) * rotation_fixed_count(type, r, d);
  return total;
}

// --- the orbit count --------------------------------------------------------

// Number of non-isomorphic one-vertex pre-maps (maps, for graph-only types)
// of the given type and valence: the Burnside average over the dihedral
// group of order 2d. The division is exact by construction.
inline Count premap_count(MapType type, unsigned d) {
  if (d == 0) throw std::domain_error("premap_count: d must be positive");
  return exact_div(reflection_total(type, d) + rotation_total(type, d),
                   Count(2) * d, "premap_count");
}

// --- auxiliary counting sequences -------------------------------------------

// Number of involutions of a d-set == matchings of d points including the
// empty one. Computed by both the binomial sum and the telephone-number
// recurrence i(d) = i(d-1) + (d-1) i(d-2); they must agree.
inline Count involution_count(unsigned d) {
  Count sum = 0;
  for (unsigned k = 0; 2 * k <= d; ++k)
    sum += binomial(d, 2 * k) * odd_double_factorial(2 * int64_t(k) - 1);
  Count prev = 1, cur = 1;  // i(0), i(1)
  for (unsigned i = 2; i <= d; ++i) {
    Count next = cur + Count(i - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  const Count rec = d == 0 ? prev : cur;
  if (sum != rec)
    throw consistency_error("involution_count: sum and recurrence disagree");
  return sum;
}

// One-vertex pre-graphs of valence d: determined by the number of loops.
inline Count pregraph_count(unsigned d) {
  if (d == 0) throw std::domain_error("pregraph_count: d must be positive");
  return Count(1 + d / 2);
}

// One-vertex graphs of valence d: a single one for even d, none for odd.
inline Count graph_count(unsigned d) {
  if (d == 0) throw std::domain_error("graph_count: d must be positive");
  return Count(d % 2 == 0 ? 1 : 0);
}

// --- closed forms for the s = 0 types ---------------------------------------

// When s = 0 only the all-crosswise term of the sum survives:
// f(d) = (2t)^(d/2) (d-1)!! for even d, i.e. 2^d (d-1)!! at t = 2 and
// (2 sqrt 2)^d (d-1)!! = 8^(d/2) (d-1)!! at t = 4.
inline Count mirror_fixed_closed_form(MapType type, unsigned d) {
  const TypeParams p = params(type);
  if (p.s != 0)
    throw std::domain_error("mirror_fixed_closed_form: requires s = 0");
  if (d % 2 != 0)
    throw std::domain_error("mirror_fixed_closed_form: requires even d");
  return ipow(Count(2 * p.t), d / 2) * odd_double_factorial(int64_t(d) - 1);
}

// When every self-match option is 0 the rotation double sum collapses to
// the even divisors: R(d) = sum over even r | d of phi(d/r)(r-1)!!(td/r)^(r/2),
// i.e. (2d/r)^(r/2) at t = 2 and (4d/r)^(r/2) at t = 4.
inline Count rotation_total_reduced(MapType type, unsigned d) {
  const TypeParams p = params(type);
  if (p.s != 0 || !type.graph_only)
    throw std::domain_error(
        "rotation_total_reduced: requires a graph-only type with s = 0");
  if (d == 0 || d % 2 != 0)
    throw std::domain_error("rotation_total_reduced: requires even d");
  Count total = 0;
  for (std::uint64_t r : divisors(d)) {
    if (r % 2 != 0) continue;
    total += euler_phi(d / r) * odd_double_factorial(int64_t(r) - 1) *
             ipow(Count(p.t) * Count(d / r), r / 2);
  }
  return total;
}

// --- generating-function cross-checks ----------------------------------------

// For the s = 0 types the even-index subsequence f(2n-2) has the ordinary-
// looking EGF (1 - sqrt(1 - 4tx)) / (2t). Expands the radical exactly and
// compares n! [x^n] with f(2n-2) for n = 1..order. On mismatch returns false
// and reports the first failing n.
inline bool radical_egf_check(MapType type, unsigned order,
                              unsigned* first_failure = nullptr) {
  const TypeParams p = params(type);
  if (p.s != 0)
    throw std::domain_error("radical_egf_check: requires s = 0");
  const RationalSeries root = series_sqrt1p(Rational(-4 * p.t), order);
  for (unsigned n = 1; n <= order; ++n) {
    const Rational coeff = -root[n] / Rational(2 * p.t);
    const Rational scaled = Rational(factorial(n)) * coeff;
    Count expected = mirror_fixed_count(type, 2 * n - 2);
    if (boost::multiprecision::denominator(scaled) != 1 ||
        Count(boost::multiprecision::numerator(scaled)) != expected) {
      if (first_failure) *first_failure = n;
      return false;
    }
  }
  return true;
}

// The pre-graph and graph counts have ordinary generating functions
// 1/((1-x)^2 (1+x)) and 1/(1-x^2); expand both by exact series reciprocal
// and compare coefficients through the given order.
inline bool pg_ogf_check(unsigned order) {
  // (1-x)^2 (1+x) = 1 - x - x^2 + x^3
  const RationalSeries pregraph_denom{Rational(1), Rational(-1), Rational(-1),
                                      Rational(1)};
  const RationalSeries graph_denom{Rational(1), Rational(0), Rational(-1)};
  const RationalSeries ps = series_inverse(pregraph_denom, order);
  const RationalSeries gs = series_inverse(graph_denom, order);
  if (ps[0] != Rational(1) || gs[0] != Rational(1)) return false;
  for (unsigned d = 1; d <= order; ++d) {
    if (ps[d] != Rational(pregraph_count(d))) return false;
    if (gs[d] != Rational(graph_count(d))) return false;
  }
  return true;
}

}  // namespace onevertex
