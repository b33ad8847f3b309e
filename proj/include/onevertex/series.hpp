#pragma once

// Truncated formal power series over exact rationals. A series of order N is
// a vector of N+1 coefficients, coefficient of x^n at index n. Only the
// operations the generating-function checks need: product, exponential,
// reciprocal, and the binomial-series square root of 1 + c x.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "onevertex/arith.hpp"

namespace onevertex {

using RationalSeries = std::vector<Rational>;

enum class SeriesKind { egf, ogf };

// A generating-function prefix together with its interpretation. For an EGF
// the n-th sequence term is n! * coefficients[n].
struct SeriesPrefix {
  SeriesKind kind = SeriesKind::ogf;
  RationalSeries coefficients;

  std::size_t order() const { return coefficients.size() - 1; }
};

inline RationalSeries series_mul(const RationalSeries& a,
                                 const RationalSeries& b, std::size_t order) {
  RationalSeries c(order + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
      c[i + j] += a[i] * b[j];
  }
  return c;
}

// exp(a) for a series with zero constant term, via b' = a' b:
// n b_n = sum_{k=1..n} k a_k b_{n-k}.
inline RationalSeries series_exp(const RationalSeries& a, std::size_t order) {
  if (!a.empty() && !a[0].is_zero())
    throw std::domain_error("series_exp: constant term must be 0");
  RationalSeries b(order + 1, Rational(0));
  b[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n && k < a.size(); ++k)
      acc += Rational(static_cast<unsigned>(k)) * a[k] * b[n - k];
    b[n] = acc / Rational(static_cast<unsigned>(n));
  }
  return b;
}

// 1/a for a series with nonzero constant term.
inline RationalSeries series_inverse(const RationalSeries& a,
                                     std::size_t order) {
  if (a.empty() || a[0].is_zero())
    throw std::domain_error("series_inverse: constant term must be nonzero");
  RationalSeries b(order + 1, Rational(0));
  b[0] = Rational(1) / a[0];
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n && k < a.size(); ++k)
      acc += a[k] * b[n - k];
    b[n] = -acc / a[0];
  }
  return b;
}

// sqrt(1 + c x) by the binomial series: coefficient of x^n is C(1/2, n) c^n.
inline RationalSeries series_sqrt1p(const Rational& c, std::size_t order) {
  RationalSeries b(order + 1, Rational(0));
  Rational coeff(1);  // C(1/2, 0)
  Rational cpow(1);
  b[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    // C(1/2, n) = C(1/2, n-1) * (1/2 - (n-1)) / n
    coeff *= (Rational(1, 2) - Rational(static_cast<unsigned>(n - 1))) /
             Rational(static_cast<unsigned>(n));
    cpow *= c;
    b[n] = coeff * cpow;
  }
  return b;
}

// n! * [x^n] of an EGF prefix; throws consistency_error if the scaled
// coefficient is not an integer.
inline Count egf_term(const SeriesPrefix& s, std::size_t n) {
  if (s.kind != SeriesKind::egf)
    throw std::domain_error("egf_term: series is not an EGF");
  if (n >= s.coefficients.size())
    throw std::domain_error("egf_term: index beyond truncation order");
  Rational scaled = Rational(factorial(n)) * s.coefficients[n];
  if (boost::multiprecision::denominator(scaled) != 1)
    throw consistency_error("egf_term: n! * coefficient is not an integer");
  return Count(boost::multiprecision::numerator(scaled));
}

}  // namespace onevertex
