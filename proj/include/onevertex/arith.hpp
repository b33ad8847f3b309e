#pragma once

// Exact integer and rational kernel. Every quantity in this library is
// computed exactly; there is no floating point anywhere.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace onevertex {

using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an identity that must hold by construction fails (e.g. a
// Burnside quotient with nonzero remainder). Indicates a bug, not bad input.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

// All divisors of d, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t d) {
  if (d == 0) throw std::domain_error("divisors: d must be positive");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t r = 1; r * r <= d; ++r) {
    if (d % r == 0) {
      low.push_back(r);
      if (r != d / r) high.push_back(d / r);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

// Euler's totient, by trial-division factorization.
inline Count euler_phi(std::uint64_t n) {
  if (n == 0) throw std::domain_error("euler_phi: n must be positive");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return Count(result);
}

// k!! for odd k >= -1, with (-1)!! = 1. Counts perfect matchings of k+1 points.
inline Count odd_double_factorial(std::int64_t k) {
  if (k < -1 || (k % 2 + 2) % 2 == 0)
    throw std::domain_error("odd_double_factorial: k must be odd and >= -1");
  Count result = 1;
  for (std::int64_t i = k; i > 1; i -= 2) result *= i;
  return result;
}

inline Count factorial(std::uint64_t n) {
  Count result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

// n choose k; 0 when k > n.
inline Count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Count result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: partial product is binomial(n-k+i, i)
  }
  return result;
}

// base^e with 0^0 = 1 (exponent 0 returns 1 unconditionally).
inline Count ipow(const Count& base, std::uint64_t e) {
  Count result = 1;
  Count b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

inline Rational rpow(const Rational& base, std::uint64_t e) {
  Rational result = 1;
  Rational b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

// Exact quotient; throws consistency_error if the division leaves a remainder.
inline Count exact_div(const Count& numerator, const Count& divisor,
                       const char* context) {
  Count q, r;
  boost::multiprecision::divide_qr(numerator, divisor, q, r);
  if (!r.is_zero())
    throw consistency_error(std::string(context) + ": non-exact division");
  return q;
}

}  // namespace onevertex
