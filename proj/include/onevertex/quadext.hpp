#pragma once

// Exact arithmetic in Q(w) with w^2 = -t, t a small positive integer.
// Values are a + b*w with rational a, b. Used to evaluate Hermite
// polynomials at imaginary arguments without any floating point, so that
// "the imaginary part vanishes" is an exact, checkable statement.

#include <stdexcept>

#include "onevertex/arith.hpp"

namespace onevertex {

struct QuadExt {
  Rational a;      // rational part
  Rational b;      // coefficient of w
  unsigned t = 1;  // w^2 = -t

  QuadExt() = default;
  QuadExt(Rational a_, Rational b_, unsigned t_)
      : a(std::move(a_)), b(std::move(b_)), t(t_) {
    if (t == 0) throw std::domain_error("QuadExt: t must be positive");
  }

  friend bool operator==(const QuadExt&, const QuadExt&) = default;

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    check_same(x, y);
    return {x.a + y.a, x.b + y.b, x.t};
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    check_same(x, y);
    return {x.a - y.a, x.b - y.b, x.t};
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    check_same(x, y);
    // (a + bw)(c + dw) = ac - t*bd + (ad + bc) w
    return {x.a * y.a - Rational(x.t) * x.b * y.b, x.a * y.b + x.b * y.a, x.t};
  }
  friend QuadExt operator*(const Rational& c, const QuadExt& x) {
    return {c * x.a, c * x.b, x.t};
  }

  QuadExt conjugate() const { return {a, -b, t}; }

 private:
  static void check_same(const QuadExt& x, const QuadExt& y) {
    if (x.t != y.t)
      throw std::domain_error("QuadExt: mixed extensions (different t)");
  }
};

}  // namespace onevertex
