#include <catch2/catch_amalgamated.hpp>

#include "onevertex/series.hpp"

using namespace onevertex;

namespace {

RationalSeries negated(RationalSeries a) {
  for (Rational& c : a) c = -c;
  return a;
}

bool is_one(const RationalSeries& a) {
  if (a.empty() || a[0] != Rational(1)) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!a[i].is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("series exponential") {
  // exp(x): coefficients 1/n!
  RationalSeries e = series_exp({Rational(0), Rational(1)}, 10);
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(e[n] == Rational(1) / Rational(factorial(n)));

  // exp(a) exp(-a) = 1
  RationalSeries a{Rational(0), Rational(3), Rational(-2), Rational(1, 5)};
  CHECK(is_one(series_mul(series_exp(a, 16), series_exp(negated(a), 16), 16)));

  CHECK_THROWS_AS(series_exp({Rational(1)}, 4), std::domain_error);
}

TEST_CASE("series reciprocal") {
  RationalSeries a{Rational(2), Rational(-1), Rational(0), Rational(7, 3)};
  CHECK(is_one(series_mul(a, series_inverse(a, 12), 12)));

  // 1/(1-x) is the all-ones series
  RationalSeries geo = series_inverse({Rational(1), Rational(-1)}, 8);
  for (const Rational& c : geo) CHECK(c == Rational(1));

  CHECK_THROWS_AS(series_inverse({Rational(0), Rational(1)}, 4),
                  std::domain_error);
}

TEST_CASE("binomial-series square root") {
  for (int c : {-8, -16, 3}) {
    RationalSeries root = series_sqrt1p(Rational(c), 14);
    RationalSeries squared = series_mul(root, root, 14);
    CHECK(squared[0] == Rational(1));
    CHECK(squared[1] == Rational(c));
    for (std::size_t n = 2; n <= 14; ++n) CHECK(squared[n].is_zero());
  }
}

TEST_CASE("egf term extraction") {
  SeriesPrefix egf{SeriesKind::egf,
                   series_exp({Rational(0), Rational(1)}, 6)};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(egf_term(egf, n) == 1);

  SeriesPrefix bad{SeriesKind::egf, {Rational(1), Rational(1, 3)}};
  CHECK_THROWS_AS(egf_term(bad, 1), consistency_error);

  SeriesPrefix ogf{SeriesKind::ogf, {Rational(1)}};
  CHECK_THROWS_AS(egf_term(ogf, 0), std::domain_error);
  CHECK_THROWS_AS(egf_term(egf, 7), std::domain_error);
}
