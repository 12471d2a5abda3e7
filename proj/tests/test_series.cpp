#include <doctest.h>

#include <random>

#include "patwilf/series.hpp"

using namespace patwilf;

namespace {
QuadExt qe(long a, long b = 0) { return QuadExt{Rat(a), Rat(b)}; }
}  // namespace

TEST_CASE("quadratic extension field arithmetic") {
  const QuadExt r5 = quadext_sqrt5();
  CHECK(r5 * r5 == qe(5));
  CHECK((qe(1, 1) * qe(1, -1)) == qe(-4));
  CHECK(qe(2, 1).inv() == qe(-2, 1));
  CHECK(qe(2, 1) * qe(2, 1).inv() == qe(1));
  CHECK((qe(7, 3) / qe(7, 3)) == qe(1));
  CHECK_THROWS_AS(qe(0).inv(), SeriesError);
  // 1/(a + b*r5) exists whenever (a, b) != (0, 0): r5 is irrational.
  CHECK(qe(5, 1) * qe(5, 1).inv() == qe(1));
}

TEST_CASE("quadratic extension square roots pick the positive branch") {
  CHECK(qe(9).sqrt() == qe(3));
  CHECK(QuadExt(Rat(1, 4)).sqrt() == QuadExt(Rat(1, 2)));
  CHECK(qe(5).sqrt() == qe(0, 1));
  CHECK(QuadExt(Rat(5, 4)).sqrt() == QuadExt(Rat(0), Rat(1, 2)));
  CHECK(qe(9, 4).sqrt() == qe(2, 1));      // (2 + r5)^2 = 9 + 4 r5
  CHECK(qe(6, 2).sqrt() == qe(1, 1));      // (1 + r5)^2 = 6 + 2 r5
  CHECK(qe(6, -2).sqrt() == qe(1, -1));    // branch with positive rational part
  CHECK_THROWS_AS(qe(7).sqrt(), SeriesError);
  CHECK_THROWS_AS(qe(-1).sqrt(), SeriesError);
  CHECK_THROWS_AS(qe(2, 1).sqrt(), SeriesError);
}

TEST_CASE("coefficient access errors on both sides of the window") {
  const LaurentSeries x2 = mul(LaurentSeries::x(10), LaurentSeries::x(10));
  CHECK(x2.valuation() == 2);
  CHECK(x2.coefficient(2) == qe(1));
  CHECK_THROWS_AS(x2.coefficient(-1), SeriesError);
  CHECK_THROWS_AS(x2.coefficient(1), SeriesError);
  CHECK_THROWS_AS(x2.coefficient(11), SeriesError);
  CHECK(x2.coeff_or_zero(1) == qe(0));
  CHECK(x2.coeff_or_zero(-5) == qe(0));
  CHECK_THROWS_AS(x2.coeff_or_zero(11), SeriesError);

  const LaurentSeries z = LaurentSeries::zero(6);
  CHECK(z.is_zero());
  CHECK(z.valuation() == z.order());
  CHECK(z.coefficient(0) == qe(0));
  CHECK(z.coefficient(-3) == qe(0));
  CHECK_THROWS_AS(z.coefficient(6), SeriesError);
}

TEST_CASE("raw construction normalizes the leading window") {
  const LaurentSeries s(0, {qe(0), qe(0), qe(1), qe(4)}, 4);
  CHECK(s.valuation() == 2);
  CHECK(s.coefficient(3) == qe(4));
  const LaurentSeries all_zero(1, {qe(0), qe(0)}, 3);
  CHECK(all_zero.is_zero());
  CHECK(all_zero.valuation() == 3);
  CHECK_THROWS_AS(LaurentSeries(0, {qe(1)}, 3), SeriesError);   // window size mismatch
}

TEST_CASE("order propagation through arithmetic") {
  const LaurentSeries f = LaurentSeries::constant(Rat(1), 5);
  const LaurentSeries g = LaurentSeries::x(12);
  CHECK(add(f, g).order() == 5);
  CHECK(sub(g, f).order() == 5);
  // product order: min(N1 + v2, N2 + v1)
  CHECK(mul(f, g).order() == 6);
  CHECK(mul(g, g).order() == 13);
  // geometric series: 1 / (1 - x)
  const LaurentSeries geo = div(LaurentSeries::constant(Rat(1), 20),
                                sub(LaurentSeries::constant(Rat(1), 20), LaurentSeries::x(20)));
  for (int k = 0; k < 20; ++k) CHECK(geo.coefficient(k) == qe(1));
  CHECK_THROWS_AS(div(f, LaurentSeries::zero(5)), SeriesError);
}

TEST_CASE("valuations are capped below") {
  const LaurentSeries one = LaurentSeries::constant(Rat(1), 20);
  const LaurentSeries xinv = div(one, LaurentSeries::x(20));
  CHECK(xinv.valuation() == -1);
  CHECK(xinv.coefficient(-1) == qe(1));
  CHECK_THROWS_AS(div(one, pow(LaurentSeries::x(20), kVMax + 1)), CapacityError);
  CHECK(div(one, pow(LaurentSeries::x(20), kVMax)).valuation() == -kVMax);
}

TEST_CASE("powers, negation and subtraction") {
  const LaurentSeries one = LaurentSeries::constant(Rat(1), 10);
  const LaurentSeries b = add(one, LaurentSeries::x(10));   // 1 + x
  const LaurentSeries cube = pow(b, 3);
  CHECK(cube.coefficient(0) == qe(1));
  CHECK(cube.coefficient(1) == qe(3));
  CHECK(cube.coefficient(2) == qe(3));
  CHECK(cube.coefficient(3) == qe(1));
  CHECK(cube.coefficient(4) == qe(0));
  CHECK(pow(b, 0).coefficient(0) == qe(1));
  CHECK(pow(LaurentSeries::x(10), -2).valuation() == -2);
  CHECK(agrees(mul(pow(b, -2), pow(b, 2)), one));
  CHECK(add(neg(b), b).is_zero());
}

TEST_CASE("series square roots") {
  const LaurentSeries one = LaurentSeries::constant(Rat(1), 16);
  const LaurentSeries b = add(one, LaurentSeries::x(16));
  CHECK(agrees(sqrt(mul(b, b)), b));
  const LaurentSeries shifted = mul(pow(LaurentSeries::x(16), 2), b);   // x^2 (1 + x)
  const LaurentSeries r = sqrt(shifted);
  CHECK(r.valuation() == 1);
  CHECK(agrees(mul(r, r), shifted));
  CHECK_THROWS_AS(sqrt(mul(LaurentSeries::x(16), b)), SeriesError);   // odd valuation
  // leading coefficient 7 has no sqrt in the field
  CHECK_THROWS_AS(sqrt(LaurentSeries::constant(Rat(7), 16)), SeriesError);
  // sqrt(5 + ...) lands in the extension
  const LaurentSeries r5series = sqrt(add(LaurentSeries::constant(Rat(5), 16), LaurentSeries::x(16)));
  CHECK(r5series.coefficient(0) == QuadExt(Rat(0), Rat(1)));
}

TEST_CASE("catalan series and its defining identity") {
  const LaurentSeries c = catalan(12);
  const long expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
  for (int k = 0; k < 12; ++k) CHECK(c.coefficient(k) == qe(expect[k]));
  // C = 1 + x C^2
  const LaurentSeries rhs = add(LaurentSeries::constant(Rat(1), 12),
                                mul(LaurentSeries::x(12), mul(c, c)));
  CHECK(agrees(c, rhs));
}

TEST_CASE("catalan radical form matches the convolution recurrence") {
  const int N = 30;
  const LaurentSeries one = LaurentSeries::constant(Rat(1), N + 2);
  const LaurentSeries four_x = mul(LaurentSeries::constant(Rat(4), N + 2), LaurentSeries::x(N + 2));
  const LaurentSeries rad = div(sub(one, sqrt(sub(one, four_x))),
                                mul(LaurentSeries::constant(Rat(2), N + 2), LaurentSeries::x(N + 2)));
  CHECK(agrees(rad, catalan(N)));
}

TEST_CASE("random square root and division round-trips") {
  std::mt19937 rng(987431);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<QuadExt> fw, gw;
    fw.push_back(qe(1 + static_cast<long>(rng() % 4)));
    gw.push_back(qe(1 + static_cast<long>(rng() % 4), static_cast<long>(rng() % 3)));
    for (int k = 1; k < 14; ++k) {
      fw.push_back(qe(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) - 1));
      gw.push_back(qe(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) - 1));
    }
    const LaurentSeries f(0, fw, 14), g(0, gw, 14);
    CHECK(agrees(mul(div(f, g), g), f));
    const LaurentSeries sq = mul(f, f);
    CHECK(agrees(mul(sqrt(sq), sqrt(sq)), sq));
  }
}

TEST_CASE("agreement only inspects the common window") {
  const LaurentSeries c = catalan(20);
  CHECK(agrees(c, c.truncated(5)));
  CHECK(agrees(c.truncated(5), c));
  LaurentSeries different = add(c.truncated(5), LaurentSeries::monomial(qe(1), 3, 5));
  CHECK_FALSE(agrees(c, different));
  CHECK(agrees(LaurentSeries::zero(4), LaurentSeries::zero(30)));
}
