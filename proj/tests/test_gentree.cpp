#include <doctest.h>

#include "patwilf/gentree.hpp"
#include "patwilf/gf.hpp"

using namespace patwilf;

namespace {
const Registry& reg() {
  static const Registry r = Registry::load(default_registry_path());
  return r;
}

BigInt coeff_int(const LaurentSeries& s, int n) {
  const QuadExt c = s.coeff_or_zero(n);
  REQUIRE(c.is_rational());
  REQUIRE(boost::multiprecision::denominator(c.a) == 1);
  return boost::multiprecision::numerator(c.a);
}
}  // namespace

TEST_CASE("rule-system level totals match the frozen census") {
  const BigInt expect69[] = {2, 6, 21, 73, 236, 700, 1919, 4927, 12006, 28090,
                             63705, 141109, 307088, 659576, 1402947};
  const BigInt expect88[] = {2, 6, 21, 73, 240, 744, 2192, 6192, 16896, 44800,
                             115968, 294144, 733184, 1800192, 4362240};
  const auto t69 = level_counts(rules_case69(), 16);
  const auto t88 = level_counts(rules_case88(), 16);
  REQUIRE(t69.size() == 15);
  REQUIRE(t88.size() == 15);
  for (size_t i = 0; i < 15; ++i) {
    CAPTURE(i);
    CHECK(t69[i] == expect69[i]);
    CHECK(t88[i] == expect88[i]);
  }
}

TEST_CASE("level censuses are internally consistent") {
  for (const RuleSystem& rs : {rules_case69(), rules_case88()}) {
    const auto census = level_census(rs, 10);
    const auto totals = level_counts(rs, 10);
    REQUIRE(census.size() == totals.size());
    for (size_t i = 0; i < census.size(); ++i) {
      BigInt sum = 0;
      for (const auto& [label, mult] : census[i]) {
        CHECK(mult > 0);
        CHECK(label.k >= 1);   // single-active-site permutations are real
        sum += mult;
      }
      CHECK(sum == totals[i]);
    }
    // Roots appear exactly once each at the root level.
    CHECK(census[0].size() == rs.roots.size());
    for (const auto& r : rs.roots) CHECK(census[0].at(r) == 1);
  }
}

TEST_CASE("every label produces exactly k children") {
  for (const RuleSystem& rs : {rules_case69(), rules_case88()}) {
    const auto census = level_census(rs, 9);
    for (const auto& level : census)
      for (const auto& [label, mult] : level) {
        CAPTURE(rs.name);
        CAPTURE(label.k);
        CAPTURE(label.t);
        CHECK(static_cast<int>(rs.children(label).size()) == label.k);
      }
  }
}

TEST_CASE("tree totals reproduce the closed-form series") {
  for (int id : {69, 88}) {
    const RuleSystem rs = id == 69 ? rules_case69() : rules_case88();
    const LaurentSeries s = eval_gf(reg().case_entry(id).formula, 15);
    const auto totals = level_counts(rs, 13);
    for (size_t i = 0; i < totals.size(); ++i) {
      const int n = rs.root_level + static_cast<int>(i);
      CAPTURE(id);
      CAPTURE(n);
      CHECK(totals[i] == coeff_int(s, n));
    }
  }
}

TEST_CASE("flavor slices of the second rule system have rational series") {
  // Closed forms for the per-flavor populations, summed over k.
  const char* flavor_gf[5] = {
      "x^2/(1-2*x)",
      "x^3/(1-2*x)",
      "(x^2*(1-4*x+7*x^2-4*x^3-2*x^4))/(1-2*x)^3",
      "(x^3*(1-x)*(1-2*x^2))/(1-2*x)^3",
      "(x^4*(x+1)*(3-4*x))/(1-2*x)^4",
  };
  const auto census = level_census(rules_case88(), 14);
  for (int f = 1; f <= 5; ++f) {
    const LaurentSeries s = eval_gf(parse_gf(flavor_gf[f - 1]), 16);
    for (size_t i = 0; i < census.size(); ++i) {
      const int n = 2 + static_cast<int>(i);
      BigInt sum = 0;
      for (const auto& [label, mult] : census[i])
        if (label.t == f) sum += mult;
      CAPTURE(f);
      CAPTURE(n);
      CHECK(sum == coeff_int(s, n));
    }
  }
}

TEST_CASE("materialized trees agree with the abstract rules") {
  const MaterializeReport r69 = materialize_check_case69(8);
  CAPTURE(r69.detail);
  CHECK(r69.ok);
  CHECK(r69.levels_checked >= 6);

  const MaterializeReport r88 = materialize_check_case88(8);
  CAPTURE(r88.detail);
  CHECK(r88.ok);
  CHECK(r88.levels_checked >= 6);
}
