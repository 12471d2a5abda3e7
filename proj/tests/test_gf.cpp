#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "patwilf/gf.hpp"

using namespace patwilf;

namespace {
const Registry& reg() {
  static const Registry r = Registry::load(default_registry_path());
  return r;
}

size_t pos_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.pos;
  }
  FAIL("expected a ParseError");
  return static_cast<size_t>(-1);
}
}  // namespace

TEST_CASE("parse respects precedence and associativity") {
  const GfPtr e = parse_gf("1+2*x^2");
  REQUIRE(e->kind == GfKind::Add);
  CHECK(e->a->kind == GfKind::RationalConst);
  REQUIRE(e->b->kind == GfKind::Mul);
  CHECK(e->b->b->kind == GfKind::Pow);
  CHECK(e->b->b->exponent == 2);

  const GfPtr l = parse_gf("1-2-3");
  REQUIRE(l->kind == GfKind::Sub);
  CHECK(l->a->kind == GfKind::Sub);

  const GfPtr d = parse_gf("8/4/2");
  REQUIRE(d->kind == GfKind::Div);
  CHECK(d->a->kind == GfKind::Div);

  // '-' before a factor binds looser than '^'.
  const GfPtr n = parse_gf("-x^2");
  REQUIRE(n->kind == GfKind::Neg);
  CHECK(n->a->kind == GfKind::Pow);

  CHECK(parse_gf("x^-2")->exponent == -2);
  CHECK(gf_equal(parse_gf(" ( 1 + x ) "), parse_gf("(1+x)")));
}

TEST_CASE("parse errors carry byte positions") {
  CHECK(pos_of([] { parse_gf("C^"); }) == 2);
  CHECK(pos_of([] { parse_gf("y+1"); }) == 0);
  CHECK(pos_of([] { parse_gf("x x"); }) == 2);
  CHECK(pos_of([] { parse_gf(""); }) == 0);
  CHECK(pos_of([] { parse_gf("(1+x"); }) == 4);
  CHECK(pos_of([] { parse_gf("sqrt 5"); }) == 5);
  CHECK(pos_of([] { parse_gf("2^9999999"); }) == 2);
  CHECK_THROWS_AS(parse_gf("1+*2"), ParseError);
  CHECK_THROWS_AS(parse_gf("()"), ParseError);
  CHECK_THROWS_AS(parse_gf("x^y"), ParseError);
  // The message embeds the position for log readability.
  try {
    parse_gf("C^");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
  }
}

TEST_CASE("render emits a canonical form that reparses identically") {
  for (const char* text : {"x", "C", "r5", "42", "1+2*x", "(1-x)^-1", "-x^2",
                           "sqrt(1-4*x)", "C^2*x-1/2", "-(1-x)/(1+x)", "(x^2)^3"}) {
    const GfPtr e = parse_gf(text);
    CAPTURE(text);
    CHECK(gf_equal(parse_gf(render_gf(e)), e));
  }
  // Programmatic trees that the grammar cannot write directly still render
  // to something parseable.
  const GfPtr nested = GfExpr::pow(GfExpr::pow(GfExpr::var_x(), 2), 3);
  CHECK(gf_equal(parse_gf(render_gf(nested)), nested));
  const GfPtr negbase = GfExpr::pow(GfExpr::neg_of(GfExpr::var_x()), 2);
  CHECK(gf_equal(parse_gf(render_gf(negbase)), negbase));
}

TEST_CASE("random expression trees survive the round trip") {
  std::mt19937 rng(5150);
  std::function<GfPtr(int)> gen = [&](int depth) -> GfPtr {
    const int pick = static_cast<int>(rng() % (depth <= 0 ? 4u : 10u));
    switch (pick) {
      case 0: return GfExpr::rational(Rat(static_cast<long>(rng() % 20)));
      case 1: return GfExpr::var_x();
      case 2: return GfExpr::catalan_fn();
      case 3: return GfExpr::sqrt5();
      case 4: return GfExpr::sqrt_of(gen(depth - 1));
      case 5: return GfExpr::neg_of(gen(depth - 1));
      case 6: return GfExpr::pow(gen(depth - 1), static_cast<int>(rng() % 7) - 3);
      case 7: return GfExpr::add(gen(depth - 1), gen(depth - 1));
      case 8: return GfExpr::sub(gen(depth - 1), gen(depth - 1));
      default: return GfExpr::mul(gen(depth - 1), gen(depth - 1));
    }
  };
  for (int trial = 0; trial < 200; ++trial) {
    const GfPtr e = gen(4);
    const std::string text = render_gf(e);
    CAPTURE(text);
    CHECK(gf_equal(parse_gf(text), e));
    CHECK(render_gf(parse_gf(text)) == text);
  }
}

TEST_CASE("evaluation matches direct series construction") {
  CHECK(agrees(eval_gf(parse_gf("C"), 12), catalan(12)));
  CHECK(agrees(eval_gf(parse_gf("(1-sqrt(1-4*x))/(2*x)"), 16), catalan(16)));

  const LaurentSeries geo = eval_gf(parse_gf("1/(1-x)"), 10);
  for (int k = 0; k < 10; ++k) CHECK(geo.coefficient(k) == QuadExt(1L));

  const LaurentSeries five = eval_gf(parse_gf("r5*r5"), 6);
  CHECK(five.coefficient(0) == QuadExt(5L));
  CHECK(eval_gf(parse_gf("r5"), 6).coefficient(0) == quadext_sqrt5());

  CHECK(agrees(eval_gf(parse_gf("x^-1*x"), 8), LaurentSeries::constant(Rat(1), 8)));

  // Composite evaluation agrees with composing evaluated parts.
  const GfPtr f = parse_gf("(1-x)^-1");
  const GfPtr g = parse_gf("C");
  CHECK(agrees(eval_gf(GfExpr::mul(f, g), 14), mul(eval_gf(f, 14), eval_gf(g, 14))));
  CHECK(agrees(eval_gf(GfExpr::sub(f, g), 14), sub(eval_gf(f, 14), eval_gf(g, 14))));
}

TEST_CASE("evaluation keeps the requested window through Laurent detours") {
  // Excursions to the deepest allowed principal part and back must still
  // deliver every requested coefficient.
  const LaurentSeries ok = eval_gf(parse_gf("1/x^8*x^8/x^8*x^8"), kDefaultOrder);
  CHECK(agrees(ok, LaurentSeries::constant(Rat(1), kDefaultOrder)));
  const LaurentSeries viaC = eval_gf(parse_gf("C/x^8*x^8/x^8*x^8"), kDefaultOrder);
  CHECK(agrees(viaC, catalan(kDefaultOrder)));
  CHECK(viaC.order() >= kDefaultOrder);
  // Going below the principal-part cap is a hard error, not silent loss.
  CHECK_THROWS_AS(eval_gf(parse_gf("x^-9"), kDefaultOrder), CapacityError);
  CHECK_THROWS_AS(eval_gf(parse_gf("(1/x^8)^2"), kDefaultOrder), CapacityError);
}

TEST_CASE("registry loads the full formula table") {
  CHECK(reg().keys().size() == 39);
  const std::vector<int> mains = reg().main_cases();
  CHECK(mains.size() == 33);
  CHECK(std::is_sorted(mains.begin(), mains.end()));
  CHECK(mains.front() == 29);
  CHECK(mains.back() == 241);
  CHECK(reg().has("69"));
  CHECK(reg().has("49.G2"));
  CHECK_FALSE(reg().has("237"));
  CHECK_THROWS_AS(reg().entry("237"), NotFoundError);
  CHECK_THROWS_AS(reg().case_entry(237), NotFoundError);

  // Sublabeled entries refine their parent case and share its triple.
  for (const auto& key : reg().keys()) {
    const auto dot = key.find('.');
    if (dot == std::string::npos) continue;
    const std::string parent = key.substr(0, dot);
    REQUIRE(reg().has(parent));
    CHECK(reg().entry(key).triple == reg().entry(parent).triple);
  }
}

TEST_CASE("registry formulas are canonical under parse and render") {
  for (const auto& key : reg().keys()) {
    const RegistryEntry& ent = reg().entry(key);
    CAPTURE(key);
    CHECK(gf_equal(parse_gf(render_gf(ent.formula)), ent.formula));
  }
}

TEST_CASE("registry stanzas with lets expand to the bound expression") {
  const Registry r = Registry::load_text(
      "case: 7\n"
      "triple: 1234,1324,3412\n"
      "let a = 1-x\n"
      "let b = a*a\n"
      "f: b/a\n"
      "ref: exercise\n",
      "inline");
  const GfPtr expect = parse_gf("((1-x)*(1-x))/(1-x)");
  CHECK(gf_equal(r.entry("7").formula, expect));
  CHECK(r.entry("7").formula_text == "b/a");
  CHECK(r.entry("7").triple == PatternTriple::parse("1234,1324,3412"));
}

TEST_CASE("registry load errors name the offending line") {
  auto load_err = [](const std::string& text) -> std::string {
    try {
      Registry::load_text(text, "mem");
    } catch (const InputError& e) {
      return e.what();
    }
    FAIL("expected InputError");
    return {};
  };

  CHECK(load_err("case: 3\ntriple: 1234,1324,3412\nf: x\n\n"
                 "case: 3\ntriple: 1234,1324,3412\nf: x\n")
            .find("mem:") != std::string::npos);
  CHECK(load_err("case: 3\nf: x\n").find("triple") != std::string::npos);
  CHECK(load_err("case: 3\ntriple: 1234,1324,3412\n").find("f:") != std::string::npos);
  CHECK(load_err("triple: 1234,1324,3412\nf: x\n").find("case") != std::string::npos);
  CHECK(load_err("case: 3\ntriple: 1234,1324,3412\nf: x+\n").find("mem:3") !=
        std::string::npos);
  CHECK(load_err("case: 3\ntriple: 1234,1324,3412\nlet a = x\nlet a = C\nf: a\n")
            .find("duplicate let") != std::string::npos);
  CHECK(load_err("case: 3\ntriple: 1234,1324,3412\nf: nope\n").find("unknown") !=
        std::string::npos);
  CHECK_THROWS_AS(Registry::load("/nonexistent/registry.txt"), InputError);
}
