#include <cctype>
#include <map>
#include <utility>

#include "patwilf/gf.hpp"

namespace patwilf {

GfPtr GfExpr::rational(Rat v) {
  if (v < 0) throw InputError("rational constants are nonnegative; wrap in Neg");
  auto e = std::make_shared<GfExpr>();
  e->kind = GfKind::RationalConst;
  e->value = std::move(v);
  return e;
}

namespace {

GfPtr leaf(GfKind k) {
  auto e = std::make_shared<GfExpr>();
  e->kind = k;
  return e;
}

GfPtr node1(GfKind k, GfPtr a) {
  auto e = std::make_shared<GfExpr>();
  e->kind = k;
  e->a = std::move(a);
  return e;
}

GfPtr node2(GfKind k, GfPtr a, GfPtr b) {
  auto e = std::make_shared<GfExpr>();
  e->kind = k;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

}  // namespace

GfPtr GfExpr::sqrt5() { return leaf(GfKind::Sqrt5Const); }
GfPtr GfExpr::var_x() { return leaf(GfKind::VarX); }
GfPtr GfExpr::catalan_fn() { return leaf(GfKind::CatalanFn); }
GfPtr GfExpr::sqrt_of(GfPtr e) { return node1(GfKind::Sqrt, std::move(e)); }
GfPtr GfExpr::neg_of(GfPtr e) { return node1(GfKind::Neg, std::move(e)); }
GfPtr GfExpr::add(GfPtr l, GfPtr r) { return node2(GfKind::Add, std::move(l), std::move(r)); }
GfPtr GfExpr::sub(GfPtr l, GfPtr r) { return node2(GfKind::Sub, std::move(l), std::move(r)); }
GfPtr GfExpr::mul(GfPtr l, GfPtr r) { return node2(GfKind::Mul, std::move(l), std::move(r)); }
GfPtr GfExpr::div(GfPtr l, GfPtr r) { return node2(GfKind::Div, std::move(l), std::move(r)); }

GfPtr GfExpr::pow(GfPtr base, int e) {
  auto n = std::make_shared<GfExpr>();
  n->kind = GfKind::Pow;
  n->a = std::move(base);
  n->exponent = e;
  return n;
}

namespace {

struct Parser {
  const std::string& text;
  const std::map<std::string, GfPtr>* bindings;
  size_t pos = 0;

  Parser(const std::string& t, const std::map<std::string, GfPtr>* b)
      : text(t), bindings(b) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool eat(char c) {
    if (peek_is(c)) { ++pos; return true; }
    return false;
  }

  [[noreturn]] void fail(size_t at, const std::string& msg) { throw ParseError(at, msg); }

  GfPtr parse_expr() {
    GfPtr e = parse_term();
    for (;;) {
      if (eat('+')) e = GfExpr::add(e, parse_term());
      else if (eat('-')) e = GfExpr::sub(e, parse_term());
      else return e;
    }
  }

  GfPtr parse_term() {
    GfPtr e = parse_factor();
    for (;;) {
      if (eat('*')) e = GfExpr::mul(e, parse_factor());
      else if (eat('/')) e = GfExpr::div(e, parse_factor());
      else return e;
    }
  }

  GfPtr parse_factor() {
    if (eat('-')) return GfExpr::neg_of(parse_factor());
    GfPtr e = parse_atom();
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = GfExpr::pow(e, parse_signed_int());
    }
    return e;
  }

  int parse_signed_int() {
    skip_ws();
    const size_t at = pos;
    bool negate = false;
    if (pos < text.size() && text[pos] == '-') { negate = true; ++pos; }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(pos, "expected integer exponent");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail(at, "exponent too large");
      ++pos;
    }
    return static_cast<int>(negate ? -v : v);
  }

  GfPtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail(pos, "expected expression");
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      return GfExpr::rational(Rat(v));
    }
    if (c == '(') {
      ++pos;
      GfPtr e = parse_expr();
      if (!eat(')')) fail(pos, "expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t at = pos;
      std::string id;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        id += text[pos];
        ++pos;
      }
      if (id == "x") return GfExpr::var_x();
      if (id == "C") return GfExpr::catalan_fn();
      if (id == "r5") return GfExpr::sqrt5();
      if (id == "sqrt") {
        if (!eat('(')) fail(pos, "expected '(' after sqrt");
        GfPtr e = parse_expr();
        if (!eat(')')) fail(pos, "expected ')'");
        return GfExpr::sqrt_of(e);
      }
      if (bindings) {
        auto it = bindings->find(id);
        if (it != bindings->end()) return it->second;
      }
      fail(at, "unknown identifier '" + id + "'");
    }
    fail(pos, std::string("unexpected character '") + c + "'");
  }

  GfPtr run() {
    GfPtr e = parse_expr();
    skip_ws();
    if (pos != text.size()) fail(pos, "trailing input");
    return e;
  }
};

}  // namespace

GfPtr parse_gf(const std::string& text) { return Parser(text, nullptr).run(); }

GfPtr parse_gf_bound(const std::string& text, const std::map<std::string, GfPtr>& bindings) {
  return Parser(text, &bindings).run();
}

namespace {

std::string rat_text(const Rat& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

// Binary nodes render with their own outer parentheses; Neg, nested '^'
// and fractional constants need an extra wrap to serve as a '^' base.
bool pow_base_needs_wrap(const GfPtr& e) {
  if (e->kind == GfKind::Neg || e->kind == GfKind::Pow) return true;
  if (e->kind == GfKind::RationalConst)
    return boost::multiprecision::denominator(e->value) != 1;
  return false;
}

}  // namespace

std::string render_gf(const GfPtr& e) {
  switch (e->kind) {
    case GfKind::RationalConst: return rat_text(e->value);
    case GfKind::Sqrt5Const:    return "r5";
    case GfKind::VarX:          return "x";
    case GfKind::CatalanFn:     return "C";
    case GfKind::Sqrt:          return "sqrt(" + render_gf(e->a) + ")";
    case GfKind::Neg:           return "-(" + render_gf(e->a) + ")";
    case GfKind::Add:           return "(" + render_gf(e->a) + "+" + render_gf(e->b) + ")";
    case GfKind::Sub:           return "(" + render_gf(e->a) + "-" + render_gf(e->b) + ")";
    case GfKind::Mul:           return "(" + render_gf(e->a) + "*" + render_gf(e->b) + ")";
    case GfKind::Div:           return "(" + render_gf(e->a) + "/" + render_gf(e->b) + ")";
    case GfKind::Pow: {
      std::string base = render_gf(e->a);
      if (pow_base_needs_wrap(e->a)) base = "(" + base + ")";
      return base + "^" + std::to_string(e->exponent);
    }
  }
  throw InputError("unknown expression node");
}

bool gf_equal(const GfPtr& x, const GfPtr& y) {
  if (x.get() == y.get()) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case GfKind::RationalConst: return x->value == y->value;
    case GfKind::Sqrt5Const:
    case GfKind::VarX:
    case GfKind::CatalanFn:     return true;
    case GfKind::Sqrt:
    case GfKind::Neg:           return gf_equal(x->a, y->a);
    case GfKind::Pow:           return x->exponent == y->exponent && gf_equal(x->a, y->a);
    case GfKind::Add:
    case GfKind::Sub:
    case GfKind::Mul:
    case GfKind::Div:           return gf_equal(x->a, y->a) && gf_equal(x->b, y->b);
  }
  return false;
}

}  // namespace patwilf
