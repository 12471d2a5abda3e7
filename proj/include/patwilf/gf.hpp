#pragma once
/*
 * A tiny closed-form language for the counting series, plus the registry
 * of per-triple formulas loaded from a text file.
 *
 * Grammar (no implicit multiplication, '^' takes an integer exponent):
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := '-' factor | atom ('^' signed-int)?
 *   atom   := rational | 'x' | 'C' | 'r5' | 'sqrt' '(' expr ')' | '(' expr ')'
 * 'C' is the Catalan series, 'r5' the constant sqrt(5). Numeric literals
 * are unsigned integers; fractions are written with '/', which is ordinary
 * division. render() emits a fully parenthesized canonical form, and
 * parse(render(e)) reproduces e node for node for every parser-producible
 * tree (a RationalConst built programmatically with a denominator renders
 * as 'p/q', which reads back as a quotient of integer constants with the
 * same series).
 *
 * Registry file format: stanzas separated by blank lines, '#' comments.
 *   case: <key>            (integer, or integer '.' suffix for sublabels)
 *   triple: p1,p2,p3
 *   let <name> = <expr>    (zero or more; substituted into later
 *                           expressions of the same stanza at load)
 *   f: <expr>
 *   ref: <free text>
 */

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "patwilf/errors.hpp"
#include "patwilf/perm.hpp"
#include "patwilf/series.hpp"

namespace patwilf {

struct GfExpr;
using GfPtr = std::shared_ptr<const GfExpr>;

enum class GfKind {
  RationalConst, Sqrt5Const, VarX, CatalanFn,
  Sqrt, Neg, Add, Sub, Mul, Div, Pow,
};

struct GfExpr {
  GfKind kind;
  Rat value;        // RationalConst
  int exponent = 0; // Pow
  GfPtr a, b;       // children

  static GfPtr rational(Rat v);
  static GfPtr sqrt5();
  static GfPtr var_x();
  static GfPtr catalan_fn();
  static GfPtr sqrt_of(GfPtr e);
  static GfPtr neg_of(GfPtr e);
  static GfPtr add(GfPtr l, GfPtr r);
  static GfPtr sub(GfPtr l, GfPtr r);
  static GfPtr mul(GfPtr l, GfPtr r);
  static GfPtr div(GfPtr l, GfPtr r);
  static GfPtr pow(GfPtr base, int e);
};

// Throws ParseError with a 0-based position on any syntax problem or
// unknown identifier. Never accepts trailing garbage.
GfPtr parse_gf(const std::string& text);

// Canonical fully parenthesized form; parse_gf(render_gf(e)) == e node-wise.
std::string render_gf(const GfPtr& e);

bool gf_equal(const GfPtr& x, const GfPtr& y);

// Evaluate to an exact series valid at least up to the requested order.
// Atoms are expanded with internal headroom so intermediate order loss in
// quotients does not eat into the requested window.
LaurentSeries eval_gf(const GfPtr& e, int order = kDefaultOrder);

struct RegistryEntry {
  std::string key;          // "69" or "49.H"
  PatternTriple triple;
  std::string formula_text; // f: payload as written in the file
  GfPtr formula;            // parsed with let-bindings expanded
  std::string ref;          // free-text provenance note
};

class Registry {
public:
  // Throws InputError with a line number on malformed or duplicate stanzas.
  static Registry load(const std::string& path);
  static Registry load_text(const std::string& text, const std::string& origin);

  bool has(const std::string& key) const;
  const RegistryEntry& entry(const std::string& key) const;  // NotFoundError
  const RegistryEntry& case_entry(int id) const;
  // All keys in file order; main_cases() filters to the integer keys.
  const std::vector<std::string>& keys() const { return order_; }
  std::vector<int> main_cases() const;

private:
  std::map<std::string, RegistryEntry> entries_;
  std::vector<std::string> order_;
};

// Default registry location (compile-time default, overridden by the
// PATWILF_REGISTRY environment variable).
std::string default_registry_path();

}  // namespace patwilf
