#include "patwilf/gf.hpp"

namespace patwilf {

namespace {

// Quotients and negative powers shorten the valid window by the divisor's
// valuation; formulas here nest at most a few such steps, so a fixed
// headroom keeps the requested window intact.
constexpr int kEvalHeadroom = 3 * kVMax;

LaurentSeries eval_rec(const GfPtr& e, int w) {
  switch (e->kind) {
    case GfKind::RationalConst: return LaurentSeries::constant(e->value, w);
    case GfKind::Sqrt5Const:    return LaurentSeries::constant(quadext_sqrt5(), w);
    case GfKind::VarX:          return LaurentSeries::x(w);
    case GfKind::CatalanFn:     return catalan(w);
    case GfKind::Sqrt:          return sqrt(eval_rec(e->a, w));
    case GfKind::Neg:           return neg(eval_rec(e->a, w));
    case GfKind::Add:           return add(eval_rec(e->a, w), eval_rec(e->b, w));
    case GfKind::Sub:           return sub(eval_rec(e->a, w), eval_rec(e->b, w));
    case GfKind::Mul:           return mul(eval_rec(e->a, w), eval_rec(e->b, w));
    case GfKind::Div:           return div(eval_rec(e->a, w), eval_rec(e->b, w));
    case GfKind::Pow:           return pow(eval_rec(e->a, w), e->exponent);
  }
  throw InputError("unknown expression node");
}

}  // namespace

LaurentSeries eval_gf(const GfPtr& e, int order) {
  if (order < 1) throw InputError("series order must be positive");
  const LaurentSeries s = eval_rec(e, order + kEvalHeadroom);
  if (s.order() < order)
    throw SeriesError("expression lost too much truncation headroom (valid below " +
                      std::to_string(s.order()) + ", need " + std::to_string(order) + ")");
  return s.truncated(order);
}

}  // namespace patwilf
