#include "patwilf/series.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace patwilf {

namespace {

std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rat(0);
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const BigInt sn = boost::multiprecision::sqrt(num);
  const BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rat(sn) / Rat(sd);
}

}  // namespace

QuadExt QuadExt::inv() const {
  if (is_zero()) throw SeriesError("division by zero constant");
  // a^2 - 5 b^2 = 0 forces a = b = 0 since sqrt 5 is irrational.
  const Rat d = a * a - 5 * b * b;
  return {a / d, -b / d};
}

QuadExt QuadExt::sqrt() const {
  if (is_zero()) return {};
  if (b == 0) {
    if (auto p = rational_sqrt(a)) return {*p, Rat(0)};
    if (auto q = rational_sqrt(a / 5)) return {Rat(0), *q};
    throw SeriesError("no square root in Q(sqrt5) for " + str());
  }
  // (p + q sqrt5)^2 = this  =>  p^2 + 5 q^2 = a, 2 p q = b.
  // p^2 satisfies t^2 - a t + 5 b^2 / 4 = 0.
  const Rat disc = a * a - 5 * b * b;
  const auto sd = rational_sqrt(disc);
  if (!sd) throw SeriesError("no square root in Q(sqrt5) for " + str());
  for (int sign = 0; sign < 2; ++sign) {
    const Rat p2 = (sign == 0 ? Rat(a + *sd) : Rat(a - *sd)) / 2;
    if (auto p = rational_sqrt(p2)) {
      if (*p == 0) continue;
      const Rat q = b / (2 * *p);
      QuadExt cand{*p, q};
      if (cand * cand == *this) return cand;
    }
  }
  throw SeriesError("no square root in Q(sqrt5) for " + str());
}

std::string QuadExt::str() const {
  std::ostringstream os;
  if (b == 0) {
    os << a;
  } else {
    os << "(" << a << (b < 0 ? "" : "+") << b << "*r5)";
  }
  return os.str();
}

QuadExt quadext_sqrt5() { return {Rat(0), Rat(1)}; }

LaurentSeries::LaurentSeries(int valuation, std::vector<QuadExt> coeffs, int order)
    : val_(valuation), order_(order), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != order_ - val_)
    throw SeriesError("coefficient window does not match [valuation, order)");
  normalize();
}

void LaurentSeries::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = order_;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    val_ += static_cast<int>(lead);
  }
  if (val_ < -kVMax)
    throw CapacityError("valuation " + std::to_string(val_) + " below -" +
                        std::to_string(kVMax));
}

LaurentSeries LaurentSeries::zero(int order) { return LaurentSeries(order, {}, order); }

LaurentSeries LaurentSeries::constant(const QuadExt& c, int order) {
  if (order <= 0 || c.is_zero()) return zero(order);
  std::vector<QuadExt> w(static_cast<size_t>(order));
  w[0] = c;
  return LaurentSeries(0, std::move(w), order);
}

LaurentSeries LaurentSeries::constant(const Rat& c, int order) {
  return constant(QuadExt(c), order);
}

LaurentSeries LaurentSeries::monomial(const QuadExt& coeff, int exp, int order) {
  if (exp >= order || coeff.is_zero()) return zero(order);
  std::vector<QuadExt> w(static_cast<size_t>(order - exp));
  w[0] = coeff;
  return LaurentSeries(exp, std::move(w), order);
}

LaurentSeries LaurentSeries::x(int order) { return monomial(QuadExt(1L), 1, order); }

const QuadExt& LaurentSeries::coefficient(int k) const {
  static const QuadExt kZero{};
  if (k >= order_)
    throw SeriesError("coefficient at x^" + std::to_string(k) +
                      " beyond truncation order " + std::to_string(order_));
  if (is_zero()) return kZero;
  if (k < val_)
    throw SeriesError("coefficient at x^" + std::to_string(k) +
                      " below valuation " + std::to_string(val_));
  return c_[static_cast<size_t>(k - val_)];
}

QuadExt LaurentSeries::coeff_or_zero(int k) const {
  if (k >= order_)
    throw SeriesError("coefficient at x^" + std::to_string(k) +
                      " beyond truncation order " + std::to_string(order_));
  if (k < val_) return {};
  return c_[static_cast<size_t>(k - val_)];
}

LaurentSeries LaurentSeries::truncated(int new_order) const {
  if (new_order > order_) throw SeriesError("cannot extend truncation order");
  if (new_order <= val_) return zero(new_order);
  std::vector<QuadExt> w(c_.begin(), c_.begin() + static_cast<long>(new_order - val_));
  return LaurentSeries(val_, std::move(w), new_order);
}

std::string LaurentSeries::str(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  bool first = true;
  for (int k = val_; k < order_ && shown < max_terms; ++k) {
    const QuadExt& c = c_[static_cast<size_t>(k - val_)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << c.str() << "*x^" << k;
    first = false;
    ++shown;
  }
  if (first) os << "0";
  os << " + O(x^" << order_ << ")";
  return os.str();
}

namespace {

// Raw window read without the order guard (callers stay below both orders).
QuadExt raw(const LaurentSeries& s, int k) {
  if (s.is_zero() || k < s.valuation() || k >= s.order()) return {};
  return s.coefficient(k);
}

}  // namespace

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g) {
  const int order = std::min(f.order(), g.order());
  const int val = std::min(f.valuation(), g.valuation());
  if (val >= order) return LaurentSeries::zero(order);
  std::vector<QuadExt> w(static_cast<size_t>(order - val));
  for (int k = val; k < order; ++k)
    w[static_cast<size_t>(k - val)] = raw(f, k) + raw(g, k);
  return LaurentSeries(val, std::move(w), order);
}

LaurentSeries neg(const LaurentSeries& f) {
  if (f.is_zero()) return f;
  std::vector<QuadExt> w;
  w.reserve(static_cast<size_t>(f.order() - f.valuation()));
  for (int k = f.valuation(); k < f.order(); ++k) w.push_back(-raw(f, k));
  return LaurentSeries(f.valuation(), std::move(w), f.order());
}

LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g) {
  return add(f, neg(g));
}

LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g) {
  const int order = std::min(f.order() + g.valuation(), g.order() + f.valuation());
  if (f.is_zero() || g.is_zero()) return LaurentSeries::zero(order);
  const int val = f.valuation() + g.valuation();
  if (val < -kVMax)
    throw CapacityError("product valuation " + std::to_string(val) + " below -" +
                        std::to_string(kVMax));
  if (val >= order) return LaurentSeries::zero(order);
  std::vector<QuadExt> w(static_cast<size_t>(order - val));
  const int fn = f.order() - f.valuation(), gn = g.order() - g.valuation();
  for (int i = 0; i < fn; ++i) {
    const QuadExt fi = f.coefficient(f.valuation() + i);
    if (fi.is_zero()) continue;
    for (int j = 0; j < gn && i + j < order - val; ++j) {
      const QuadExt gj = g.coefficient(g.valuation() + j);
      if (gj.is_zero()) continue;
      w[static_cast<size_t>(i + j)] = w[static_cast<size_t>(i + j)] + fi * gj;
    }
  }
  return LaurentSeries(val, std::move(w), order);
}

LaurentSeries div(const LaurentSeries& f, const LaurentSeries& g) {
  if (g.is_zero()) throw SeriesError("division by zero series");
  const int vg = g.valuation();
  const int order = std::min(f.order() - vg, g.order() + f.valuation() - 2 * vg);
  if (f.is_zero()) return LaurentSeries::zero(order);
  const int vq = f.valuation() - vg;
  if (vq < -kVMax)
    throw CapacityError("quotient valuation " + std::to_string(vq) + " below -" +
                        std::to_string(kVMax));
  const int m = order - vq;   // = min(f window, g window)
  if (m <= 0) return LaurentSeries::zero(order);
  const QuadExt g0inv = g.coefficient(vg).inv();
  std::vector<QuadExt> q(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    QuadExt acc = raw(f, f.valuation() + k);
    for (int i = 0; i < k; ++i) {
      const QuadExt gj = raw(g, vg + (k - i));
      if (!gj.is_zero()) acc = acc - q[static_cast<size_t>(i)] * gj;
    }
    q[static_cast<size_t>(k)] = acc * g0inv;
  }
  return LaurentSeries(vq, std::move(q), order);
}

LaurentSeries pow(const LaurentSeries& f, int e) {
  if (e == 0) return LaurentSeries::constant(QuadExt(1L), f.order());
  if (e < 0) {
    const LaurentSeries p = pow(f, -e);
    const LaurentSeries one =
        LaurentSeries::constant(QuadExt(1L), p.order() - p.valuation());
    return div(one, p);
  }
  LaurentSeries acc = LaurentSeries::constant(QuadExt(1L), f.order());
  LaurentSeries base = f;
  int k = e;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return acc;
}

LaurentSeries sqrt(const LaurentSeries& f) {
  if (f.is_zero()) return LaurentSeries::zero(f.order() - f.order() / 2);
  const int vf = f.valuation();
  if (vf % 2 != 0) throw SeriesError("sqrt of series with odd valuation");
  const int vs = vf / 2;
  const int m = f.order() - vf;      // window length carries over
  const QuadExt s0 = f.coefficient(vf).sqrt();
  const QuadExt twoInv = (s0 + s0).inv();
  std::vector<QuadExt> s(static_cast<size_t>(m));
  s[0] = s0;
  for (int k = 1; k < m; ++k) {
    QuadExt acc = raw(f, vf + k);
    for (int i = 1; i < k; ++i)
      acc = acc - s[static_cast<size_t>(i)] * s[static_cast<size_t>(k - i)];
    s[static_cast<size_t>(k)] = acc * twoInv;
  }
  return LaurentSeries(vs, std::move(s), vs + m);
}

LaurentSeries catalan(int order) {
  if (order <= 0) return LaurentSeries::zero(order);
  std::vector<QuadExt> c(static_cast<size_t>(order));
  c[0] = QuadExt(1L);
  for (int n = 0; n + 1 < order; ++n) {
    QuadExt acc{};
    for (int i = 0; i <= n; ++i) acc = acc + c[static_cast<size_t>(i)] * c[static_cast<size_t>(n - i)];
    c[static_cast<size_t>(n + 1)] = acc;
  }
  return LaurentSeries(0, std::move(c), order);
}

bool agrees(const LaurentSeries& f, const LaurentSeries& g) {
  const int order = std::min(f.order(), g.order());
  const int val = std::min(f.valuation(), g.valuation());
  for (int k = val; k < order; ++k)
    if (raw(f, k) != raw(g, k)) return false;
  return true;
}

}  // namespace patwilf
