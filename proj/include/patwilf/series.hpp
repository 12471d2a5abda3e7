#pragma once
/*
 * Exact truncated Laurent series over Q(sqrt 5).
 *
 * A series stores rational-extension coefficients for the exponent window
 * [valuation, order): coefficients at exponents below the valuation are
 * exactly zero, coefficients at order and beyond are unknown. Arithmetic
 * propagates the order of validity (e.g. a product of series valid below
 * N1 and N2 with valuations v1 and v2 is valid below min(N1+v2, N2+v1)).
 * The stored window is always normalized: the leading coefficient is
 * nonzero unless the series is identically zero up to its order.
 *
 * Valuations are never allowed below -kVMax; an operation that would need
 * deeper principal parts throws CapacityError.
 */

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "patwilf/errors.hpp"

namespace patwilf {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

constexpr int kVMax = 8;
constexpr int kDefaultOrder = 33;

// a + b*sqrt(5) with exact rational a, b.
struct QuadExt {
  Rat a{0}, b{0};

  QuadExt() = default;
  QuadExt(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit QuadExt(long v) : a(v) {}
  explicit QuadExt(const Rat& v) : a(v) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  QuadExt operator+(const QuadExt& o) const { return {a + o.a, b + o.b}; }
  QuadExt operator-(const QuadExt& o) const { return {a - o.a, b - o.b}; }
  QuadExt operator-() const { return {-a, -b}; }
  QuadExt operator*(const QuadExt& o) const {
    return {a * o.a + 5 * b * o.b, a * o.b + b * o.a};
  }
  QuadExt inv() const;                        // throws SeriesError on zero
  QuadExt operator/(const QuadExt& o) const { return *this * o.inv(); }
  bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QuadExt& o) const { return !(*this == o); }

  // Square root within Q(sqrt 5). Of the two roots, returns the one with
  // positive rational part (positive sqrt-5 part when the rational part is
  // zero). Throws SeriesError when no root exists in the field.
  QuadExt sqrt() const;

  std::string str() const;
};

QuadExt quadext_sqrt5();

class LaurentSeries {
public:
  // Zero series known up to the given order.
  static LaurentSeries zero(int order = kDefaultOrder);
  static LaurentSeries constant(const QuadExt& c, int order = kDefaultOrder);
  static LaurentSeries constant(const Rat& c, int order = kDefaultOrder);
  // The monomial coeff * x^exp.
  static LaurentSeries monomial(const QuadExt& coeff, int exp, int order = kDefaultOrder);
  static LaurentSeries x(int order = kDefaultOrder);

  // Raw construction from a coefficient window starting at the valuation.
  LaurentSeries(int valuation, std::vector<QuadExt> coeffs, int order);

  int valuation() const { return val_; }   // equals order() for the zero series
  int order() const { return order_; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient at x^k. k must lie in [valuation, order): querying below the
  // valuation or at/after the order is an error, never a silent zero. The
  // zero series accepts any k < order.
  const QuadExt& coefficient(int k) const;
  // Internal-friendly accessor: zero below the valuation, error at/after order.
  QuadExt coeff_or_zero(int k) const;

  LaurentSeries truncated(int new_order) const;

  std::string str(int max_terms = 12) const;

private:
  int val_ = 0;
  int order_ = 0;
  std::vector<QuadExt> c_;   // c_[i] is the coefficient at x^(val_ + i)

  void normalize();
};

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g);
// Throws SeriesError when g is the zero series; CapacityError when the
// quotient's valuation would drop below -kVMax.
LaurentSeries div(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries neg(const LaurentSeries& f);
// Integer powers; negative exponents via div.
LaurentSeries pow(const LaurentSeries& f, int e);
// Square root of a series of even valuation whose leading coefficient has a
// square root in Q(sqrt 5); throws SeriesError otherwise.
LaurentSeries sqrt(const LaurentSeries& f);

// Catalan generating function 1 + x + 2x^2 + 5x^3 + ... via the convolution
// recurrence c_{n+1} = sum c_i c_{n-i}.
LaurentSeries catalan(int order = kDefaultOrder);

// Do f and g agree wherever both are known (exponents below both orders)?
bool agrees(const LaurentSeries& f, const LaurentSeries& g);

}  // namespace patwilf
