#include "patwilf/recurrence.hpp"

#include <numeric>

namespace patwilf {

namespace {

BigInt row_total(const std::vector<BigInt>& row) {
  BigInt t = 0;
  for (const auto& v : row) t += v;
  return t;
}

}  // namespace

RecurrenceTable table_case231(int n_max) {
  if (n_max < 1) throw InputError("n_max must be at least 1");
  RecurrenceTable tab;
  tab.case_id = 231;
  tab.n_max = n_max;
  tab.a.assign(static_cast<size_t>(n_max) + 1, {});
  tab.b.assign(static_cast<size_t>(n_max) + 1, {});
  tab.row_sums.assign(static_cast<size_t>(n_max) + 1, 0);

  // f(0), f(1), ... = 1, 1, 2, 5, 13, ... with f(k) = 3 f(k-1) - f(k-2).
  std::vector<BigInt> fib{1, 1};
  while (static_cast<int>(fib.size()) <= n_max) {
    const size_t m = fib.size();
    fib.push_back(3 * fib[m - 1] - fib[m - 2]);
  }
  std::vector<BigInt> pow2{1};
  while (static_cast<int>(pow2.size()) <= n_max) pow2.push_back(2 * pow2.back());

  tab.row_sums[0] = 1;   // the empty permutation
  for (int n = 1; n <= n_max; ++n) {
    auto& a = tab.a[static_cast<size_t>(n)];
    auto& b = tab.b[static_cast<size_t>(n)];
    a.assign(static_cast<size_t>(n) + 1, 0);
    b.assign(static_cast<size_t>(n) + 1, 0);
    if (n == 1) {
      a[1] = 1;
      tab.row_sums[1] = 1;
      continue;
    }
    const auto& ap = tab.a[static_cast<size_t>(n) - 1];
    const BigInt prev_total = tab.row_sums[static_cast<size_t>(n) - 1];
    for (int j = 1; j <= n - 2; ++j)
      b[static_cast<size_t>(j)] = fib[static_cast<size_t>(j - 1)] * pow2[static_cast<size_t>(n - j - 2)];
    b[static_cast<size_t>(n - 1)] = tab.row_sums[static_cast<size_t>(n) - 2];
    BigInt acc = 0;
    for (int j = 1; j <= n - 2; ++j) {
      acc += ap[static_cast<size_t>(j)];
      a[static_cast<size_t>(j)] = acc + b[static_cast<size_t>(j)];
    }
    a[static_cast<size_t>(n - 1)] = prev_total;
    a[static_cast<size_t>(n)] = prev_total;
    tab.row_sums[static_cast<size_t>(n)] = row_total(a);
  }
  tab.notes.push_back(
      "a(n;n-2) comes from the recurrence; the extra boundary a(n;n-2)=a(n-1) "
      "contradicts enumeration and is not applied");
  tab.notes.push_back(
      "b(n;n-1)=a(n-2) appended beyond the product-form range j<=n-2 so every "
      "stored entry matches enumeration");
  return tab;
}

RecurrenceTable table_case241(int n_max) {
  if (n_max < 1) throw InputError("n_max must be at least 1");
  RecurrenceTable tab;
  tab.case_id = 241;
  tab.n_max = n_max;
  tab.a.assign(static_cast<size_t>(n_max) + 1, {});
  tab.b.assign(static_cast<size_t>(n_max) + 1, {});
  tab.row_sums.assign(static_cast<size_t>(n_max) + 1, 0);

  tab.row_sums[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    auto& a = tab.a[static_cast<size_t>(n)];
    auto& b = tab.b[static_cast<size_t>(n)];
    a.assign(static_cast<size_t>(n) + 1, 0);
    b.assign(static_cast<size_t>(n) + 1, 0);
    if (n == 1) {
      a[1] = 1;
      tab.row_sums[1] = 1;
      continue;
    }
    const auto& ap = tab.a[static_cast<size_t>(n) - 1];
    const BigInt prev_total = tab.row_sums[static_cast<size_t>(n) - 1];
    const BigInt prev2_total = tab.row_sums[static_cast<size_t>(n) - 2];

    // b row first; the a row two back feeds it.
    const auto& bp = tab.b[static_cast<size_t>(n) - 1];
    const auto& a2 = tab.a[static_cast<size_t>(n) >= 2 ? static_cast<size_t>(n) - 2 : 0];
    BigInt bacc = 0;
    for (int j = 1; j <= n - 3; ++j) {
      const BigInt a2j = (j < static_cast<int>(a2.size())) ? a2[static_cast<size_t>(j)] : 0;
      b[static_cast<size_t>(j)] = bacc + a2j;
      if (j < static_cast<int>(bp.size())) bacc += bp[static_cast<size_t>(j)];
    }
    if (n - 2 >= 1) b[static_cast<size_t>(n - 2)] = prev2_total;
    b[static_cast<size_t>(n - 1)] = 0;
    b[static_cast<size_t>(n)] = prev2_total;

    BigInt acc = 0;
    for (int j = 1; j <= n - 2; ++j) {
      acc += ap[static_cast<size_t>(j)];
      a[static_cast<size_t>(j)] = acc + b[static_cast<size_t>(j)];
    }
    a[static_cast<size_t>(n - 1)] = prev_total;
    a[static_cast<size_t>(n)] = prev_total;
    tab.row_sums[static_cast<size_t>(n)] = row_total(a);
  }
  tab.notes.push_back(
      "b recurrence applied for j<=n-3 only; at j=n-2 the recurrence value "
      "disagrees with enumeration and the boundary b(n;n-2)=a(n-2) wins");
  return tab;
}

namespace {

// K(x, v) = x v (1 - v^2) + x^2 (1 - 3v + v^2) - v^2 (1 - v)^2
LaurentSeries kernel_poly(const LaurentSeries& xs, const LaurentSeries& v, int w) {
  const LaurentSeries one = LaurentSeries::constant(Rat(1), w);
  const LaurentSeries v2 = mul(v, v);
  const LaurentSeries t1 = mul(xs, mul(v, sub(one, v2)));
  const LaurentSeries t2 =
      mul(mul(xs, xs), add(sub(one, mul(LaurentSeries::constant(Rat(3), w), v)), v2));
  const LaurentSeries omv = sub(one, v);
  const LaurentSeries t3 = mul(v2, mul(omv, omv));
  return sub(add(t1, t2), t3);
}

}  // namespace

KernelReport kernel_roots_check(int order) {
  KernelReport rep;
  rep.checked_order = order;
  const int w = order + 3 * kVMax;

  const LaurentSeries xs = LaurentSeries::x(w);
  const LaurentSeries x2 = mul(xs, xs);
  const LaurentSeries one = LaurentSeries::constant(Rat(1), w);
  const LaurentSeries two = LaurentSeries::constant(Rat(2), w);
  const LaurentSeries four = LaurentSeries::constant(Rat(4), w);
  const LaurentSeries r5 = LaurentSeries::constant(quadext_sqrt5(), w);

  // common rational radicand part 4 - 12x + 6x^2; sqrt5 part -(4x + 2x^2)
  const LaurentSeries rat_part =
      add(sub(four, mul(LaurentSeries::constant(Rat(12), w), xs)),
          mul(LaurentSeries::constant(Rat(6), w), x2));
  const LaurentSeries irr_part = add(mul(four, xs), mul(two, x2));
  const LaurentSeries rad_m = sqrt(sub(rat_part, mul(r5, irr_part)));
  const LaurentSeries rad_p = sqrt(add(rat_part, mul(r5, irr_part)));

  const LaurentSeries vm =
      div(add(add(two, mul(sub(r5, one), xs)), rad_m), four);
  const LaurentSeries vp =
      div(add(sub(two, mul(add(r5, one), xs)), rad_p), four);

  rep.roots_vanish = true;
  for (const auto* root : {&vm, &vp}) {
    const LaurentSeries k = kernel_poly(xs, *root, w);
    for (int n = 0; n < order; ++n) {
      const QuadExt c = k.coeff_or_zero(n);
      if (!c.is_zero()) {
        rep.roots_vanish = false;
        if (rep.first_residual.empty())
          rep.first_residual = "K coefficient at x^" + std::to_string(n) + " = " + c.str();
        break;
      }
    }
  }

  // counting series from the roots
  const LaurentSeries s = add(vm, vp);
  const LaurentSeries q = add(add(mul(vm, vm), mul(vp, vp)), mul(vm, vp));
  const LaurentSeries sq = add(mul(vm, vm), mul(vp, vp));
  const LaurentSeries pm1 = mul(sub(vm, one), sub(vp, one));
  const LaurentSeries num =
      mul(pm1, add(mul(s, sub(sq, x2)), mul(sub(xs, one), q)));
  const LaurentSeries den =
      mul(xs, sub(xs, mul(pm1, add(q, mul(xs, sub(add(s, two), xs))))));
  const LaurentSeries f = div(num, den);

  rep.coeffs_integer = true;
  for (int n = 0; n < order; ++n) {
    const QuadExt c = f.coeff_or_zero(n);
    const bool ok = c.is_rational() && boost::multiprecision::denominator(c.a) == 1 && c.a >= 0;
    if (!ok) {
      rep.coeffs_integer = false;
      if (rep.first_residual.empty())
        rep.first_residual = "series coefficient at x^" + std::to_string(n) + " = " + c.str();
      break;
    }
    rep.series.push_back(boost::multiprecision::numerator(c.a));
  }

  rep.notes.push_back(
      "roots are the two kernel solutions with value 1 at x=0; the quotient "
      "needs the leading x in the denominator for a constant term of 1");
  return rep;
}

}  // namespace patwilf
