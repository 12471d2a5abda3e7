#pragma once
/*
 * First-letter recurrence systems for cases 231 and 241, and the kernel
 * root check behind the case 241 closed form.
 *
 * Both tables refine the avoider count by the first letter: a(n;j) counts
 * class members of length n starting with j. The companion b(n;j) counts
 * those whose first two letters are (j, j+1) for case 231 and (j, n-1)
 * for case 241. Fill policies (each backed by exhaustive enumeration):
 *
 *   231:  b(n;j) = f(j-1) * 2^(n-j-2) for 1 <= j <= n-2, where f is the
 *         odd-indexed Fibonacci sequence 1,1,2,5,13,... read off the
 *         bivariate product expansion; b(n;n-1) = a(n-2) by deleting the
 *         leading (n-1) n. a(n;j) = sum_{i<=j} a(n-1;i) + b(n;j) for
 *         j <= n-2, and a(n;n-1) = a(n;n) = a(n-1). The occasionally
 *         quoted extra boundary a(n;n-2) = a(n-1) contradicts enumeration
 *         and is not used; see notes.
 *
 *   241:  filled jointly, b row first: b(n;j) = sum_{i<j} b(n-1;i)
 *         + a(n-2;j) for 1 <= j <= n-3, with boundary values
 *         b(n;n) = b(n;n-2) = a(n-2), b(n;n-1) = 0; the recurrence
 *         extended to j = n-2 disagrees with enumeration, so the boundary
 *         wins there (see notes). a(n;j) = sum_{i<=j} a(n-1;i) + b(n;j)
 *         for j <= n-2 and a(n;n) = a(n;n-1) = a(n-1).
 *
 * kernel_roots_check() rebuilds the two algebraic kernel roots over
 * Q(sqrt 5), verifies they annihilate the kernel polynomial
 * K(x,v) = xv(1-v^2) + x^2(1-3v+v^2) - v^2(1-v)^2 exactly to the
 * requested order, and re-derives the counting series from the root
 * expression, which must have nonnegative integer coefficients with no
 * sqrt-5 part.
 */

#include <string>
#include <vector>

#include "patwilf/enumerate.hpp"
#include "patwilf/series.hpp"

namespace patwilf {

struct RecurrenceTable {
  int case_id = 0;
  int n_max = 0;
  // a[n][j], b[n][j]; index 0 unused in j, rows 0..n_max with row n sized n+1.
  std::vector<std::vector<BigInt>> a, b;
  std::vector<BigInt> row_sums;      // row_sums[n] = sum_j a[n][j]
  std::vector<std::string> notes;    // fill-policy deviations worth surfacing
};

RecurrenceTable table_case231(int n_max);
RecurrenceTable table_case241(int n_max);

struct KernelReport {
  bool roots_vanish = false;         // K(x, v-) and K(x, v+) zero to order
  int checked_order = 0;
  std::string first_residual;        // offending coefficient if not
  bool coeffs_integer = false;       // series has integer, sqrt5-free coeffs
  std::vector<BigInt> series;        // counting series read off the roots
  std::vector<std::string> notes;
};

KernelReport kernel_roots_check(int order = 30);

}  // namespace patwilf
