#pragma once
/*
 * Incremental single-pattern matcher. Feed host values left to right; the
 * matcher keeps, for every pattern prefix length j, the set of value tuples
 * realizing that prefix as a subsequence of the host seen so far. The sets
 * are pruned by dominance: a matched value whose pattern letter lies below
 * (above) every remaining pattern letter only ever appears in lower-bound
 * (upper-bound) constraints on future letters, so only the minimal (maximal)
 * realization needs keeping; letters with remaining pattern letters on both
 * sides are pinched and must agree exactly. This keeps the per-prefix sets
 * tiny in practice.
 *
 * shift_from(r) renumbers every stored value >= r up by one; together with
 * push(r) this is exactly the effect of appending rank r to a standardized
 * prefix, which is what the avoider DFS does.
 */

#include <algorithm>
#include <cstdint>
#include <vector>

#include "patwilf/perm.hpp"

namespace patwilf::detail {

constexpr int kMaxPatLen = 12;

enum class Role : uint8_t { Min, Max, Pinch };

struct MatcherPlan {
  int m = 0;
  std::vector<int> q;                       // pattern values
  // For prefix length j (0..m-1): indices into the state tuple giving the
  // tightest bounds on the value extending to prefix length j+1; -1 if
  // unbounded on that side.
  std::vector<int> lo_idx, hi_idx;
  // roles[j][i]: role of state slot i when j values are matched.
  std::vector<std::vector<Role>> roles;

  explicit MatcherPlan(const Pattern& pat);
};

struct PatternMatcher {
  const MatcherPlan* plan;
  // states[j] holds packed tuples of j values each, j = 1..m-1.
  std::vector<std::vector<uint8_t>> states;
  bool contained = false;

  explicit PatternMatcher(const MatcherPlan& p)
      : plan(&p), states(std::max(0, p.m - 1) + 1) {}

  void shift_from(int r) {
    for (auto& lvl : states)
      for (auto& v : lvl)
        if (v >= r) ++v;
  }

  void push(int value);
};

// Convenience full-scan containment via the incremental matcher.
bool contains_incremental(const Permutation& host, const Pattern& pat);

}  // namespace patwilf::detail
