#pragma once
/*
 * Succession-rule simulation for two of the triple classes.
 *
 * A rule system gives root labels at level 2 and, for each label, the
 * ordered list of child labels; every permutation in the class of length
 * n+1 arises from exactly one length-n class member by inserting n+1 into
 * one active site, so level totals of the abstract tree must reproduce
 * the counting series. Labels are integer pairs:
 *
 *   case 69 (av 1234, 1324, 3412): (k, s) where k is the number of active
 *   sites and s counts the active sites to the right of the largest
 *   ascent position; roots (3,2) and (3,3).
 *
 *   case 88 (av 3412, 3421, 1324): k flavored 1..5, written k^f; k is the
 *   number of active sites; roots 3^1 and 3^3. A child range that is
 *   empty at small k simply contributes no children.
 *
 * level_census walks labels breadth-first with big-integer multiplicities;
 * materialize_check_* rebuilds the tree with concrete permutations for
 * small n, checks every vertex against the rule prediction, and checks
 * each level set against direct enumeration.
 */

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "patwilf/enumerate.hpp"

namespace patwilf {

struct TreeLabel {
  int k = 0;
  int t = 0;   // s for case 69, flavor for case 88
  bool operator<(const TreeLabel& o) const { return k != o.k ? k < o.k : t < o.t; }
  bool operator==(const TreeLabel& o) const { return k == o.k && t == o.t; }
};

struct RuleSystem {
  std::string name;
  int root_level = 2;
  std::vector<TreeLabel> roots;
  std::function<std::vector<TreeLabel>(TreeLabel)> children;
};

RuleSystem rules_case69();
RuleSystem rules_case88();

// Multiset of labels at each level from root_level to n_max (inclusive).
using LevelCensus = std::map<TreeLabel, BigInt>;
std::vector<LevelCensus> level_census(const RuleSystem& rs, int n_max);

// Total vertices per level; totals[i] is the count at level root_level + i.
std::vector<BigInt> level_counts(const RuleSystem& rs, int n_max);

// Concrete rebuild for small n: every vertex is a permutation with its
// label; checks (a) the label recomputed from the permutation matches the
// rule-predicted label (case 69: both components; case 88: the active-site
// count k), (b) children produced by inserting n+1 into active sites match
// the rule's child list position by position, and (c) each level equals
// the enumerated avoider set exactly once.
struct MaterializeReport {
  bool ok = true;
  int levels_checked = 0;
  std::string detail;   // first failure, empty when ok
};

MaterializeReport materialize_check_case69(int n_max);
MaterializeReport materialize_check_case88(int n_max);

}  // namespace patwilf
