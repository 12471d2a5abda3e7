#pragma once
/*
 * Exhaustive enumeration of permutations avoiding a triple of length-4
 * patterns. The engine grows standardized prefixes by appending a rank
 * r in 1..k+1 (values >= r in the prefix shift up by one), and prunes a
 * branch as soon as the prefix contains one of the three patterns; a
 * prefix of an avoider never contains a pattern, so the leaves at depth
 * n are exactly the avoiders of length n. Per-pattern partial-match
 * state is carried down the tree instead of re-scanning the prefix.
 *
 * count_sequence() reports counts for every length up to n_max from one
 * sweep. Refined counts bucket avoiders by a permutation statistic, and
 * count_shape() counts avoiders with a fixed structural shape.
 */

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "patwilf/errors.hpp"
#include "patwilf/perm.hpp"

namespace patwilf {

using BigInt = boost::multiprecision::cpp_int;

constexpr int kEnumerateCap = 12;   // hard cap for materializing avoider lists

BigInt count_avoiders(int n, const PatternTriple& t);

struct CountSequence {
  PatternTriple triple;
  std::vector<BigInt> counts;        // counts[n] for n = 0..n_max
};
CountSequence count_sequence(int n_max, const PatternTriple& t);

// Same totals via a deterministic partition of the search at a fixed prefix
// depth; subtree results are combined in a fixed order, so the answer is
// bit-identical to the serial sweep. threads > 1 runs subtrees concurrently.
CountSequence count_sequence_partitioned(int n_max, const PatternTriple& t,
                                         int split_depth = 3, int threads = 1);

enum class StatKind { LR_MAXIMA, FIRST_LETTER, FIRST_TWO_LETTERS, SHAPE_ID };
enum class ShapeId {
  SECOND_LARGEST_FIRST_THEN_MAX,   // first letter n-1      (n >= 2)
  FIRST_IS_D_PLUS_1_THEN_MAX,      // starts (d+1) n        (param d)
  FIRST_TWO,                       // starts j1 j2          (params j1 j2)
};

struct StatisticKey {
  StatKind kind = StatKind::LR_MAXIMA;
  ShapeId shape = ShapeId::FIRST_TWO;    // used when kind == SHAPE_ID
  int p1 = 0, p2 = 0;                    // shape parameters
};

// Statistic values are integer pairs; scalar statistics use {v, 0}, the
// SHAPE_ID statistic uses {matches ? 1 : 0, 0}.
using StatValue = std::pair<int, int>;
std::map<StatValue, BigInt> count_refined(int n, const PatternTriple& t,
                                          const StatisticKey& key);

// Avoiders of length n matching the shape. Out-of-range parameters give 0.
BigInt count_shape(int n, const PatternTriple& t, ShapeId shape, int p1 = 0, int p2 = 0);

// All avoiders of length n in lexicographic order of one-line notation.
// Throws CapacityError when n exceeds the cap.
std::vector<Permutation> enumerate_avoiders(int n, const PatternTriple& t,
                                            int cap = kEnumerateCap);

// Reference counting path: filter all n! permutations with contains().
BigInt count_avoiders_naive(int n, const PatternTriple& t);

// Visit each avoider of every length 1..n_max once, as the values vector of
// the finished permutation (leaves of the prefix tree at each depth).
void for_each_avoider(int n_max, const PatternTriple& t,
                      const std::function<void(const std::vector<int>&)>& fn);

}  // namespace patwilf
