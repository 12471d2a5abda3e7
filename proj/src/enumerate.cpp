#include "patwilf/enumerate.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <numeric>
#include <thread>

#include "match.hpp"

namespace patwilf {

namespace {

using detail::MatcherPlan;
using detail::PatternMatcher;

using Visit = std::function<void(const std::vector<int>&)>;

struct Engine {
  std::array<MatcherPlan, 3> plans;
  int n_max;

  Engine(const PatternTriple& t, int n_max_)
      : plans{MatcherPlan(t.patterns()[0]), MatcherPlan(t.patterns()[1]),
              MatcherPlan(t.patterns()[2])},
        n_max(n_max_) {}

  std::array<PatternMatcher, 3> fresh() const {
    return {PatternMatcher(plans[0]), PatternMatcher(plans[1]), PatternMatcher(plans[2])};
  }

  // Visits every surviving node (the prefix is an avoider of its length).
  void dfs(std::vector<int>& prefix, const std::array<PatternMatcher, 3>& ms,
           const Visit& visit) const {
    visit(prefix);
    const int k = static_cast<int>(prefix.size());
    if (k >= n_max) return;
    for (int r = 1; r <= k + 1; ++r) {
      std::array<PatternMatcher, 3> child = ms;
      bool dead = false;
      for (auto& m : child) {
        m.shift_from(r);
        m.push(r);
        if (m.contained) { dead = true; break; }
      }
      if (dead) continue;
      for (int& v : prefix)
        if (v >= r) ++v;
      prefix.push_back(r);
      dfs(prefix, child, visit);
      prefix.pop_back();
      for (int& v : prefix)
        if (v > r) --v;
    }
  }

  void run(const Visit& visit) const {
    std::vector<int> prefix;
    auto ms = fresh();
    dfs(prefix, ms, visit);
  }
};

}  // namespace

void for_each_avoider(int n_max, const PatternTriple& t, const Visit& fn) {
  if (n_max < 0) throw InputError("negative length");
  Engine(t, n_max).run(fn);
}

CountSequence count_sequence(int n_max, const PatternTriple& t) {
  CountSequence out{t, std::vector<BigInt>(static_cast<size_t>(n_max) + 1, 0)};
  for_each_avoider(n_max, t, [&](const std::vector<int>& p) { out.counts[p.size()] += 1; });
  return out;
}

CountSequence count_sequence_partitioned(int n_max, const PatternTriple& t,
                                         int split_depth, int threads) {
  if (n_max < 0) throw InputError("negative length");
  const int d = std::clamp(split_depth, 0, n_max);
  Engine eng(t, n_max);
  std::vector<BigInt> counts(static_cast<size_t>(n_max) + 1, 0);

  struct Root {
    std::vector<int> prefix;
    std::array<PatternMatcher, 3> ms;
  };
  std::vector<Root> roots;

  // Frontier pass: count nodes shallower than the split depth, collect the
  // depth-d nodes with their matcher states as independent subtree roots.
  std::function<void(std::vector<int>&, const std::array<PatternMatcher, 3>&)> frontier =
      [&](std::vector<int>& prefix, const std::array<PatternMatcher, 3>& ms) {
        const int k = static_cast<int>(prefix.size());
        if (k == d) {
          roots.push_back(Root{prefix, ms});
          return;
        }
        counts[k] += 1;
        for (int r = 1; r <= k + 1; ++r) {
          std::array<PatternMatcher, 3> child = ms;
          bool dead = false;
          for (auto& m : child) {
            m.shift_from(r);
            m.push(r);
            if (m.contained) { dead = true; break; }
          }
          if (dead) continue;
          for (int& v : prefix)
            if (v >= r) ++v;
          prefix.push_back(r);
          frontier(prefix, child);
          prefix.pop_back();
          for (int& v : prefix)
            if (v > r) --v;
        }
      };
  {
    std::vector<int> prefix;
    auto ms = eng.fresh();
    frontier(prefix, ms);
  }

  auto job = [&](size_t i) {
    std::vector<BigInt> c(static_cast<size_t>(n_max) + 1, 0);
    std::vector<int> prefix = roots[i].prefix;
    eng.dfs(prefix, roots[i].ms, [&](const std::vector<int>& p) { c[p.size()] += 1; });
    return c;
  };

  std::vector<std::vector<BigInt>> partials(roots.size());
  if (threads <= 1) {
    for (size_t i = 0; i < roots.size(); ++i) partials[i] = job(i);
  } else {
    std::vector<std::future<std::vector<BigInt>>> futs;
    futs.reserve(roots.size());
    for (size_t i = 0; i < roots.size(); ++i)
      futs.push_back(std::async(std::launch::async, job, i));
    for (size_t i = 0; i < roots.size(); ++i) partials[i] = futs[i].get();
  }
  // Combine in fixed subtree order so the result is deterministic.
  for (const auto& c : partials)
    for (size_t k = 0; k < c.size(); ++k) counts[k] += c[k];

  return CountSequence{t, std::move(counts)};
}

BigInt count_avoiders(int n, const PatternTriple& t) {
  if (n < 0) throw InputError("negative length");
  return count_sequence(n, t).counts[static_cast<size_t>(n)];
}

BigInt count_avoiders_naive(int n, const PatternTriple& t) {
  if (n < 0) throw InputError("negative length");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  BigInt total = 0;
  do {
    Permutation p(v);
    bool avoid = true;
    for (const auto& pat : t.patterns())
      if (contains(p, pat)) { avoid = false; break; }
    if (avoid) total += 1;
  } while (std::next_permutation(v.begin(), v.end()));
  return total;
}

namespace {

StatValue stat_of(const std::vector<int>& p, const StatisticKey& key) {
  const int n = static_cast<int>(p.size());
  switch (key.kind) {
    case StatKind::LR_MAXIMA: {
      int count = 0, best = 0;
      for (int x : p)
        if (x > best) { best = x; ++count; }
      return {count, 0};
    }
    case StatKind::FIRST_LETTER:
      return {n >= 1 ? p[0] : 0, 0};
    case StatKind::FIRST_TWO_LETTERS:
      return {n >= 1 ? p[0] : 0, n >= 2 ? p[1] : 0};
    case StatKind::SHAPE_ID:
      break;  // handled by caller via shape_matches
  }
  throw InputError("unknown statistic kind");
}

bool shape_matches(const std::vector<int>& p, ShapeId shape, int p1, int p2) {
  const int n = static_cast<int>(p.size());
  switch (shape) {
    case ShapeId::SECOND_LARGEST_FIRST_THEN_MAX:
      return n >= 2 && p[0] == n - 1;
    case ShapeId::FIRST_IS_D_PLUS_1_THEN_MAX:
      return n >= 2 && p[0] == p1 + 1 && p[1] == n;
    case ShapeId::FIRST_TWO:
      return n >= 2 && p[0] == p1 && p[1] == p2;
  }
  throw InputError("unknown shape id");
}

void check_shape_known(ShapeId shape) {
  switch (shape) {
    case ShapeId::SECOND_LARGEST_FIRST_THEN_MAX:
    case ShapeId::FIRST_IS_D_PLUS_1_THEN_MAX:
    case ShapeId::FIRST_TWO:
      return;
  }
  throw InputError("unknown shape id");
}

}  // namespace

std::map<StatValue, BigInt> count_refined(int n, const PatternTriple& t,
                                          const StatisticKey& key) {
  if (n < 0) throw InputError("negative length");
  if (key.kind == StatKind::SHAPE_ID) check_shape_known(key.shape);
  std::map<StatValue, BigInt> out;
  for_each_avoider(n, t, [&](const std::vector<int>& p) {
    if (static_cast<int>(p.size()) != n) return;
    StatValue v;
    if (key.kind == StatKind::SHAPE_ID)
      v = {shape_matches(p, key.shape, key.p1, key.p2) ? 1 : 0, 0};
    else
      v = stat_of(p, key);
    out[v] += 1;
  });
  return out;
}

BigInt count_shape(int n, const PatternTriple& t, ShapeId shape, int p1, int p2) {
  if (n < 0) throw InputError("negative length");
  check_shape_known(shape);
  BigInt total = 0;
  for_each_avoider(n, t, [&](const std::vector<int>& p) {
    if (static_cast<int>(p.size()) == n && shape_matches(p, shape, p1, p2)) total += 1;
  });
  return total;
}

std::vector<Permutation> enumerate_avoiders(int n, const PatternTriple& t, int cap) {
  if (n < 0) throw InputError("negative length");
  if (n > cap)
    throw CapacityError("enumeration of length " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  std::vector<Permutation> out;
  for_each_avoider(n, t, [&](const std::vector<int>& p) {
    if (static_cast<int>(p.size()) == n) out.push_back(Permutation(p));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace patwilf
