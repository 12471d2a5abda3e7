#include "patwilf/gentree.hpp"

#include <algorithm>
#include <sstream>

namespace patwilf {

RuleSystem rules_case69() {
  RuleSystem rs;
  rs.name = "case69";
  rs.roots = {{3, 2}, {3, 3}};
  rs.children = [](TreeLabel l) {
    const int k = l.k, s = l.t;
    std::vector<TreeLabel> out;
    if (s == 0) {
      for (int i = 1; i <= k; ++i) out.push_back({i, 0});
    } else if (s == 1) {
      out.push_back({2, 1});
      for (int i = 2; i <= k - 1; ++i) out.push_back({i, 0});
      out.push_back({k, 1});
    } else if (s == k) {
      out.push_back({k + 1, k + 1});
      for (int t = k; t >= 2; --t) out.push_back({k + 1, t});
    } else {  // 2 <= s <= k-1
      out.push_back({s + 1, s});
      for (int i = 3; i <= k - s + 1; ++i) out.push_back({i, 1});
      out.push_back({k - s + 2, 2});
      for (int i = k - s + 2; i <= k; ++i) out.push_back({i, 1});
    }
    return out;
  };
  return rs;
}

RuleSystem rules_case88() {
  RuleSystem rs;
  rs.name = "case88";
  rs.roots = {{3, 1}, {3, 3}};
  rs.children = [](TreeLabel l) {
    const int k = l.k, f = l.t;
    std::vector<TreeLabel> out;
    switch (f) {
      case 1:
        out.push_back({3, 1});
        for (int i = 2; i <= k - 2; ++i) out.push_back({i, 5});
        out.push_back({k + 1, 1});
        out.push_back({k + 1, 2});
        break;
      case 2:
        out.push_back({3, 3});
        for (int i = 2; i <= k - 3; ++i) out.push_back({i, 5});
        out.push_back({k - 1, 4});
        out.push_back({k, 4});
        out.push_back({k + 1, 3});
        break;
      case 3:
        if (k == 2) {
          out.push_back({2, 3});
          out.push_back({3, 4});
        } else {
          out.push_back({3, 3});
          for (int i = 2; i <= k - 2; ++i) out.push_back({i, 5});
          out.push_back({k, 4});
          out.push_back({k + 1, 3});
        }
        break;
      case 4:
        out.push_back({2, 3});
        for (int i = 2; i <= k - 1; ++i) out.push_back({i, 5});
        out.push_back({k + 1, 4});
        break;
      case 5:
        for (int i = 1; i <= k; ++i) out.push_back({i, 5});
        break;
      default:
        throw InputError("unknown flavor " + std::to_string(f));
    }
    return out;
  };
  return rs;
}

std::vector<LevelCensus> level_census(const RuleSystem& rs, int n_max) {
  if (n_max < rs.root_level) throw InputError("n_max below the root level");
  std::vector<LevelCensus> out;
  LevelCensus cur;
  for (const auto& r : rs.roots) cur[r] += 1;
  out.push_back(cur);
  for (int lvl = rs.root_level; lvl < n_max; ++lvl) {
    LevelCensus nxt;
    for (const auto& [lab, cnt] : cur)
      for (const auto& ch : rs.children(lab)) nxt[ch] += cnt;
    cur = std::move(nxt);
    out.push_back(cur);
  }
  return out;
}

std::vector<BigInt> level_counts(const RuleSystem& rs, int n_max) {
  std::vector<BigInt> totals;
  for (const auto& census : level_census(rs, n_max)) {
    BigInt t = 0;
    for (const auto& [lab, cnt] : census) t += cnt;
    totals.push_back(t);
  }
  return totals;
}

namespace {

std::string perm_text(const std::vector<int>& p) {
  return Permutation(p).str();
}

// 1-based gaps where inserting n+1 keeps the permutation in the class.
std::vector<int> active_sites(const std::vector<int>& p,
                              const std::array<Pattern, 3>& pats) {
  const int n = static_cast<int>(p.size());
  std::vector<int> out;
  for (int site = 1; site <= n + 1; ++site) {
    std::vector<int> q;
    q.reserve(static_cast<size_t>(n) + 1);
    q.insert(q.end(), p.begin(), p.begin() + (site - 1));
    q.push_back(n + 1);
    q.insert(q.end(), p.begin() + (site - 1), p.end());
    const Permutation qp(q);
    bool alive = true;
    for (const auto& pat : pats)
      if (contains(qp, pat)) { alive = false; break; }
    if (alive) out.push_back(site);
  }
  return out;
}

std::vector<int> insert_at(const std::vector<int>& p, int site) {
  std::vector<int> q;
  q.reserve(p.size() + 1);
  q.insert(q.end(), p.begin(), p.begin() + (site - 1));
  q.push_back(static_cast<int>(p.size()) + 1);
  q.insert(q.end(), p.begin() + (site - 1), p.end());
  return q;
}

// Label from the definition for case 69: k = #active sites, s = #active
// sites to the right of the largest ascent position (1-based index of the
// left element of the rightmost ascent, 0 for decreasing permutations).
TreeLabel label69(const std::vector<int>& p, const std::vector<int>& act) {
  int lai = 0;
  for (size_t j = 0; j + 1 < p.size(); ++j)
    if (p[j] < p[j + 1]) lai = static_cast<int>(j) + 1;
  int s = 0;
  for (int a : act)
    if (a > lai) ++s;
  return {static_cast<int>(act.size()), s};
}

struct Vertex {
  std::vector<int> perm;
  TreeLabel label;
};

MaterializeReport materialize_common(const RuleSystem& rs, const PatternTriple& triple,
                                     int n_max,
                                     const std::vector<std::pair<std::vector<int>, TreeLabel>>& roots,
                                     bool check_label_def) {
  MaterializeReport rep;
  auto bad = [&](const std::string& msg) {
    if (rep.ok) { rep.ok = false; rep.detail = msg; }
  };

  std::vector<Vertex> level;
  for (const auto& [p, lab] : roots) level.push_back({p, lab});

  for (int n = rs.root_level; n <= n_max && rep.ok; ++n) {
    // level set must equal the enumerated avoiders, each exactly once
    std::vector<Permutation> got;
    got.reserve(level.size());
    for (const auto& v : level) got.push_back(Permutation(v.perm));
    std::sort(got.begin(), got.end());
    for (size_t i = 0; i + 1 < got.size(); ++i)
      if (got[i] == got[i + 1]) bad("level " + std::to_string(n) + ": duplicate vertex " + got[i].str());
    const auto expect = enumerate_avoiders(n, triple);
    if (got != expect)
      bad("level " + std::to_string(n) + ": vertex set differs from enumeration (" +
          std::to_string(got.size()) + " vs " + std::to_string(expect.size()) + ")");

    std::vector<Vertex> next;
    for (const auto& v : level) {
      if (!rep.ok) break;
      const auto act = active_sites(v.perm, triple.patterns());
      if (static_cast<int>(act.size()) != v.label.k) {
        bad(perm_text(v.perm) + ": " + std::to_string(act.size()) +
            " active sites but label k=" + std::to_string(v.label.k));
        break;
      }
      if (check_label_def) {
        const TreeLabel def = label69(v.perm, act);
        if (!(def == v.label)) {
          bad(perm_text(v.perm) + ": rule label (" + std::to_string(v.label.k) + "," +
              std::to_string(v.label.t) + ") != definition label (" +
              std::to_string(def.k) + "," + std::to_string(def.t) + ")");
          break;
        }
      }
      const auto kids = rs.children(v.label);
      if (kids.size() != act.size()) {
        bad(perm_text(v.perm) + ": rule arity " + std::to_string(kids.size()) +
            " != active sites " + std::to_string(act.size()));
        break;
      }
      if (n < n_max)
        for (size_t i = 0; i < act.size(); ++i)
          next.push_back({insert_at(v.perm, act[i]), kids[i]});
    }
    level = std::move(next);
    if (rep.ok) rep.levels_checked = n;
  }
  return rep;
}

}  // namespace

MaterializeReport materialize_check_case69(int n_max) {
  const auto rs = rules_case69();
  const PatternTriple t = PatternTriple::parse("1234,1324,3412");
  return materialize_common(rs, t, n_max,
                            {{{1, 2}, {3, 2}}, {{2, 1}, {3, 3}}}, true);
}

MaterializeReport materialize_check_case88(int n_max) {
  const auto rs = rules_case88();
  const PatternTriple t = PatternTriple::parse("3412,3421,1324");
  return materialize_common(rs, t, n_max,
                            {{{2, 1}, {3, 1}}, {{1, 2}, {3, 3}}}, false);
}

}  // namespace patwilf
