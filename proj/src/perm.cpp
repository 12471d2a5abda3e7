#include "patwilf/perm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "match.hpp"

namespace patwilf {

Permutation::Permutation(std::vector<int> vals) : v_(std::move(vals)) {
  const int n = static_cast<int>(v_.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int x : v_) {
    if (x < 1 || x > n || seen[x]) throw PermError("not a permutation of 1.." + std::to_string(n));
    seen[x] = 1;
  }
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> vals;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t pos = 0;
      int x = 0;
      try {
        x = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw PermError("bad entry '" + tok + "'");
      }
      if (pos != tok.size()) throw PermError("bad entry '" + tok + "'");
      vals.push_back(x);
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw PermError(std::string("bad character '") + c + "' in permutation");
      vals.push_back(c - '0');
    }
  }
  return Permutation(std::move(vals));
}

Permutation Permutation::standardize(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return word[a] < word[b]; });
  for (int i = 0; i + 1 < n; ++i)
    if (word[idx[i]] == word[idx[i + 1]]) throw PermError("duplicate entry in word");
  std::vector<int> out(n);
  for (int r = 0; r < n; ++r) out[idx[r]] = r + 1;
  return Permutation(std::move(out));
}

std::string Permutation::str() const {
  std::string s;
  if (size() <= 9) {
    for (int x : v_) s += static_cast<char>('0' + x);
  } else {
    for (size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v_[i]);
    }
  }
  return s;
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n + 1 - p.at(i);
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[p.at(i) - 1] = i + 1;
  return Permutation(std::move(v));
}

int left_right_maxima(const Permutation& p) {
  int count = 0, best = 0;
  for (int x : p.values())
    if (x > best) { best = x; ++count; }
  return count;
}

namespace detail {

MatcherPlan::MatcherPlan(const Pattern& pat) {
  m = pat.size();
  q = pat.values();
  lo_idx.assign(m, -1);
  hi_idx.assign(m, -1);
  roles.resize(m);
  for (int j = 0; j < m; ++j) {
    const int next = q[j];
    int lo_val = 0, hi_val = std::numeric_limits<int>::max();
    for (int i = 0; i < j; ++i) {
      if (q[i] < next && q[i] > lo_val) { lo_val = q[i]; lo_idx[j] = i; }
      if (q[i] > next && q[i] < hi_val) { hi_val = q[i]; hi_idx[j] = i; }
    }
  }
  for (int j = 1; j < m; ++j) {
    roles[j].resize(j);
    for (int i = 0; i < j; ++i) {
      bool below = false, above = false;
      for (int r = j; r < m; ++r) {
        if (q[r] > q[i]) above = true;
        if (q[r] < q[i]) below = true;
      }
      roles[j][i] = (below && above) ? Role::Pinch : (above ? Role::Min : Role::Max);
    }
  }
}

namespace {

// a subsumes b at level t: every completion of b is a completion of a.
bool dominates(const Role* roles, const uint8_t* a, const uint8_t* b, int t) {
  for (int i = 0; i < t; ++i) {
    switch (roles[i]) {
      case Role::Pinch: if (a[i] != b[i]) return false; break;
      case Role::Min:   if (a[i] > b[i]) return false; break;
      case Role::Max:   if (a[i] < b[i]) return false; break;
    }
  }
  return true;
}

void insert_state(std::vector<uint8_t>& lvl, const Role* roles, const uint8_t* cand, int t) {
  size_t k = 0;
  while (k < lvl.size()) {
    const uint8_t* e = lvl.data() + k;
    if (dominates(roles, e, cand, t)) return;
    if (dominates(roles, cand, e, t)) {
      // swap-remove tuple at k
      const size_t last = lvl.size() - t;
      if (k != last) std::copy(lvl.data() + last, lvl.data() + last + t, lvl.data() + k);
      lvl.resize(last);
      continue;
    }
    k += t;
  }
  lvl.insert(lvl.end(), cand, cand + t);
}

}  // namespace

void PatternMatcher::push(int value) {
  if (contained) return;
  const int m = plan->m;
  if (m == 0) { contained = true; return; }
  uint8_t cand[kMaxPatLen];
  for (int j = m - 1; j >= 0; --j) {
    const int li = plan->lo_idx[j], hi = plan->hi_idx[j];
    if (j == 0) {
      if (m == 1) { contained = true; return; }
      cand[0] = static_cast<uint8_t>(value);
      insert_state(states[1], plan->roles[1].data(), cand, 1);
      continue;
    }
    auto& lvl = states[j];
    for (size_t k = 0; k < lvl.size(); k += j) {
      const uint8_t* s = lvl.data() + k;
      const int lo = (li < 0) ? 0 : s[li];
      const int up = (hi < 0) ? std::numeric_limits<int>::max() : s[hi];
      if (value > lo && value < up) {
        if (j + 1 == m) { contained = true; return; }
        std::copy(s, s + j, cand);
        cand[j] = static_cast<uint8_t>(value);
        insert_state(states[j + 1], plan->roles[j + 1].data(), cand, j + 1);
      }
    }
  }
}

bool contains_incremental(const Permutation& host, const Pattern& pat) {
  if (pat.size() == 0) return true;
  if (pat.size() > host.size()) return false;
  MatcherPlan plan(pat);
  PatternMatcher mm(plan);
  for (int x : host.values()) {
    mm.push(x);
    if (mm.contained) return true;
  }
  return false;
}

}  // namespace detail

namespace {

bool rec_contains(const std::vector<int>& h, const std::vector<int>& q,
                  std::vector<int>& chosen, size_t qi, size_t start) {
  if (qi == q.size()) return true;
  for (size_t p = start; p + (q.size() - qi) <= h.size() + 0; ++p) {
    if (p >= h.size()) break;
    const int v = h[p];
    bool ok = true;
    for (size_t i = 0; i < qi && ok; ++i) {
      if ((q[i] < q[qi]) != (chosen[i] < v) || chosen[i] == v) ok = false;
    }
    if (!ok) continue;
    chosen[qi] = v;
    if (rec_contains(h, q, chosen, qi + 1, p + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains_naive(const Permutation& host, const Pattern& pat) {
  if (pat.size() == 0) return true;
  if (pat.size() > host.size()) return false;
  std::vector<int> chosen(pat.size());
  return rec_contains(host.values(), pat.values(), chosen, 0, 0);
}

bool contains(const Permutation& host, const Pattern& pat) {
  if (pat.size() > detail::kMaxPatLen) return contains_naive(host, pat);
  return detail::contains_incremental(host, pat);
}

PatternTriple::PatternTriple(Pattern a, Pattern b, Pattern c, std::optional<int> case_id)
    : p_{std::move(a), std::move(b), std::move(c)}, case_id_(case_id) {
  for (const auto& p : p_)
    if (p.size() != 4) throw PermError("triple patterns must have length 4");
  std::sort(p_.begin(), p_.end());
  if (p_[0] == p_[1] || p_[1] == p_[2]) throw PermError("triple patterns must be distinct");
}

PatternTriple PatternTriple::parse(const std::string& text) {
  std::stringstream ss(text);
  std::string tok;
  std::vector<Pattern> pats;
  while (std::getline(ss, tok, ',')) pats.push_back(Pattern::parse(tok));
  if (pats.size() != 3) throw PermError("expected exactly three patterns");
  return PatternTriple(pats[0], pats[1], pats[2]);
}

std::string PatternTriple::str() const {
  return p_[0].str() + "," + p_[1].str() + "," + p_[2].str();
}

std::set<PatternTriple> symmetry_class(const PatternTriple& t) {
  std::set<PatternTriple> orbit{PatternTriple(t.patterns()[0], t.patterns()[1], t.patterns()[2])};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PatternTriple> cur(orbit.begin(), orbit.end());
    for (const auto& u : cur) {
      const auto& p = u.patterns();
      const PatternTriple images[3] = {
          PatternTriple(reverse(p[0]), reverse(p[1]), reverse(p[2])),
          PatternTriple(complement(p[0]), complement(p[1]), complement(p[2])),
          PatternTriple(inverse(p[0]), inverse(p[1]), inverse(p[2]))};
      for (const auto& im : images)
        if (orbit.insert(im).second) grew = true;
    }
  }
  return orbit;
}

}  // namespace patwilf
