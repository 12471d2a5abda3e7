#include "patwilf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <utility>

#include "patwilf/gentree.hpp"
#include "patwilf/recurrence.hpp"

namespace patwilf {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

BigInt series_coeff(const LaurentSeries& s, int n) {
  const QuadExt c = s.coeff_or_zero(n);
  if (!c.is_rational() || boost::multiprecision::denominator(c.a) != 1)
    throw SeriesError("series coefficient at x^" + std::to_string(n) +
                      " is not an integer: " + c.str());
  return boost::multiprecision::numerator(c.a);
}

// Lemma slices: how each dot-suffixed registry entry refines its case.
BigInt lemma_brute(const std::string& key, const PatternTriple& t, int n) {
  if (key.size() > 2 && key.substr(key.size() - 2) == ".H")
    return count_shape(n, t, ShapeId::SECOND_LARGEST_FIRST_THEN_MAX);
  if (key.size() > 3 && key.substr(key.size() - 3) == ".G2") {
    const auto m = count_refined(n, t, StatisticKey{StatKind::LR_MAXIMA, ShapeId::FIRST_TWO, 0, 0});
    const auto it = m.find({2, 0});
    return it == m.end() ? BigInt(0) : it->second;
  }
  if (key.size() > 3 && key.substr(key.size() - 3) == ".J0")
    return count_shape(n, t, ShapeId::FIRST_IS_D_PLUS_1_THEN_MAX, 0);
  if (key.size() > 2 && key.substr(key.size() - 2) == ".J") {
    BigInt total = 0;
    for (int d = 0; d + 2 <= n; ++d)
      total += count_shape(n, t, ShapeId::FIRST_IS_D_PLUS_1_THEN_MAX, d);
    return total;
  }
  throw InputError("no refined-slice rule for registry key " + key);
}

int effective_order(const VerifyOptions& opt) {
  return std::max(opt.series_order, opt.n_max + 2);
}

}  // namespace

const char* channel_name(Channel c) {
  switch (c) {
    case Channel::SERIES: return "series";
    case Channel::TREE: return "tree";
    case Channel::RECURRENCE: return "recurrence";
    case Channel::REFINED: return "refined";
  }
  return "?";
}

std::vector<VerificationRecord> verify_case(const Registry& reg, int case_id,
                                            const VerifyOptions& opt) {
  std::vector<VerificationRecord> recs;
  const RegistryEntry& ent = reg.case_entry(case_id);
  const int order = effective_order(opt);
  const LaurentSeries series = eval_gf(ent.formula, order);
  if (series.valuation() < 0)
    throw SeriesError("registry entry " + ent.key + " evaluates to a Laurent series");

  if (opt.series) {
    for (int n = 0; n <= opt.n_max; ++n) {
      const auto t0 = Clock::now();
      VerificationRecord r;
      r.case_key = ent.key;
      r.n = n;
      r.channel = Channel::SERIES;
      r.brute = count_avoiders(n, ent.triple);
      r.claimed = series_coeff(series, n);
      r.match = r.brute == r.claimed;
      r.elapsed_ms = ms_since(t0);
      recs.push_back(std::move(r));
    }
  }

  if (opt.tree && (case_id == 69 || case_id == 88)) {
    const auto t0 = Clock::now();
    const RuleSystem rs = case_id == 69 ? rules_case69() : rules_case88();
    const int top = std::max(opt.n_max, rs.root_level);
    const auto totals = level_counts(rs, top);
    const auto elapsed = ms_since(t0);
    for (size_t i = 0; i < totals.size(); ++i) {
      const int n = rs.root_level + static_cast<int>(i);
      if (n > opt.n_max) break;
      VerificationRecord r;
      r.case_key = ent.key;
      r.n = n;
      r.channel = Channel::TREE;
      r.brute = totals[i];
      r.claimed = series_coeff(series, n);
      r.match = r.brute == r.claimed;
      r.elapsed_ms = i == 0 ? elapsed : 0;
      recs.push_back(std::move(r));
    }
  }

  if (opt.recurrence && (case_id == 231 || case_id == 241)) {
    const auto t0 = Clock::now();
    const RecurrenceTable tab = case_id == 231 ? table_case231(std::max(1, opt.n_max))
                                               : table_case241(std::max(1, opt.n_max));
    const auto elapsed = ms_since(t0);
    for (int n = 1; n <= opt.n_max; ++n) {
      VerificationRecord r;
      r.case_key = ent.key;
      r.n = n;
      r.channel = Channel::RECURRENCE;
      r.brute = tab.row_sums[static_cast<size_t>(n)];
      r.claimed = series_coeff(series, n);
      r.match = r.brute == r.claimed;
      r.elapsed_ms = n == 1 ? elapsed : 0;
      recs.push_back(std::move(r));
    }
  }

  if (opt.refined) {
    for (const auto& key : reg.keys()) {
      if (key.size() <= ent.key.size() + 1) continue;
      if (key.compare(0, ent.key.size(), ent.key) != 0 || key[ent.key.size()] != '.') continue;
      const RegistryEntry& lem = reg.entry(key);
      const LaurentSeries ls = eval_gf(lem.formula, order);
      if (ls.valuation() < 0)
        throw SeriesError("registry entry " + key + " evaluates to a Laurent series");
      for (int n = 0; n <= opt.n_max; ++n) {
        const auto t0 = Clock::now();
        VerificationRecord r;
        r.case_key = key;
        r.n = n;
        r.channel = Channel::REFINED;
        r.brute = lemma_brute(key, lem.triple, n);
        r.claimed = series_coeff(ls, n);
        r.match = r.brute == r.claimed;
        r.elapsed_ms = ms_since(t0);
        recs.push_back(std::move(r));
      }
    }
  }

  sort_records(recs);
  return recs;
}

std::vector<VerificationRecord> verify_all(const Registry& reg, const VerifyOptions& opt) {
  std::vector<VerificationRecord> recs;
  for (int id : reg.main_cases()) {
    auto part = verify_case(reg, id, opt);
    recs.insert(recs.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  sort_records(recs);
  return recs;
}

void sort_records(std::vector<VerificationRecord>& recs) {
  auto split = [](const std::string& key) {
    const size_t dot = key.find('.');
    const int main_id = std::stoi(key);
    return std::pair<int, std::string>(main_id,
                                       dot == std::string::npos ? "" : key.substr(dot + 1));
  };
  std::stable_sort(recs.begin(), recs.end(),
                   [&](const VerificationRecord& l, const VerificationRecord& r) {
                     const auto lk = split(l.case_key), rk = split(r.case_key);
                     if (lk != rk) return lk < rk;
                     if (l.n != r.n) return l.n < r.n;
                     return static_cast<int>(l.channel) < static_cast<int>(r.channel);
                   });
}

bool all_match(const std::vector<VerificationRecord>& recs) {
  for (const auto& r : recs)
    if (!r.match) return false;
  return true;
}

void write_report_jsonl(std::ostream& os, const std::vector<VerificationRecord>& recs) {
  for (const auto& r : recs) {
    os << "{\"case\":\"" << r.case_key << "\",\"n\":" << r.n
       << ",\"channel\":\"" << channel_name(r.channel) << "\""
       << ",\"brute\":" << r.brute.str()
       << ",\"claimed\":" << r.claimed.str()
       << ",\"match\":" << (r.match ? "true" : "false")
       << ",\"elapsed_ms\":" << r.elapsed_ms << "}\n";
  }
}

int print_summary(std::ostream& os, const std::vector<VerificationRecord>& recs) {
  // Roll up per case in the order the records arrive (sorted reports keep
  // their numeric case order).
  std::vector<std::pair<std::string, std::pair<int, int>>> per_case;
  int failures = 0;
  for (const auto& r : recs) {
    if (per_case.empty() || per_case.back().first != r.case_key)
      per_case.push_back({r.case_key, {0, 0}});
    ++per_case.back().second.first;
    if (!r.match) {
      ++per_case.back().second.second;
      ++failures;
    }
  }
  for (const auto& [key, cf] : per_case) {
    os << "case " << key << ": " << cf.first << " checks, "
       << (cf.second == 0 ? "all match" : std::to_string(cf.second) + " MISMATCH") << "\n";
  }
  for (const auto& r : recs) {
    if (!r.match)
      os << "  MISMATCH case " << r.case_key << " n=" << r.n << " channel="
         << channel_name(r.channel) << " brute=" << r.brute.str()
         << " claimed=" << r.claimed.str() << "\n";
  }
  return failures;
}

}  // namespace patwilf
