#pragma once
/*
 * Cross-validation harness. Each record compares one independently
 * computed count (brute) against the closed-form claim (claimed) for one
 * case, one length and one channel:
 *
 *   series      exhaustive count vs registry series coefficient (all cases)
 *   tree        succession-rule level total vs series coefficient (69, 88)
 *   recurrence  table row sum vs series coefficient (231, 241)
 *   refined     sliced enumeration vs the dot-suffixed lemma series
 *               (cases 49, 80, 84, 151; records carry the lemma key)
 *
 * Reports are emitted as JSON lines sorted by (case, n, channel), so two
 * runs differ only in elapsed_ms.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include "patwilf/enumerate.hpp"
#include "patwilf/gf.hpp"

namespace patwilf {

enum class Channel { SERIES, TREE, RECURRENCE, REFINED };

const char* channel_name(Channel c);

struct VerificationRecord {
  std::string case_key;
  int n = 0;
  Channel channel = Channel::SERIES;
  BigInt brute;
  BigInt claimed;
  bool match = false;
  long long elapsed_ms = 0;
};

struct VerifyOptions {
  int n_max = 10;
  bool series = true;
  bool tree = true;
  bool recurrence = true;
  bool refined = true;
  int series_order = kDefaultOrder;   // raised automatically when n_max needs it
};

// Verify one main (integer-keyed) case over every channel that applies.
std::vector<VerificationRecord> verify_case(const Registry& reg, int case_id,
                                            const VerifyOptions& opt);
// All main cases in the registry.
std::vector<VerificationRecord> verify_all(const Registry& reg, const VerifyOptions& opt);

// Stable report order: numeric case, dot suffix, n, channel.
void sort_records(std::vector<VerificationRecord>& recs);

bool all_match(const std::vector<VerificationRecord>& recs);

// One JSON object per line with keys case, n, channel, brute, claimed,
// match, elapsed_ms. Counts are exact decimal integers.
void write_report_jsonl(std::ostream& os, const std::vector<VerificationRecord>& recs);

// Human-readable per-case rollup; returns the number of mismatched records.
int print_summary(std::ostream& os, const std::vector<VerificationRecord>& recs);

}  // namespace patwilf
