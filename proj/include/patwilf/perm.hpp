#pragma once
/*
 * Permutations in one-line notation, classical pattern containment, and
 * the dihedral-style symmetries (reverse, complement, inverse) that act
 * on pattern triples.
 *
 * Conventions: a Permutation of size n holds the values 1..n exactly once;
 * the empty permutation (n = 0) is valid. Positions are 0-based in code,
 * values are 1-based. Textual form is plain digits for n <= 9 ("1324"),
 * comma-separated otherwise ("10,3,2,...").
 */

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace patwilf {

struct PermError : std::runtime_error {
  explicit PermError(const std::string& m) : std::runtime_error(m) {}
};

class Permutation {
public:
  Permutation() = default;                       // empty permutation
  explicit Permutation(std::vector<int> vals);   // must be a rearrangement of 1..n

  // Parse textual form. Accepts digit strings and comma-separated lists.
  static Permutation parse(const std::string& text);

  // Order-isomorphic relabeling of a duplicate-free word onto 1..k.
  // Throws PermError on duplicates.
  static Permutation standardize(const std::vector<int>& word);

  int size() const { return static_cast<int>(v_.size()); }
  int at(int pos) const { return v_[pos]; }      // pos 0-based
  const std::vector<int>& values() const { return v_; }
  std::string str() const;

  bool operator==(const Permutation& o) const { return v_ == o.v_; }
  bool operator!=(const Permutation& o) const { return v_ != o.v_; }
  bool operator<(const Permutation& o) const { return v_ < o.v_; }

private:
  std::vector<int> v_;
};

using Pattern = Permutation;

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

// Number of left-to-right maxima (positions i with p_i > p_j for all j < i).
int left_right_maxima(const Permutation& p);

// Classical containment: some subsequence of host is order-isomorphic to pat.
// One-pass over host positions keeping partial-embedding state.
bool contains(const Permutation& host, const Pattern& pat);
// Reference implementation by direct subsequence scan; used as an oracle.
bool contains_naive(const Permutation& host, const Pattern& pat);

// An unordered set of three distinct length-4 patterns. Stored sorted by
// one-line word so equal triples compare equal regardless of input order.
class PatternTriple {
public:
  PatternTriple(Pattern a, Pattern b, Pattern c,
                std::optional<int> case_id = std::nullopt);
  static PatternTriple parse(const std::string& text);   // "1324,2341,4123"

  const std::array<Pattern, 3>& patterns() const { return p_; }
  std::optional<int> case_id() const { return case_id_; }
  std::string str() const;

  bool operator==(const PatternTriple& o) const { return p_ == o.p_; }
  bool operator<(const PatternTriple& o) const { return p_ < o.p_; }

private:
  std::array<Pattern, 3> p_;
  std::optional<int> case_id_;
};

// Orbit of a triple under the group generated by reverse, complement and
// inverse acting elementwise. Size always divides 8.
std::set<PatternTriple> symmetry_class(const PatternTriple& t);

}  // namespace patwilf
