#ifndef CYCPERM_PATTERNS_HPP
#define CYCPERM_PATTERNS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "perm.hpp"

namespace cycperm {

/// A classical pattern: a permutation of [k], k >= 1.
class Pattern {
 public:
  explicit Pattern(Permutation word) : word_(std::move(word)) {}
  explicit Pattern(std::string_view text) : word_(parse_permutation(text)) {}

  int length() const { return word_.size(); }
  std::span<const int> word() const { return word_.word(); }
  const Permutation &perm() const { return word_; }

  friend bool operator==(const Pattern &, const Pattern &) = default;
  friend auto operator<=>(const Pattern &a, const Pattern &b) {
    return a.word_ <=> b.word_;
  }

 private:
  Permutation word_;
};

/// A non-empty duplicate-free set of patterns.
class PatternSet {
 public:
  explicit PatternSet(std::vector<Pattern> pats);
  PatternSet(std::initializer_list<Pattern> pats)
      : PatternSet(std::vector<Pattern>(pats)) {}

  const std::vector<Pattern> &patterns() const { return pats_; }
  std::string text() const;

 private:
  std::vector<Pattern> pats_;
};

/// Parse "123" as a single pattern set {123}, "3421,4321" as a two-element
/// set, and a comma-separated word that forms one permutation (e.g. "1,3,2")
/// as the singleton containing it.
PatternSet parse_pattern_set(std::string_view text);

/// True iff some subsequence of seq is order-isomorphic to pat. Entries of
/// seq must be distinct; cycle words are matched as plain sequences
/// (including the leading 1).
bool contains(std::span<const int> seq, const Pattern &pat);

/// Backtracking matcher with no length-3 shortcuts (test oracle for the
/// specialized scans).
bool contains_generic(std::span<const int> seq, const Pattern &pat);

bool avoids_all(std::span<const int> seq, const PatternSet &pats);

/// Incremental containment for growing prefixes. Once a prefix contains the
/// pattern every extension does too, so search can stop extending.
/// Value-semantic: copies fork the matcher state for branching searches.
class PrefixAvoider {
 public:
  explicit PrefixAvoider(Pattern pat);

  /// Would prefix + v contain the pattern?
  bool would_contain(int v) const;
  /// Extend the prefix; returns contains() afterwards.
  bool push(int v);
  bool contains() const { return contains_; }
  void reset();

 private:
  bool ends_at(int v) const;

  Pattern pat_;
  bool contains_ = false;
  std::vector<int> values_;
  std::vector<int> min_before_;
  std::vector<int> max_before_;
  std::vector<int> sorted_;  // prefix values, ascending
  // aggregate state for the length-3 scans (see patterns.cpp)
  int agg123_, agg321_, agg213_, agg231_;
};

/// Conjunction of PrefixAvoiders over a pattern set.
class SetAvoider {
 public:
  explicit SetAvoider(const PatternSet &pats);

  bool would_contain_any(int v) const;
  bool push(int v);
  bool contains_any() const { return contains_; }
  void reset();

 private:
  std::vector<PrefixAvoider> avoiders_;
  bool contains_ = false;
};

}  // namespace cycperm

#endif
