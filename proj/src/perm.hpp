#ifndef CYCPERM_PERM_HPP
#define CYCPERM_PERM_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cycperm {

/// A permutation of [n] in one-line notation. Values and positions are
/// 1-indexed everywhere in the public interface.
class Permutation {
 public:
  /// word[i] is the image of i+1; must be a bijection on [n], n >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  /// pi(pos), 1 <= pos <= n.
  int at(int pos) const { return word_[static_cast<size_t>(pos) - 1]; }
  std::span<const int> word() const { return word_; }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

/// The standard cycle word (1, c2, ..., cn) of a cyclic permutation:
/// the sequence starts at 1 and c(i+1) is the image of c(i).
class CycleWord {
 public:
  /// cycle[0] must be 1 and the entries a permutation of [n].
  explicit CycleWord(std::vector<int> cycle);

  int size() const { return static_cast<int>(cycle_.size()); }
  /// c(pos), 1 <= pos <= n; c(1) == 1.
  int at(int pos) const { return cycle_[static_cast<size_t>(pos) - 1]; }
  std::span<const int> entries() const { return cycle_; }

  friend bool operator==(const CycleWord &, const CycleWord &) = default;
  friend auto operator<=>(const CycleWord &a, const CycleWord &b) {
    return a.cycle_ <=> b.cycle_;
  }

 private:
  std::vector<int> cycle_;
};

/// True iff the orbit of 1 under p has size n (p is a single n-cycle).
bool is_cyclic(const Permutation &p);

/// Standard cycle word of p; throws NotCyclicError if p is not an n-cycle.
CycleWord standard_cycle(const Permutation &p);

/// Inverse of standard_cycle: the permutation denoted by c.
Permutation from_cycle(const CycleWord &c);

/// Remove the entry at position pos (1-indexed); larger values shift down.
/// Requires n >= 2.
Permutation delete_at(const Permutation &p, int pos);

/// Remove the entry with the given value.
Permutation delete_value(const Permutation &p, int value);

/// Insert value k at position pos; existing entries >= k shift up.
/// 1 <= pos <= n+1, 1 <= k <= n+1.
Permutation insert_at(const Permutation &p, int pos, int k);

Permutation reverse(const Permutation &p);
Permutation complement(const Permutation &p);
Permutation inverse(const Permutation &p);
Permutation reverse_complement(const Permutation &p);
Permutation reverse_complement_inverse(const Permutation &p);

enum class CycleSymmetry { reverse, complement, reverse_complement };

/// Apply the map to the cycle word as a plain sequence, then rotate so the
/// entry 1 comes first (rotation keeps the denoted cyclic permutation).
CycleWord cycle_symmetry(const CycleWord &c, CycleSymmetry which);

// Textual formats. One-line words render as space-free digit strings for
// n <= 9 and comma-separated otherwise; parsers accept both for n <= 9.
// Cycle words always render as "(1,4,5,...)".
std::string to_string(const Permutation &p);
std::string to_string(const CycleWord &c);
Permutation parse_permutation(std::string_view text);
CycleWord parse_cycle(std::string_view text);

}  // namespace cycperm

#endif
