#ifndef CYCPERM_ENUMERATE_HPP
#define CYCPERM_ENUMERATE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "patterns.hpp"
#include "perm.hpp"

namespace cycperm {

/// One enumeration request: count or list A_n(sigma;tau).
struct PairQuery {
  PatternSet sigma;
  PatternSet tau;
  int n = 1;
  bool list = false;
};

struct EnumOptions {
  bool prune = true;        // abandon cycle-word prefixes containing some tau
  int threads = 1;          // <=1 sequential; top-level subtrees run as tasks
  std::int64_t node_budget = 1'000'000'000;
  std::int64_t member_limit = 1'000'000;
  // pi(position) = value filters on the one-line word
  std::vector<std::pair<int, int>> constraints;
};

struct EnumerationResult {
  std::int64_t count = 0;
  std::optional<std::vector<Permutation>> members;  // sorted by one-line word
  std::chrono::nanoseconds elapsed{0};
  std::int64_t nodes_visited = 0;
  bool truncated = false;
};

/// Emit the (n-1)! cycle words (1, w) in lexicographic order of w.
/// Throws ResourceLimitError up front when (n-1)! exceeds the budget.
void generate_cyclic(int n, const std::function<void(const CycleWord &)> &sink,
                     std::int64_t node_budget = 1'000'000'000);

EnumerationResult brute_force(const PairQuery &q, const EnumOptions &opts = {});

/// brute_force restricted to one-line words satisfying (position, value)
/// constraints.
EnumerationResult brute_force_filtered(
    const PairQuery &q, std::vector<std::pair<int, int>> constraints,
    const EnumOptions &opts = {});

}  // namespace cycperm

#endif
