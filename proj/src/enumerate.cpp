#include "enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <future>

#include "errors.hpp"

namespace cycperm {

namespace {

std::int64_t checked_factorial(int n, std::int64_t cap) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    if (f > cap / i) return cap + 1;
    f *= i;
  }
  return f;
}

struct Shared {
  const PairQuery &q;
  const EnumOptions &opts;
  std::atomic<std::int64_t> nodes{0};

  void charge() {
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > opts.node_budget)
      throw ResourceLimitError("node budget exceeded (" +
                               std::to_string(opts.node_budget) + ")");
  }
};

struct Partial {
  std::int64_t count = 0;
  std::vector<Permutation> members;
  bool truncated = false;
};

bool satisfies(const std::vector<int> &word,
               const std::vector<std::pair<int, int>> &constraints) {
  for (auto [pos, val] : constraints)
    if (word[static_cast<size_t>(pos) - 1] != val) return false;
  return true;
}

// Depth-first over cycle-word suffixes in increasing value order. `prefix`
// holds (1, c2, ..., ck); `used` marks values already placed.
void dfs(Shared &sh, std::vector<int> &prefix, std::vector<char> &used,
         SetAvoider &tau_state, Partial &out) {
  const int n = sh.q.n;
  if (static_cast<int>(prefix.size()) == n) {
    if (!sh.opts.prune && !avoids_all(prefix, sh.q.tau)) return;
    // one-line word: pi(c_i) = c_{i+1}, pi(c_n) = 1
    std::vector<int> word(static_cast<size_t>(n));
    for (int i = 0; i < n - 1; ++i)
      word[static_cast<size_t>(prefix[static_cast<size_t>(i)]) - 1] =
          prefix[static_cast<size_t>(i) + 1];
    word[static_cast<size_t>(prefix[static_cast<size_t>(n) - 1]) - 1] = 1;
    if (!satisfies(word, sh.opts.constraints)) return;
    if (!avoids_all(word, sh.q.sigma)) return;
    ++out.count;
    if (sh.q.list) {
      if (static_cast<std::int64_t>(out.members.size()) < sh.opts.member_limit)
        out.members.emplace_back(std::move(word));
      else
        out.truncated = true;
    }
    return;
  }
  for (int v = 2; v <= n; ++v) {
    if (used[static_cast<size_t>(v)]) continue;
    sh.charge();
    if (sh.opts.prune && tau_state.would_contain_any(v)) continue;
    SetAvoider next_state = tau_state;
    next_state.push(v);
    prefix.push_back(v);
    used[static_cast<size_t>(v)] = 1;
    dfs(sh, prefix, used, next_state, out);
    used[static_cast<size_t>(v)] = 0;
    prefix.pop_back();
  }
}

Partial run_subtree(Shared &sh, int c2) {
  const int n = sh.q.n;
  Partial out;
  std::vector<int> prefix{1};
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  used[1] = 1;
  SetAvoider tau_state(sh.q.tau);
  tau_state.push(1);
  sh.charge();
  if (sh.opts.prune && tau_state.would_contain_any(c2)) return out;
  tau_state.push(c2);
  prefix.push_back(c2);
  used[static_cast<size_t>(c2)] = 1;
  dfs(sh, prefix, used, tau_state, out);
  return out;
}

}  // namespace

void generate_cyclic(int n, const std::function<void(const CycleWord &)> &sink,
                     std::int64_t node_budget) {
  if (n < 1) throw OutOfRangeError("n must be >= 1");
  if (checked_factorial(n - 1, node_budget) > node_budget)
    throw ResourceLimitError("(n-1)! exceeds the node budget");
  std::vector<int> word(static_cast<size_t>(n));
  word[0] = 1;
  std::vector<int> rest(static_cast<size_t>(n > 1 ? n - 1 : 0));
  for (int i = 2; i <= n; ++i) rest[static_cast<size_t>(i) - 2] = i;
  do {
    std::copy(rest.begin(), rest.end(), word.begin() + 1);
    sink(CycleWord(word));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

EnumerationResult brute_force(const PairQuery &q, const EnumOptions &opts) {
  if (q.n < 1) throw OutOfRangeError("n must be >= 1");
  for (auto [pos, val] : opts.constraints)
    if (pos < 1 || pos > q.n || val < 1 || val > q.n)
      throw OutOfRangeError("constraint out of range");

  const auto start = std::chrono::steady_clock::now();
  Shared sh{q, opts};
  EnumerationResult result;

  if (q.n == 1) {
    sh.charge();
    std::vector<int> word{1};
    if (satisfies(word, opts.constraints) && avoids_all(word, q.sigma) &&
        avoids_all(word, q.tau)) {
      result.count = 1;
      if (q.list) {
        result.members.emplace();
        result.members->push_back(Permutation::identity(1));
      }
    }
    if (q.list && !result.members) result.members.emplace();
    result.nodes_visited = sh.nodes.load();
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  }

  // the top-level branch on c2 splits the search into n-1 independent
  // subtrees; parts are merged in c2 order whatever the thread count
  std::vector<Partial> parts(static_cast<size_t>(q.n) - 1);
  if (opts.threads <= 1) {
    for (int c2 = 2; c2 <= q.n; ++c2)
      parts[static_cast<size_t>(c2) - 2] = run_subtree(sh, c2);
  } else {
    const int workers = std::min(opts.threads, q.n - 1);
    std::vector<std::vector<int>> batches(static_cast<size_t>(workers));
    for (int c2 = 2; c2 <= q.n; ++c2)
      batches[static_cast<size_t>(c2 - 2) % workers].push_back(c2);
    std::vector<std::future<void>> futs;
    futs.reserve(batches.size());
    for (const auto &batch : batches)
      futs.push_back(std::async(std::launch::async, [&sh, &parts, &batch] {
        for (int c2 : batch)
          parts[static_cast<size_t>(c2) - 2] = run_subtree(sh, c2);
      }));
    for (auto &f : futs) f.get();
  }

  std::vector<Permutation> members;
  for (auto &p : parts) {
    result.count += p.count;
    result.truncated = result.truncated || p.truncated;
    std::move(p.members.begin(), p.members.end(), std::back_inserter(members));
  }
  if (q.list) {
    if (static_cast<std::int64_t>(members.size()) > opts.member_limit) {
      members.erase(members.begin() +
                        static_cast<std::ptrdiff_t>(opts.member_limit),
                    members.end());
      result.truncated = true;
    }
    std::sort(members.begin(), members.end());
    result.members = std::move(members);
  }
  result.nodes_visited = sh.nodes.load();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

EnumerationResult brute_force_filtered(
    const PairQuery &q, std::vector<std::pair<int, int>> constraints,
    const EnumOptions &opts) {
  EnumOptions with = opts;
  with.constraints = std::move(constraints);
  return brute_force(q, with);
}

}  // namespace cycperm
