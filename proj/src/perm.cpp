#include "perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "errors.hpp"

namespace cycperm {

namespace {

void check_bijection(const std::vector<int> &word, const char *what) {
  if (word.empty())
    throw InvalidArgumentError(std::string(what) + " must be non-empty");
  const int n = static_cast<int>(word.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : word) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw InvalidArgumentError(std::string(what) +
                                 " is not a permutation of [n]");
    seen[static_cast<size_t>(v)] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  check_bijection(word_, "one-line word");
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidArgumentError("identity needs n >= 1");
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

CycleWord::CycleWord(std::vector<int> cycle) : cycle_(std::move(cycle)) {
  check_bijection(cycle_, "cycle word");
  if (cycle_[0] != 1)
    throw InvalidArgumentError("cycle word must start with 1");
}

bool is_cyclic(const Permutation &p) {
  const int n = p.size();
  int cur = 1;
  for (int step = 0; step < n; ++step) {
    cur = p.at(cur);
    if (cur == 1) return step == n - 1;
  }
  return false;  // unreachable for a valid permutation
}

CycleWord standard_cycle(const Permutation &p) {
  const int n = p.size();
  std::vector<int> cyc;
  cyc.reserve(static_cast<size_t>(n));
  int cur = 1;
  do {
    cyc.push_back(cur);
    cur = p.at(cur);
  } while (cur != 1 && static_cast<int>(cyc.size()) <= n);
  if (static_cast<int>(cyc.size()) != n)
    throw NotCyclicError("permutation is not a single n-cycle");
  return CycleWord(std::move(cyc));
}

Permutation from_cycle(const CycleWord &c) {
  const int n = c.size();
  std::vector<int> word(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int next = (i == n) ? c.at(1) : c.at(i + 1);
    word[static_cast<size_t>(c.at(i)) - 1] = next;
  }
  return Permutation(std::move(word));
}

Permutation delete_at(const Permutation &p, int pos) {
  const int n = p.size();
  if (n < 2) throw OutOfRangeError("cannot delete from a 1-permutation");
  if (pos < 1 || pos > n) throw OutOfRangeError("delete position out of range");
  const int removed = p.at(pos);
  std::vector<int> w;
  w.reserve(static_cast<size_t>(n) - 1);
  for (int j = 1; j <= n; ++j) {
    if (j == pos) continue;
    const int v = p.at(j);
    w.push_back(v > removed ? v - 1 : v);
  }
  return Permutation(std::move(w));
}

Permutation delete_value(const Permutation &p, int value) {
  const int n = p.size();
  if (value < 1 || value > n) throw OutOfRangeError("value out of range");
  for (int j = 1; j <= n; ++j)
    if (p.at(j) == value) return delete_at(p, j);
  throw OutOfRangeError("value not present");  // unreachable
}

Permutation insert_at(const Permutation &p, int pos, int k) {
  const int n = p.size();
  if (pos < 1 || pos > n + 1) throw OutOfRangeError("insert position out of range");
  if (k < 1 || k > n + 1) throw OutOfRangeError("insert value out of range");
  std::vector<int> w;
  w.reserve(static_cast<size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    if (j == pos) w.push_back(k);
    const int v = p.at(j);
    w.push_back(v >= k ? v + 1 : v);
  }
  if (pos == n + 1) w.push_back(k);
  return Permutation(std::move(w));
}

Permutation reverse(const Permutation &p) {
  std::vector<int> w(p.word().begin(), p.word().end());
  std::reverse(w.begin(), w.end());
  return Permutation(std::move(w));
}

Permutation complement(const Permutation &p) {
  const int n = p.size();
  std::vector<int> w;
  w.reserve(static_cast<size_t>(n));
  for (int v : p.word()) w.push_back(n + 1 - v);
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation &p) {
  const int n = p.size();
  std::vector<int> w(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) w[static_cast<size_t>(p.at(j)) - 1] = j;
  return Permutation(std::move(w));
}

Permutation reverse_complement(const Permutation &p) {
  return complement(reverse(p));
}

Permutation reverse_complement_inverse(const Permutation &p) {
  return inverse(reverse_complement(p));
}

CycleWord cycle_symmetry(const CycleWord &c, CycleSymmetry which) {
  const int n = c.size();
  std::vector<int> seq(c.entries().begin(), c.entries().end());
  switch (which) {
    case CycleSymmetry::reverse:
      std::reverse(seq.begin(), seq.end());
      break;
    case CycleSymmetry::complement:
      for (int &v : seq) v = n + 1 - v;
      break;
    case CycleSymmetry::reverse_complement:
      std::reverse(seq.begin(), seq.end());
      for (int &v : seq) v = n + 1 - v;
      break;
  }
  auto one = std::find(seq.begin(), seq.end(), 1);
  std::rotate(seq.begin(), one, seq.end());
  return CycleWord(std::move(seq));
}

namespace {

std::string join_word(std::span<const int> vals, bool digits_ok) {
  std::string out;
  if (digits_ok) {
    for (int v : vals) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (size_t i = 0; i < vals.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(vals[i]);
  }
  return out;
}

std::vector<int> parse_values(std::string_view text, const char *what) {
  std::vector<int> vals;
  if (text.find(',') != std::string_view::npos) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(start, end - start);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(std::string("bad ") + what + ": '" +
                         std::string(text) + "'");
      vals.push_back(v);
      start = end + 1;
      if (end == text.size()) break;
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw ParseError(std::string("bad ") + what + ": '" +
                         std::string(text) + "'");
      vals.push_back(ch - '0');
    }
  }
  if (vals.empty())
    throw ParseError(std::string("empty ") + what);
  return vals;
}

}  // namespace

std::string to_string(const Permutation &p) {
  return join_word(p.word(), p.size() <= 9);
}

std::string to_string(const CycleWord &c) {
  std::string out = "(";
  const auto entries = c.entries();
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(entries[i]);
  }
  out.push_back(')');
  return out;
}

Permutation parse_permutation(std::string_view text) {
  try {
    return Permutation(parse_values(text, "one-line word"));
  } catch (const InvalidArgumentError &e) {
    throw ParseError(e.what());
  }
}

CycleWord parse_cycle(std::string_view text) {
  if (text.size() < 3 || text.front() != '(' || text.back() != ')')
    throw ParseError("cycle word must be parenthesized: '" +
                     std::string(text) + "'");
  try {
    return CycleWord(parse_values(text.substr(1, text.size() - 2), "cycle word"));
  } catch (const InvalidArgumentError &e) {
    throw ParseError(e.what());
  }
}

}  // namespace cycperm
