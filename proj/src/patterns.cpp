#include "patterns.hpp"

#include <algorithm>
#include <limits>

#include "errors.hpp"

namespace cycperm {

PatternSet::PatternSet(std::vector<Pattern> pats) : pats_(std::move(pats)) {
  if (pats_.empty()) throw InvalidArgumentError("pattern set must be non-empty");
  std::sort(pats_.begin(), pats_.end());
  if (std::adjacent_find(pats_.begin(), pats_.end()) != pats_.end())
    throw InvalidArgumentError("duplicate pattern in set");
}

std::string PatternSet::text() const {
  std::string out;
  for (size_t i = 0; i < pats_.size(); ++i) {
    if (i) out.push_back(',');
    out += to_string(pats_[i].perm());
  }
  return out;
}

PatternSet parse_pattern_set(std::string_view text) {
  if (text.find(',') != std::string_view::npos) {
    // A comma form is either one long permutation ("4,6,1,5,...") or a list
    // of digit-string patterns ("3421,4321"); a token of length > 1 that is
    // itself a valid permutation decides for the list reading.
    std::vector<std::string_view> toks;
    size_t start = 0;
    while (start <= text.size()) {
      size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      toks.push_back(text.substr(start, end - start));
      if (end == text.size()) break;
      start = end + 1;
    }
    bool list_of_patterns =
        std::any_of(toks.begin(), toks.end(),
                    [](std::string_view t) { return t.size() > 1; });
    if (list_of_patterns) {
      // Multi-digit tokens like "10" would belong to a single comma-separated
      // word; treat the text as a list only if every token parses on its own.
      std::vector<Pattern> pats;
      try {
        for (auto t : toks) pats.emplace_back(t);
      } catch (const ParseError &) {
        return PatternSet({Pattern(text)});
      }
      return PatternSet(std::move(pats));
    }
  }
  return PatternSet({Pattern(text)});
}

namespace {

// contains-123 kernel over v(0..m-1); Get maps an index to its value.
template <typename Get>
bool k123(int m, Get v) {
  constexpr int inf = std::numeric_limits<int>::max();
  int lowest = inf;   // minimum so far
  int middle = inf;   // smallest value with a smaller value before it
  for (int i = 0; i < m; ++i) {
    const int x = v(i);
    if (x > middle) return true;
    if (x > lowest) middle = std::min(middle, x);
    lowest = std::min(lowest, x);
  }
  return false;
}

// contains-132 kernel: stack of suffix maxima, scanned right to left.
template <typename Get>
bool k132(int m, Get v) {
  constexpr int ninf = std::numeric_limits<int>::min();
  std::vector<int> stack;
  int two = ninf;  // largest value popped, i.e. a '2' with its '3' to the left
  for (int i = m - 1; i >= 0; --i) {
    const int x = v(i);
    if (x < two) return true;
    while (!stack.empty() && stack.back() < x) {
      two = std::max(two, stack.back());
      stack.pop_back();
    }
    stack.push_back(x);
  }
  return false;
}

int pattern3_code(const Pattern &p) {
  const auto w = p.word();
  return w[0] * 100 + w[1] * 10 + w[2];
}

bool contains3(std::span<const int> s, int code) {
  const int m = static_cast<int>(s.size());
  auto id = [&](int i) { return s[static_cast<size_t>(i)]; };
  auto neg = [&](int i) { return -s[static_cast<size_t>(i)]; };
  auto rev = [&](int i) { return s[static_cast<size_t>(m - 1 - i)]; };
  auto revneg = [&](int i) { return -s[static_cast<size_t>(m - 1 - i)]; };
  switch (code) {
    case 123: return k123(m, id);
    case 321: return k123(m, neg);   // 321 = complement of 123
    case 132: return k132(m, id);
    case 231: return k132(m, rev);   // 231 = reverse of 132
    case 312: return k132(m, neg);   // 312 = complement of 132
    case 213: return k132(m, revneg);
    default: throw InvalidArgumentError("bad length-3 pattern");
  }
}

bool match_from(std::span<const int> s, std::span<const int> pat,
                std::vector<int> &chosen, size_t next) {
  const size_t k = pat.size();
  if (chosen.size() == k) return true;
  const size_t need = k - chosen.size();
  const size_t j = chosen.size();
  for (size_t i = next; i + need <= s.size(); ++i) {
    bool ok = true;
    for (size_t t = 0; t < j && ok; ++t)
      ok = (pat[t] < pat[j]) == (s[static_cast<size_t>(chosen[t])] < s[i]);
    if (!ok) continue;
    chosen.push_back(static_cast<int>(i));
    if (match_from(s, pat, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_generic(std::span<const int> seq, const Pattern &pat) {
  if (pat.length() > static_cast<int>(seq.size())) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(pat.length()));
  return match_from(seq, pat.word(), chosen, 0);
}

bool contains(std::span<const int> seq, const Pattern &pat) {
  const int k = pat.length();
  if (k > static_cast<int>(seq.size())) return false;
  if (k == 1) return !seq.empty();
  if (k == 2) {
    const bool ascending = pat.word()[0] < pat.word()[1];
    int best = seq[0];
    for (size_t i = 1; i < seq.size(); ++i) {
      if (ascending ? seq[i] > best : seq[i] < best) return true;
      best = ascending ? std::min(best, seq[i]) : std::max(best, seq[i]);
    }
    return false;
  }
  if (k == 3) return contains3(seq, pattern3_code(pat));
  return contains_generic(seq, pat);
}

bool avoids_all(std::span<const int> seq, const PatternSet &pats) {
  for (const auto &p : pats.patterns())
    if (contains(seq, p)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// PrefixAvoider
//
// For each length-3 pattern, an occurrence created by appending x must end at
// x, which reduces to a scalar or a single scan over per-position prefix
// minima/maxima:
//   123: x > agg123, agg123 = min{ v_j : some earlier value < v_j }
//   321: x < agg321, agg321 = max{ v_j : some earlier value > v_j }
//   213: x > agg213, agg213 = min{ v_i : some later value < v_i }
//   231: x < agg231, agg231 = max{ v_i : some later value > v_i }
//   132: exists j with v_j > x and min_before[j] < x
//   312: exists j with v_j < x and max_before[j] > x

PrefixAvoider::PrefixAvoider(Pattern pat) : pat_(std::move(pat)) { reset(); }

void PrefixAvoider::reset() {
  contains_ = false;
  values_.clear();
  min_before_.clear();
  max_before_.clear();
  sorted_.clear();
  agg123_ = std::numeric_limits<int>::max();
  agg321_ = std::numeric_limits<int>::min();
  agg213_ = std::numeric_limits<int>::max();
  agg231_ = std::numeric_limits<int>::min();
}

bool PrefixAvoider::ends_at(int x) const {
  const int k = pat_.length();
  if (k == 1) return true;
  if (k == 2) {
    if (values_.empty()) return false;
    const bool ascending = pat_.word()[0] < pat_.word()[1];
    return ascending ? sorted_.front() < x : sorted_.back() > x;
  }
  if (k == 3) {
    switch (pattern3_code(pat_)) {
      case 123: return x > agg123_;
      case 321: return x < agg321_;
      case 213: return x > agg213_;
      case 231: return x < agg231_;
      case 132:
        for (size_t j = 0; j < values_.size(); ++j)
          if (values_[j] > x && min_before_[j] < x) return true;
        return false;
      case 312:
        for (size_t j = 0; j < values_.size(); ++j)
          if (values_[j] < x && max_before_[j] > x) return true;
        return false;
    }
  }
  // general case: match the first k-1 pattern letters inside the stored
  // prefix with x playing the last letter
  const auto pw = pat_.word();
  const size_t kk = static_cast<size_t>(k);
  std::vector<int> chosen;
  std::vector<int> seq(values_);
  seq.push_back(x);
  std::span<const int> s(seq);
  // occurrences ending exactly at x: fix the last index
  struct Rec {
    std::span<const int> s;
    std::span<const int> pat;
    size_t k;
    bool run(std::vector<int> &chosen, size_t next) {
      if (chosen.size() == k - 1) {
        const size_t last = s.size() - 1;
        for (size_t t = 0; t < k - 1; ++t)
          if ((pat[t] < pat[k - 1]) != (s[static_cast<size_t>(chosen[t])] < s[last]))
            return false;
        return true;
      }
      const size_t j = chosen.size();
      for (size_t i = next; i + (k - 1 - j) <= s.size() - 1; ++i) {
        bool ok = true;
        for (size_t t = 0; t < j && ok; ++t)
          ok = (pat[t] < pat[j]) == (s[static_cast<size_t>(chosen[t])] < s[i]);
        if (!ok) continue;
        chosen.push_back(static_cast<int>(i));
        if (run(chosen, i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    }
  } rec{s, pw, kk};
  return rec.run(chosen, 0);
}

bool PrefixAvoider::would_contain(int v) const {
  return contains_ || ends_at(v);
}

bool PrefixAvoider::push(int x) {
  contains_ = contains_ || ends_at(x);
  if (!values_.empty()) {
    const int lo = sorted_.front();
    const int hi = sorted_.back();
    min_before_.push_back(lo);
    max_before_.push_back(hi);
    if (x > lo) agg123_ = std::min(agg123_, x);
    if (x < hi) agg321_ = std::max(agg321_, x);
    // values above/below x gain a smaller/larger successor
    auto up = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    if (up != sorted_.end()) agg213_ = std::min(agg213_, *up);
    if (up != sorted_.begin()) agg231_ = std::max(agg231_, *(up - 1));
  } else {
    min_before_.push_back(std::numeric_limits<int>::max());
    max_before_.push_back(std::numeric_limits<int>::min());
  }
  values_.push_back(x);
  sorted_.insert(std::lower_bound(sorted_.begin(), sorted_.end(), x), x);
  return contains_;
}

SetAvoider::SetAvoider(const PatternSet &pats) {
  avoiders_.reserve(pats.patterns().size());
  for (const auto &p : pats.patterns()) avoiders_.emplace_back(p);
}

bool SetAvoider::would_contain_any(int v) const {
  if (contains_) return true;
  for (const auto &a : avoiders_)
    if (a.would_contain(v)) return true;
  return false;
}

bool SetAvoider::push(int v) {
  for (auto &a : avoiders_) contains_ = a.push(v) || contains_;
  return contains_;
}

void SetAvoider::reset() {
  contains_ = false;
  for (auto &a : avoiders_) a.reset();
}

}  // namespace cycperm
