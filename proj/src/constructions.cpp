#include "constructions.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cycperm {

namespace {

// Interleave hi, lo, hi-1, lo+1, ... onto out until the range [lo, hi] is
// exhausted, starting from the high end.
void zigzag_high_first(std::vector<int> &out, int hi, int lo) {
  bool take_high = true;
  while (lo <= hi) {
    if (take_high)
      out.push_back(hi--);
    else
      out.push_back(lo++);
    take_high = !take_high;
  }
}

// Same but starting from the low end.
void zigzag_low_first(std::vector<int> &out, int lo, int hi) {
  bool take_low = true;
  while (lo <= hi) {
    if (take_low)
      out.push_back(lo++);
    else
      out.push_back(hi--);
    take_low = !take_low;
  }
}

void require(bool cond, const char *msg) {
  if (!cond) throw OutOfRangeError(msg);
}

Permutation check_member(Permutation p, const Pattern &sigma,
                         const Pattern &tau, const char *who) {
#ifndef NDEBUG
  // one-line constructors verify their output in debug builds
  if (!is_cyclic(p) || contains(p.word(), sigma) ||
      contains(standard_cycle(p).entries(), tau))
    throw Error(CYCPERM_ERR_INTERNAL,
                std::string(who) + " produced a non-member");
#else
  (void)sigma;
  (void)tau;
  (void)who;
#endif
  return p;
}

}  // namespace

CycleWord unique_123_avoider_starting_2(int n) {
  require(n >= 2, "needs n >= 2");
  std::vector<int> c{1, 2};
  zigzag_high_first(c, n, 3);
  return CycleWord(std::move(c));
}

CycleWord unique_231_avoider_ending_2(int n) {
  require(n >= 2, "needs n >= 2");
  std::vector<int> c{1};
  zigzag_high_first(c, n, 2);
  return CycleWord(std::move(c));
}

Permutation family_132_213(int n, int k) {
  require(n >= 3, "needs n >= 3");
  require(k >= 3 && k <= n, "k must be in [3, n]");
  std::vector<int> w{n};
  for (int v = 3; v <= n - k + 2; ++v) w.push_back(v);
  w.push_back(1);
  w.push_back(2);
  for (int v = n - k + 3; v <= n - 1; ++v) w.push_back(v);
  return check_member(Permutation(std::move(w)), Pattern("132"),
                      Pattern("213"), "family_132_213");
}

Permutation family_321_231(int n, int k) {
  require(n >= 2, "needs n >= 2");
  require(k >= 2 && k <= n, "k must be in [2, n]");
  std::vector<int> w;
  for (int v = 2; v <= k - 1; ++v) w.push_back(v);
  w.push_back(n);
  w.push_back(1);
  for (int v = k; v <= n - 1; ++v) w.push_back(v);
  return check_member(Permutation(std::move(w)), Pattern("321"),
                      Pattern("231"), "family_321_231");
}

CycleWord family_123_231(int n, Family123_231 sub, int k) {
  std::vector<int> c{1};
  switch (sub) {
    case Family123_231::a:
      require(n >= 4, "needs n >= 4");
      require(k >= 3 && k <= n - 1, "k must be in [3, n-1]");
      zigzag_high_first(c, k - 1, 2);
      c.push_back(n);
      zigzag_low_first(c, k, n - 1);
      break;
    case Family123_231::b:
      require(n >= 6, "needs n >= 6");
      require(k >= 4 && k <= n - 2, "k must be in [4, n-2]");
      c.push_back(n);
      c.push_back(k);
      zigzag_low_first(c, 2, k - 1);
      zigzag_high_first(c, n - 1, k + 1);
      break;
    case Family123_231::c:
      require(n >= 5, "needs n >= 5");
      require(k == 0, "family takes no k");
      c.insert(c.end(), {n, 3, 2, 4});
      zigzag_high_first(c, n - 1, 5);
      break;
    case Family123_231::d:
      require(n >= 5, "needs n >= 5");
      require(k == 0, "family takes no k");
      c.insert(c.end(), {n, 3, 2});
      zigzag_high_first(c, n - 1, 4);
      break;
  }
  return CycleWord(std::move(c));
}

CycleWord family_132_231_special(int n) {
  require(n >= 5, "needs n >= 5");
  std::vector<int> c{1, n};
  for (int v = n - 2; v >= 2; --v) c.push_back(v);
  c.push_back(n - 1);
  return CycleWord(std::move(c));
}

CycleWord family_213_321(int n, int variant, int k) {
  require(n >= 3, "needs n >= 3");
  require(n % 2 == 1, "no such family for even n");
  std::vector<int> c{1};
  if (variant == 1) {
    require(k == 0, "variant 1 takes no k");
    // pairs (mid+i, 1+i) end at (n, mid) since mid = n - mid + 1
    const int mid = (n + 1) / 2;
    for (int i = 1; i <= n - mid; ++i) {
      c.push_back(mid + i);
      c.push_back(1 + i);
    }
  } else if (variant == 2) {
    require(k > (n + 1) / 2 && k < n, "k must satisfy (n+1)/2 < k < n");
    for (int v = n - k + 2; v <= k - 1; v += 2) c.push_back(v);
    for (int i = 1; i <= n - k; ++i) {
      c.push_back(k + i);
      c.push_back(1 + i);
    }
    for (int v = n - k + 3; v <= k - 2; v += 2) c.push_back(v);
    c.push_back(k);
  } else {
    throw OutOfRangeError("variant must be 1 or 2");
  }
  return CycleWord(std::move(c));
}

CycleWord family_321_321_penult(int n, int k) {
  require(n >= 4, "needs n >= 4");
  require(k >= 2 && k <= n - 1, "k must be in [2, n-1]");
  require(k % 2 != n % 2, "k must have parity opposite to n");
  std::vector<int> c;
  for (int v = 1; v <= k - 1; ++v) c.push_back(v);
  for (int v = k + 1; v <= n; v += 2) c.push_back(v);
  c.push_back(k);
  for (int v = k + 2; v <= n - 1; v += 2) c.push_back(v);
  return CycleWord(std::move(c));
}

// --------------------------------------------------------------------------
// lifts

namespace {

struct RuleInfo {
  LiftRule rule;
  std::string_view name;
  // allowed (sigma, tau) codes; empty means any listed pair
  std::vector<std::pair<int, int>> domain;
};

const std::vector<RuleInfo> &rule_infos() {
  static const std::vector<RuleInfo> infos = {
      {LiftRule::front_n_end_2, "front-n-end-2",
       {{123, 213}, {123, 231}, {213, 213}, {213, 231}}},
      {LiftRule::one_in_position_2, "one-in-position-2", {{213, 213}}},
      {LiftRule::append_n_minus_1, "append-n-minus-1", {{231, 213}}},
      {LiftRule::append_three, "append-three", {{231, 213}}},
      {LiftRule::cycle_merge_insert, "cycle-merge-insert", {{231, 213}}},
      {LiftRule::append_n_minus_1_231, "231-231-append", {{231, 231}}},
      {LiftRule::cycle_append_n, "132-321-cycle-append", {{132, 321}}},
      {LiftRule::insert_n_at_penult, "321-321-penult-insert", {{321, 321}}},
      {LiftRule::insert_n_at_k_then_append, "321-321-insert-append",
       {{321, 321}}},
      {LiftRule::insert_after_one, "213-321-successor", {{213, 321}}},
      {LiftRule::front_2, "321-213-front-2", {{321, 213}}},
      {LiftRule::second_1, "321-213-second-1", {{321, 213}}},
      {LiftRule::prefix_2, "312-321-prefix-2", {{312, 321}}},
      {LiftRule::prefix_34, "312-321-prefix-34", {{312, 321}}},
      {LiftRule::prefix_354, "312-321-prefix-354", {{312, 321}}},
      {LiftRule::prefix_435, "312-321-prefix-435", {{312, 321}}},
      {LiftRule::prefix_4365, "312-321-prefix-4365", {{312, 321}}},
  };
  return infos;
}

int pat_code(const Pattern &p) {
  int code = 0;
  for (int v : p.word()) code = code * 10 + v;
  return code;
}

void check_witness(const Permutation &w, const Pattern &sigma,
                   const Pattern &tau) {
  if (!is_cyclic(w)) throw NotAMemberError("witness is not cyclic");
  if (contains(w.word(), sigma))
    throw NotAMemberError("witness contains sigma in one-line form");
  if (contains(standard_cycle(w).entries(), tau))
    throw NotAMemberError("witness cycle word contains tau");
}

int position_of(const Permutation &p, int value) {
  for (int i = 1; i <= p.size(); ++i)
    if (p.at(i) == value) return i;
  throw OutOfRangeError("value not present");
}

// prefix graft: result = prefix ++ (v >= shift_min ? v + amount : v)
Permutation graft(const Permutation &p, std::initializer_list<int> prefix,
                  int shift_min, int amount) {
  std::vector<int> w(prefix);
  for (int v : p.word()) w.push_back(v >= shift_min ? v + amount : v);
  return Permutation(std::move(w));
}

// value-shifting insertion applied to the cycle word as a plain sequence
CycleWord cycle_insert(const CycleWord &c, int pos, int value) {
  const int n = c.size();
  if (pos < 1 || pos > n + 1 || value < 1 || value > n + 1)
    throw OutOfRangeError("cycle insertion out of range");
  std::vector<int> seq;
  seq.reserve(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    if (i == pos) seq.push_back(value);
    const int v = c.at(i);
    seq.push_back(v >= value ? v + 1 : v);
  }
  if (pos == n + 1) seq.push_back(value);
  return CycleWord(std::move(seq));
}

}  // namespace

Permutation lift(LiftRule rule, const Pattern &sigma, const Pattern &tau,
                 const Permutation &witness) {
  const auto &infos = rule_infos();
  const auto info = std::find_if(infos.begin(), infos.end(),
                                 [&](const RuleInfo &r) { return r.rule == rule; });
  if (info == infos.end()) throw InvalidArgumentError("unknown lift rule");
  const std::pair<int, int> pair{pat_code(sigma), pat_code(tau)};
  if (std::find(info->domain.begin(), info->domain.end(), pair) ==
      info->domain.end())
    throw InvalidArgumentError("pattern pair outside the rule's scope");
  check_witness(witness, sigma, tau);

  const int m = witness.size();
  switch (rule) {
    case LiftRule::front_n_end_2:
      // 2 at the end, then the new maximum in front
      return insert_at(insert_at(witness, m + 1, 2), 1, m + 2);
    case LiftRule::one_in_position_2:
      if (witness.at(1) != m)
        throw NotAMemberError("witness must start with its maximum");
      return insert_at(witness, 2, 1);
    case LiftRule::append_n_minus_1:
    case LiftRule::append_n_minus_1_231:
      return insert_at(witness, m + 1, m);
    case LiftRule::append_three: {
      // appends (n-1)(n-3)(n-2) where n = m + 3
      const Permutation s1 = insert_at(witness, m + 1, m);
      const Permutation s2 = insert_at(s1, m + 2, m + 1);
      return insert_at(s2, m + 1, m + 2);
    }
    case LiftRule::cycle_merge_insert: {
      const int k = witness.at(m);
      if (k == m - 1)
        throw NotAMemberError("witness must not end with its second-largest");
      if (k < 2 || k > m - 2)
        throw NotAMemberError("witness last entry out of range");
      const int n = m + 1;
      return from_cycle(
          cycle_insert(standard_cycle(witness), n + 2 - k, (n + k) / 2));
    }
    case LiftRule::cycle_append_n:
      return from_cycle(cycle_insert(standard_cycle(witness), m + 1, m + 1));
    case LiftRule::insert_n_at_penult:
      return insert_at(witness, m, m + 1);
    case LiftRule::insert_n_at_k_then_append: {
      const int k = position_of(witness, m) + 1;
      if (k < 2 || k > m - 1)
        throw NotAMemberError("witness maximum is too late in the word");
      // k+1 at the end first so the new maximum is not shifted
      return insert_at(insert_at(witness, m + 1, k + 1), k, m + 2);
    }
    case LiftRule::insert_after_one: {
      const int k = position_of(witness, 1) + 1;
      if (k == m + 1)
        throw NotAMemberError("witness must not end with 1");
      return insert_at(witness, k - 1, k);
    }
    case LiftRule::front_2:
      return insert_at(witness, 1, 2);
    case LiftRule::second_1:
      return insert_at(witness, 2, 1);
    case LiftRule::prefix_2:
      return graft(witness, {2}, 2, 1);
    case LiftRule::prefix_34:
      return graft(witness, {3, 4}, 3, 2);
    case LiftRule::prefix_354:
      return graft(witness, {3, 5, 4}, 3, 3);
    case LiftRule::prefix_435:
      return graft(witness, {4, 3, 5}, 3, 3);
    case LiftRule::prefix_4365:
      return graft(witness, {4, 3, 6, 5}, 3, 4);
  }
  throw InvalidArgumentError("unknown lift rule");
}

std::optional<LiftRule> lift_rule_from_name(std::string_view name) {
  for (const auto &info : rule_infos())
    if (info.name == name) return info.rule;
  return std::nullopt;
}

std::string_view lift_rule_name(LiftRule rule) {
  for (const auto &info : rule_infos())
    if (info.rule == rule) return info.name;
  return "";
}

std::vector<FamilySpec> family_specs() {
  return {
      {"123-avoider-start2", false}, {"231-avoider-end2", false},
      {"132-213", true},             {"321-231", true},
      {"123-231-a", true},           {"123-231-b", true},
      {"123-231-c", false},          {"123-231-d", false},
      {"132-231-special", false},    {"213-321-v1", false},
      {"213-321-v2", true},          {"321-321-penult", true},
  };
}

Constructed construct(std::string_view family, int n, std::optional<int> k) {
  auto need_k = [&]() {
    if (!k) throw OutOfRangeError("family requires a k parameter");
    return *k;
  };
  auto no_k = [&]() {
    if (k) throw OutOfRangeError("family takes no k parameter");
  };
  auto from_c = [](CycleWord c) {
    Permutation p = from_cycle(c);
    return Constructed{std::move(p), std::move(c)};
  };
  auto from_p = [](Permutation p) {
    CycleWord c = standard_cycle(p);
    return Constructed{std::move(p), std::move(c)};
  };

  if (family == "123-avoider-start2") {
    no_k();
    return from_c(unique_123_avoider_starting_2(n));
  }
  if (family == "231-avoider-end2") {
    no_k();
    return from_c(unique_231_avoider_ending_2(n));
  }
  if (family == "132-213") return from_p(family_132_213(n, need_k()));
  if (family == "321-231") return from_p(family_321_231(n, need_k()));
  if (family == "123-231-a")
    return from_c(family_123_231(n, Family123_231::a, need_k()));
  if (family == "123-231-b")
    return from_c(family_123_231(n, Family123_231::b, need_k()));
  if (family == "123-231-c") {
    no_k();
    return from_c(family_123_231(n, Family123_231::c));
  }
  if (family == "123-231-d") {
    no_k();
    return from_c(family_123_231(n, Family123_231::d));
  }
  if (family == "132-231-special") {
    no_k();
    return from_c(family_132_231_special(n));
  }
  if (family == "213-321-v1") {
    no_k();
    return from_c(family_213_321(n, 1));
  }
  if (family == "213-321-v2") return from_c(family_213_321(n, 2, need_k()));
  if (family == "321-321-penult")
    return from_c(family_321_321_penult(n, need_k()));
  throw InvalidArgumentError("unknown family id: " + std::string(family));
}

}  // namespace cycperm
