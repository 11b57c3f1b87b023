#ifndef CYCPERM_CONSTRUCTIONS_HPP
#define CYCPERM_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patterns.hpp"
#include "perm.hpp"

namespace cycperm {

// Explicit members of A_n(sigma;tau) for the pairs where the class has a
// closed description. Each family emits the notation it is defined in.

/// (1, 2, n, 3, n-1, 4, ..., floor((n+3)/2)): the only cyclic 123-avoider
/// with pi_1 = 2. n >= 2.
CycleWord unique_123_avoider_starting_2(int n);

/// (1, n, 2, n-1, 3, n-2, ..., floor((n+2)/2)): the only cyclic 231-avoider
/// with pi_n = 2. n >= 2.
CycleWord unique_231_avoider_ending_2(int n);

/// n 3 4 ... (n-k+2) 1 2 (n-k+3) ... (n-1), k in [3, n]; together with
/// 23...n1 these make up all of A_n(132;213).
Permutation family_132_213(int n, int k);

/// 2 3 ... (k-1) n 1 k (k+1) ... (n-1), k in [2, n]; exactly A_n(321;231).
Permutation family_321_231(int n, int k);

enum class Family123_231 { a, b, c, d };

/// The four explicit cycle-word families inside A_n(123;231):
///   a: (1, k-1, 2, k-2, ..., floor((k+1)/2), n, k, n-1, k+1, ...,
///      floor((n+k)/2)), k in [3, n-1] (position of n in the cycle)
///   b: (1, n, k, 2, k-1, 3, ..., floor((k+2)/2), n-1, k+1, ...,
///      floor((n+k)/2)), k in [4, n-2] (the last one-line entry)
///   c: (1, n, 3, 2, 4, n-1, 5, n-2, ..., floor((n+4)/2)), no k
///   d: (1, n, 3, 2, n-1, 4, n-2, 5, ..., floor((n+3)/2)), no k
CycleWord family_123_231(int n, Family123_231 sub, int k = 0);

/// (1, n, n-2, n-3, ..., 3, 2, n-1): the member of A_n(132;231) with
/// pi_1 = n, pi_{n-1} = 1, pi_n = n-2. n >= 5.
CycleWord family_132_231_special(int n);

/// Members of A_n(213;321) for odd n:
///   variant 1 (no k): (1, k+1, 2, k+2, 3, ..., n, k) with k = (n+1)/2
///   variant 2: (1, n-k+2, n-k+4, ..., k-1, k+1, 2, k+2, 3, ..., n,
///      n-k+1, n-k+3, ..., k-2, k) with (n+1)/2 < k < n
CycleWord family_213_321(int n, int variant, int k = 0);

/// (1, 2, ..., k-1, k+1, k+3, ..., n, k, k+2, ..., n-1): the member of
/// A_n(321;321) with pi_{n-2} = n; k in [2, n-1], opposite parity to n.
CycleWord family_321_321_penult(int n, int k);

/// Insertion lifts taken from the recursive bijections. Each rule maps a
/// member of a smaller class (checked, with the rule's side conditions) to a
/// member of a larger one.
enum class LiftRule {
  front_n_end_2,          // 2 at the end then n in front; sigma in {123,213},
                          // tau in {213,231}
  one_in_position_2,      // 1 into position 2; (213;213), witness starts max
  append_n_minus_1,       // n-1 at the end; (231;213)
  append_three,           // (n-1)(n-3)(n-2) at the end; (231;213)
  cycle_merge_insert,     // floor((n+k)/2) into cycle position n+2-k;
                          // (231;213), witness must not end with its n-2
  append_n_minus_1_231,   // n-1 at the end; (231;231)
  cycle_append_n,         // n appended to the cycle word; (132;321)
  insert_n_at_penult,     // n into position n-1; (321;321)
  insert_n_at_k_then_append,  // n at position k, then k+1 at the end;
                              // (321;321), witness has its max at k-1
  insert_after_one,       // k just after k-1 = position of 1; (213;321)
  front_2,                // 2 into position 1; (321;213)
  second_1,               // 1 into position 2; (321;213)
  prefix_2,               // graft prefix 2; (312;321)
  prefix_34,              // graft prefix 34; (312;321)
  prefix_354,             // graft prefix 354; (312;321)
  prefix_435,             // graft prefix 435; (312;321)
  prefix_4365,            // graft prefix 4365; (312;321)
};

/// Lift the witness through the named rule. Throws NotAMemberError when the
/// witness is not in the rule's source class or a side condition fails, and
/// InvalidArgumentError when (sigma, tau) is outside the rule's scope.
Permutation lift(LiftRule rule, const Pattern &sigma, const Pattern &tau,
                 const Permutation &witness);

std::optional<LiftRule> lift_rule_from_name(std::string_view name);
std::string_view lift_rule_name(LiftRule rule);

struct FamilySpec {
  std::string_view id;
  bool has_k;
};

/// Family ids accepted by construct().
std::vector<FamilySpec> family_specs();

struct Constructed {
  Permutation one_line;
  CycleWord cycle;
};

/// Evaluate a family by textual id ("132-213", "123-231-a", ...).
Constructed construct(std::string_view family, int n, std::optional<int> k);

}  // namespace cycperm

#endif
