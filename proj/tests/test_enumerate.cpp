#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "enumerate.hpp"
#include "errors.hpp"

using namespace cycperm;

namespace {

PairQuery query(const char *sigma, const char *tau, int n, bool list = false) {
  return PairQuery{parse_pattern_set(sigma), parse_pattern_set(tau), n, list};
}

std::vector<std::string> member_strings(const EnumerationResult &r) {
  std::vector<std::string> out;
  for (const auto &m : *r.members) out.push_back(to_string(m));
  return out;
}

}  // namespace

TEST_CASE("generate_cyclic") {
  std::vector<CycleWord> words;
  generate_cyclic(3, [&](const CycleWord &c) { words.push_back(c); });
  REQUIRE(words.size() == 2);
  CHECK(words[0] == parse_cycle("(1,2,3)"));
  CHECK(words[1] == parse_cycle("(1,3,2)"));

  words.clear();
  generate_cyclic(4, [&](const CycleWord &c) { words.push_back(c); });
  CHECK(words.size() == 6);
  CHECK(std::is_sorted(words.begin(), words.end()));

  words.clear();
  generate_cyclic(1, [&](const CycleWord &c) { words.push_back(c); });
  REQUIRE(words.size() == 1);
  CHECK(words[0] == parse_cycle("(1)"));

  CHECK_THROWS_AS(generate_cyclic(12, [](const CycleWord &) {}, 1000),
                  ResourceLimitError);
}

TEST_CASE("brute force counts") {
  CHECK(brute_force(query("213", "213", 7)).count == 13);
  CHECK(brute_force(query("231", "213", 7)).count == 12);
  CHECK(brute_force(query("123", "213", 9)).count == 6);
  CHECK(brute_force(query("123", "123", 1)).count == 1);
}

TEST_CASE("brute force membership examples") {
  auto r = brute_force(query("132", "213", 7, true));
  CHECK(member_strings(r) == std::vector<std::string>{"2345671", "7123456",
                                                      "7312456", "7341256",
                                                      "7345126", "7345612"});

  auto in_members = [](const EnumerationResult &res, const char *text) {
    const Permutation p = parse_permutation(text);
    return std::find(res.members->begin(), res.members->end(), p) !=
           res.members->end();
  };
  auto r2 = brute_force(query("132", "231", 7, true));
  CHECK(in_members(r2, "7341256"));

  auto r3 = brute_force(query("123", "213", 7, true));
  CHECK(member_strings(r3) == std::vector<std::string>{"2765143", "7365142",
                                                       "7541632", "7645132",
                                                       "7651432"});

  auto r4 = brute_force(query("231", "213", 6, true));
  CHECK(member_strings(r4) == std::vector<std::string>{"612345", "612534",
                                                       "614235", "615243",
                                                       "631245", "641325",
                                                       "654132"});
}

TEST_CASE("filtered enumeration") {
  CHECK(brute_force_filtered(query("123", "213", 8), {{1, 8}}).count == 4);
  CHECK(brute_force_filtered(query("213", "213", 6), {{1, 6}}).count == 7);
  CHECK(brute_force_filtered(query("132", "213", 7), {{1, 7}}).count == 5);
  CHECK_THROWS_AS(brute_force_filtered(query("132", "213", 7), {{8, 1}}),
                  OutOfRangeError);
}

TEST_CASE("pruned and unpruned searches agree, n <= 7") {
  const std::array<const char *, 6> s3 = {"123", "132", "213",
                                          "231", "312", "321"};
  EnumOptions plain;
  EnumOptions unpruned;
  unpruned.prune = false;
  for (int n = 1; n <= 7; ++n)
    for (const char *s : s3)
      for (const char *t : s3) {
        const auto q = query(s, t, n);
        CHECK(brute_force(q, plain).count == brute_force(q, unpruned).count);
      }
}

TEST_CASE("parallel equals sequential") {
  EnumOptions par;
  par.threads = 4;
  for (const char *t : {"213", "321"}) {
    const auto q = query("231", t, 9, true);
    const auto a = brute_force(q);
    const auto b = brute_force(q, par);
    CHECK(a.count == b.count);
    CHECK(a.nodes_visited == b.nodes_visited);
    CHECK(*a.members == *b.members);
  }
}

TEST_CASE("deterministic output") {
  const auto q = query("321", "213", 8, true);
  const auto a = brute_force(q);
  const auto b = brute_force(q);
  CHECK(a.count == b.count);
  CHECK(*a.members == *b.members);
  CHECK(std::is_sorted(a.members->begin(), a.members->end()));
}

TEST_CASE("node budget") {
  EnumOptions opts;
  opts.node_budget = 10;
  CHECK_THROWS_AS(brute_force(query("123", "123", 9), opts),
                  ResourceLimitError);
}

TEST_CASE("member limit truncation") {
  EnumOptions opts;
  opts.member_limit = 3;
  const auto r = brute_force(query("132", "213", 7, true), opts);
  CHECK(r.count == 6);
  CHECK(r.members->size() == 3);
  CHECK(r.truncated);
}

TEST_CASE("unique cycle-side witnesses for tau in {123,132}") {
  // sigma never matches: a pattern longer than the word is never contained
  const char *free_sigma = "123456789";
  for (int n = 4; n <= 8; ++n) {
    auto r123 = brute_force(query(free_sigma, "123", n, true));
    REQUIRE(r123.count == 1);
    std::vector<int> w{n};
    for (int v = 1; v < n; ++v) w.push_back(v);
    CHECK((*r123.members)[0] == Permutation(w));  // n123...(n-1)

    auto r132 = brute_force(query(free_sigma, "132", n, true));
    REQUIRE(r132.count == 1);
    std::vector<int> u;
    for (int v = 2; v <= n; ++v) u.push_back(v);
    u.push_back(1);
    CHECK((*r132.members)[0] == Permutation(u));  // 23...n1
  }
}

TEST_CASE("nodes are charged against the budget") {
  const auto r = brute_force(query("123", "213", 6));
  CHECK(r.nodes_visited > 0);
  CHECK(r.count == 4);
}
