#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "cycperm/cycperm.h"

namespace {

std::string buf_call(cycperm_status (*fn)(const char *, char *, size_t),
                     const char *arg) {
  char buf[256];
  REQUIRE(fn(arg, buf, sizeof buf) == CYCPERM_OK);
  return buf;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(cycperm_version()) == "1.0.0");
  CHECK(std::string(cycperm_status_name(CYCPERM_OK)) == "ok");
  CHECK(std::string(cycperm_status_name(CYCPERM_ERR_PARSE)) == "parse error");
}

TEST_CASE("permutation word utilities") {
  CHECK(buf_call(cycperm_to_cycle, "46152837") == "(1,4,5,2,6,8,7,3)");
  CHECK(buf_call(cycperm_from_cycle, "(1,4,5,2,6,8,7,3)") == "46152837");

  int flag = -1;
  REQUIRE(cycperm_is_cyclic("46152837", &flag) == CYCPERM_OK);
  CHECK(flag == 1);
  REQUIRE(cycperm_is_cyclic("12", &flag) == CYCPERM_OK);
  CHECK(flag == 0);

  char buf[64];
  REQUIRE(cycperm_symmetry("4763125", "inverse", buf, sizeof buf) == CYCPERM_OK);
  CHECK(std::string(buf) == "5641732");
  REQUIRE(cycperm_symmetry("4763125", "rci", buf, sizeof buf) == CYCPERM_OK);
  CHECK(std::string(buf) == "6517423");
  CHECK(cycperm_symmetry("4763125", "bogus", buf, sizeof buf) ==
        CYCPERM_ERR_INVALID_ARGUMENT);

  REQUIRE(cycperm_avoids("7341256", "132", &flag) == CYCPERM_OK);
  CHECK(flag == 1);
  REQUIRE(cycperm_avoids("(1,7,6,5,2,3,4)", "231", &flag) == CYCPERM_OK);
  CHECK(flag == 1);
  REQUIRE(cycperm_avoids("4321", "321", &flag) == CYCPERM_OK);
  CHECK(flag == 0);
  REQUIRE(cycperm_avoids("2341", "3421,4321", &flag) == CYCPERM_OK);
  CHECK(flag == 1);
}

TEST_CASE("error codes surface through the boundary") {
  char buf[64];
  CHECK(cycperm_to_cycle("12", buf, sizeof buf) == CYCPERM_ERR_NOT_CYCLIC);
  CHECK(std::strlen(cycperm_last_error()) > 0);
  CHECK(cycperm_to_cycle("1x", buf, sizeof buf) == CYCPERM_ERR_PARSE);
  char tiny[3];
  CHECK(cycperm_to_cycle("46152837", tiny, sizeof tiny) ==
        CYCPERM_ERR_BUFFER_TOO_SMALL);
  CHECK(cycperm_to_cycle(nullptr, buf, sizeof buf) ==
        CYCPERM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("enumeration through the C API") {
  cycperm_enum_options opts;
  cycperm_enum_options_init(&opts);
  opts.collect_members = 1;

  cycperm_result *r = nullptr;
  REQUIRE(cycperm_enumerate("132", "213", 7, &opts, &r) == CYCPERM_OK);
  CHECK(cycperm_result_count(r) == 6);
  CHECK(cycperm_result_nodes(r) > 0);
  CHECK(cycperm_result_truncated(r) == 0);
  REQUIRE(cycperm_result_num_members(r) == 6);
  char buf[64];
  REQUIRE(cycperm_result_member(r, 0, buf, sizeof buf) == CYCPERM_OK);
  CHECK(std::string(buf) == "2345671");
  REQUIRE(cycperm_result_member_cycle(r, 0, buf, sizeof buf) == CYCPERM_OK);
  CHECK(std::string(buf) == "(1,2,3,4,5,6,7)");
  CHECK(cycperm_result_member(r, 99, buf, sizeof buf) ==
        CYCPERM_ERR_OUT_OF_RANGE);
  cycperm_result_free(r);

  // constraints
  const int pos[] = {1};
  const int val[] = {8};
  cycperm_enum_options copts;
  cycperm_enum_options_init(&copts);
  copts.constraint_positions = pos;
  copts.constraint_values = val;
  copts.num_constraints = 1;
  REQUIRE(cycperm_enumerate("123", "213", 8, &copts, &r) == CYCPERM_OK);
  CHECK(cycperm_result_count(r) == 4);
  cycperm_result_free(r);

  // budget exhaustion maps to the resource-limit status
  cycperm_enum_options small;
  cycperm_enum_options_init(&small);
  small.node_budget = 5;
  CHECK(cycperm_enumerate("123", "123", 9, &small, &r) ==
        CYCPERM_ERR_RESOURCE_LIMIT);
  CHECK(r == nullptr);
}

TEST_CASE("closed forms and recurrences through the C API") {
  int64_t value = 0;
  int from_formula = -1;
  REQUIRE(cycperm_closed_form("213", "213", 7, &value, &from_formula) ==
          CYCPERM_OK);
  CHECK(value == 13);
  CHECK(from_formula == 1);
  REQUIRE(cycperm_closed_form("123", "213", 3, &value, &from_formula) ==
          CYCPERM_OK);
  CHECK(from_formula == 0);
  CHECK(cycperm_closed_form("1234", "213", 3, &value, &from_formula) ==
        CYCPERM_ERR_OUT_OF_RANGE);

  REQUIRE(cycperm_fibonacci(7, &value) == CYCPERM_OK);
  CHECK(value == 13);
  CHECK(cycperm_fibonacci(0, &value) == CYCPERM_ERR_OUT_OF_RANGE);
  REQUIRE(cycperm_binomial(5, 2, &value) == CYCPERM_OK);
  CHECK(value == 10);

  CHECK(cycperm_formula_table_size() == 36);
  cycperm_formula_info info;
  REQUIRE(cycperm_formula_entry(0, &info) == CYCPERM_OK);
  CHECK(info.valid_from >= 1);
  CHECK(cycperm_formula_entry(36, &info) == CYCPERM_ERR_OUT_OF_RANGE);

  int64_t terms[32];
  size_t count = 0;
  int first_n = 0;
  REQUIRE(cycperm_recurrence_seq("231", "213", 7, terms, 32, &count,
                                 &first_n) == CYCPERM_OK);
  CHECK(first_n == 1);
  CHECK(count == 7);
  CHECK(terms[6] == 12);
  CHECK(cycperm_recurrence_seq("132", "213", 7, terms, 32, &count, &first_n) ==
        CYCPERM_ERR_NO_RECURRENCE);
}

TEST_CASE("verification rows through the C API") {
  cycperm_rows *rows = nullptr;
  REQUIRE(cycperm_verify_pair("213", "231", 1, 8, 1, &rows) == CYCPERM_OK);
  REQUIRE(cycperm_rows_size(rows) == 8);
  cycperm_row row;
  REQUIRE(cycperm_rows_get(rows, 5, &row) == CYCPERM_OK);
  CHECK(std::string(row.sigma) == "213");
  CHECK(row.n == 6);
  CHECK(row.has_brute == 1);
  CHECK(row.brute == 9);
  CHECK(row.match == 1);
  CHECK(cycperm_rows_get(rows, 8, &row) == CYCPERM_ERR_OUT_OF_RANGE);
  cycperm_rows_free(rows);

  REQUIRE(cycperm_conjecture_check("fib-2n-3", 6, nullptr, 0, &rows) ==
          CYCPERM_OK);
  REQUIRE(cycperm_rows_size(rows) == 6);
  REQUIRE(cycperm_rows_get(rows, 5, &row) == CYCPERM_OK);
  CHECK(row.brute == 34);
  CHECK(row.formula == 34);
  CHECK(row.match == 1);
  cycperm_rows_free(rows);

  // the gf conjecture needs OEIS data
  CHECK(cycperm_conjecture_check("A087626-gf", 6, "/nonexistent-cache", 0,
                                 &rows) == CYCPERM_ERR_OEIS_UNAVAILABLE);
  const std::string cache = std::string(CYCPERM_TEST_DATA_DIR) + "/oeis";
  REQUIRE(cycperm_conjecture_check("A087626-gf", 6, cache.c_str(), 0, &rows) ==
          CYCPERM_OK);
  REQUIRE(cycperm_rows_get(rows, 5, &row) == CYCPERM_OK);
  CHECK(row.brute == 36);
  CHECK(row.formula == 36);
  cycperm_rows_free(rows);
}

TEST_CASE("constructions and lifts through the C API") {
  char one[64], cyc[64];
  REQUIRE(cycperm_construct("132-213", 7, 5, one, sizeof one, cyc, sizeof cyc) ==
          CYCPERM_OK);
  CHECK(std::string(one) == "7341256");
  CHECK(std::string(cyc) == "(1,7,6,5,2,3,4)");
  CHECK(cycperm_construct("132-213", 7, 0, one, sizeof one, cyc, sizeof cyc) ==
        CYCPERM_ERR_OUT_OF_RANGE);
  CHECK(cycperm_construct("no-such", 7, 0, one, sizeof one, cyc, sizeof cyc) ==
        CYCPERM_ERR_INVALID_ARGUMENT);

  char out[64];
  REQUIRE(cycperm_lift("front-n-end-2", "213", "213", "23451", out,
                       sizeof out) == CYCPERM_OK);
  CHECK(std::string(out) == "7345612");
  CHECK(cycperm_lift("front-n-end-2", "213", "213", "2413", out, sizeof out) ==
        CYCPERM_ERR_NOT_A_MEMBER);
  CHECK(cycperm_lift("nonsense", "213", "213", "23451", out, sizeof out) ==
        CYCPERM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("oeis windows through the C API") {
  const std::string cache = std::string(CYCPERM_TEST_DATA_DIR) + "/oeis";
  cycperm_oeis *seq = nullptr;
  REQUIRE(cycperm_oeis_fetch("A087626", cache.c_str(), 0, 0, &seq) ==
          CYCPERM_OK);
  CHECK(cycperm_oeis_first_index(seq) == 1);
  REQUIRE(cycperm_oeis_size(seq) == 25);
  int64_t term = 0;
  REQUIRE(cycperm_oeis_term(seq, 2, &term) == CYCPERM_OK);
  CHECK(term == 5);
  CHECK(cycperm_oeis_term(seq, 300, &term) == CYCPERM_ERR_OUT_OF_RANGE);
  cycperm_oeis_free(seq);

  CHECK(cycperm_oeis_fetch("A999999", "/nonexistent", 0, 0, &seq) ==
        CYCPERM_ERR_OEIS_UNAVAILABLE);
}
