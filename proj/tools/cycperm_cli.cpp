// cycperm CLI: exhaustive enumeration, closed-form tables, verification,
// conjecture checks and constructive families for cyclic permutations
// avoiding one pattern in one-line notation and another in cycle notation.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage error,
//             3 resource limit, 4 OEIS data unavailable.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cycperm/cycperm.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitOeis = 4;

int exit_code_for(cycperm_status s) {
  switch (s) {
    case CYCPERM_OK: return kExitOk;
    case CYCPERM_ERR_RESOURCE_LIMIT: return kExitResource;
    case CYCPERM_ERR_OEIS_UNAVAILABLE: return kExitOeis;
    default: return kExitUsage;
  }
}

[[noreturn]] void die(cycperm_status s) {
  std::fprintf(stderr, "error: %s: %s\n", cycperm_status_name(s),
               cycperm_last_error());
  std::exit(exit_code_for(s));
}

void check(cycperm_status s) {
  if (s != CYCPERM_OK) die(s);
}

struct GlobalOpts {
  std::string format = "text";
  bool quiet_timing = false;
};

std::string csv_escape(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

struct RowView {
  std::string sigma, tau;
  int n = 0;
  std::optional<long long> brute, formula, recurrence;
  bool match = true;
  double elapsed_ms = 0;
};

RowView to_view(const cycperm_row &row, bool quiet_timing) {
  RowView v;
  v.sigma = row.sigma;
  v.tau = row.tau;
  v.n = row.n;
  if (row.has_brute) v.brute = row.brute;
  if (row.has_formula) v.formula = row.formula;
  if (row.has_recurrence) v.recurrence = row.recurrence;
  v.match = row.match != 0;
  v.elapsed_ms = quiet_timing ? 0.0 : row.elapsed_ms;
  return v;
}

void print_rows(const std::vector<RowView> &rows, const GlobalOpts &g) {
  auto opt_str = [](const std::optional<long long> &v) {
    return v ? std::to_string(*v) : std::string();
  };
  if (g.format == "json") {
    json out;
    out["rows"] = json::array();
    for (const auto &r : rows) {
      json j{{"sigma", r.sigma},       {"tau", r.tau}, {"n", r.n},
             {"brute", nullptr},       {"formula", nullptr},
             {"recurrence", nullptr},  {"match", r.match},
             {"elapsed_ms", r.elapsed_ms}};
      if (r.brute) j["brute"] = *r.brute;
      if (r.formula) j["formula"] = *r.formula;
      if (r.recurrence) j["recurrence"] = *r.recurrence;
      out["rows"].push_back(std::move(j));
    }
    std::printf("%s\n", out.dump(2).c_str());
  } else if (g.format == "csv") {
    std::printf("sigma,tau,n,brute,formula,recurrence,match,elapsed_ms\n");
    for (const auto &r : rows)
      std::printf("%s,%s,%d,%s,%s,%s,%s,%.0f\n", csv_escape(r.sigma).c_str(),
                  csv_escape(r.tau).c_str(), r.n, opt_str(r.brute).c_str(),
                  opt_str(r.formula).c_str(), opt_str(r.recurrence).c_str(),
                  r.match ? "true" : "false", r.elapsed_ms);
  } else {
    std::printf("%-12s %-6s %3s %12s %12s %12s %-6s\n", "sigma", "tau", "n",
                "brute", "formula", "recurrence", "match");
    for (const auto &r : rows)
      std::printf("%-12s %-6s %3d %12s %12s %12s %-6s\n", r.sigma.c_str(),
                  r.tau.c_str(), r.n, opt_str(r.brute).c_str(),
                  opt_str(r.formula).c_str(), opt_str(r.recurrence).c_str(),
                  r.match ? "yes" : "NO");
  }
}

std::vector<RowView> collect_rows(cycperm_rows *rows, bool quiet_timing) {
  std::vector<RowView> out;
  const size_t count = cycperm_rows_size(rows);
  for (size_t i = 0; i < count; ++i) {
    cycperm_row row;
    check(cycperm_rows_get(rows, i, &row));
    out.push_back(to_view(row, quiet_timing));
  }
  return out;
}

// "231:213,312:231" -> list of pairs; empty input means all 36
std::vector<std::pair<std::string, std::string>> parse_pairs(
    const std::string &text) {
  std::vector<std::pair<std::string, std::string>> out;
  if (text.empty()) {
    const int total = cycperm_formula_table_size();
    for (int i = 0; i < total; ++i) {
      cycperm_formula_info info;
      check(cycperm_formula_entry(i, &info));
      out.emplace_back(info.sigma, info.tau);
    }
    return out;
  }
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string tok = text.substr(start, end - start);
    const size_t colon = tok.find(':');
    if (colon == std::string::npos) {
      std::fprintf(stderr, "error: bad pair '%s' (expected sigma:tau)\n",
                   tok.c_str());
      std::exit(kExitUsage);
    }
    out.emplace_back(tok.substr(0, colon), tok.substr(colon + 1));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string default_cache_dir(const std::string &flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char *env = std::getenv("CYCPERM_CACHE_DIR")) return env;
  if (const char *home = std::getenv("HOME"))
    return std::string(home) + "/.cache/cycperm/oeis";
  return ".cycperm-cache";
}

// ---- enumerate -------------------------------------------------------------

int cmd_enumerate(const GlobalOpts &g, const std::string &sigma,
                  const std::string &tau, int n, bool list,
                  const std::vector<std::string> &constraints, bool no_prune,
                  long long limit, int threads, long long budget) {
  std::vector<int> cpos, cval;
  for (const auto &c : constraints) {
    const size_t eq = c.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "error: bad constraint '%s' (expected pos=val)\n",
                   c.c_str());
      return kExitUsage;
    }
    cpos.push_back(std::atoi(c.substr(0, eq).c_str()));
    cval.push_back(std::atoi(c.substr(eq + 1).c_str()));
  }

  cycperm_enum_options opts;
  cycperm_enum_options_init(&opts);
  opts.prune = no_prune ? 0 : 1;
  opts.threads = threads;
  opts.collect_members = list ? 1 : 0;
  if (limit > 0) opts.member_limit = limit;
  if (budget > 0) opts.node_budget = budget;
  opts.constraint_positions = cpos.data();
  opts.constraint_values = cval.data();
  opts.num_constraints = cpos.size();

  cycperm_result *r = nullptr;
  check(cycperm_enumerate(sigma.c_str(), tau.c_str(), n, &opts, &r));

  std::vector<std::string> members;
  const size_t count = cycperm_result_num_members(r);
  for (size_t i = 0; i < count; ++i) {
    char buf[512];
    check(cycperm_result_member(r, i, buf, sizeof buf));
    members.emplace_back(buf);
  }

  if (g.format == "json") {
    json out{{"sigma", sigma},
             {"tau", tau},
             {"n", n},
             {"count", cycperm_result_count(r)},
             {"nodes_visited", cycperm_result_nodes(r)},
             {"truncated", cycperm_result_truncated(r) != 0}};
    if (!g.quiet_timing) out["elapsed_ms"] = cycperm_result_elapsed_ms(r);
    if (list) out["members"] = members;
    std::printf("%s\n", out.dump(2).c_str());
  } else if (g.format == "csv") {
    if (list) {
      std::printf("sigma,tau,n,member\n");
      for (const auto &m : members)
        std::printf("%s,%s,%d,%s\n", csv_escape(sigma).c_str(),
                    csv_escape(tau).c_str(), n, m.c_str());
    } else {
      std::printf("sigma,tau,n,count\n%s,%s,%d,%lld\n",
                  csv_escape(sigma).c_str(), csv_escape(tau).c_str(), n,
                  static_cast<long long>(cycperm_result_count(r)));
    }
  } else {
    if (list) {
      for (const auto &m : members) std::printf("%s\n", m.c_str());
      if (cycperm_result_truncated(r))
        std::fprintf(stderr, "note: member list truncated at %zu\n",
                     members.size());
    } else {
      std::printf("%lld\n", static_cast<long long>(cycperm_result_count(r)));
    }
    if (!g.quiet_timing)
      std::fprintf(stderr, "# %lld nodes, %.2f ms\n",
                   static_cast<long long>(cycperm_result_nodes(r)),
                   cycperm_result_elapsed_ms(r));
  }
  cycperm_result_free(r);
  return kExitOk;
}

// ---- table -----------------------------------------------------------------

int cmd_describe(const GlobalOpts &g) {
  const int total = cycperm_formula_table_size();
  std::vector<cycperm_formula_info> entries(static_cast<size_t>(total));
  for (int i = 0; i < total; ++i)
    check(cycperm_formula_entry(i, &entries[static_cast<size_t>(i)]));

  if (g.format == "json") {
    json out;
    out["rows"] = json::array();
    for (const auto &e : entries)
      out["rows"].push_back(json{{"sigma", e.sigma},
                                 {"tau", e.tau},
                                 {"valid_from", e.valid_from},
                                 {"oeis_id", e.oeis_id},
                                 {"transform", e.transform},
                                 {"formula_description", e.description}});
    std::printf("%s\n", out.dump(2).c_str());
  } else if (g.format == "csv") {
    std::printf("sigma,tau,valid_from,oeis_id,transform,formula_description\n");
    for (const auto &e : entries)
      std::printf("%s,%s,%d,%s,%s,%s\n", e.sigma, e.tau, e.valid_from,
                  csv_escape(e.oeis_id).c_str(),
                  csv_escape(e.transform).c_str(),
                  csv_escape(e.description).c_str());
  } else {
    for (const auto &e : entries)
      std::printf("%s;%s  n>=%d  %s  [%s]\n", e.sigma, e.tau, e.valid_from,
                  e.description, e.oeis_id);
  }
  return kExitOk;
}

int cmd_table(const GlobalOpts &g, int max_n, const std::string &pairs_text) {
  const auto pairs = parse_pairs(pairs_text);
  struct Cell {
    std::string sigma, tau;
    int n;
    long long value;
    bool from_formula;
  };
  std::vector<Cell> cells;
  for (const auto &[s, t] : pairs)
    for (int n = 1; n <= max_n; ++n) {
      int64_t value = 0;
      int from_formula = 0;
      check(cycperm_closed_form(s.c_str(), t.c_str(), n, &value, &from_formula));
      cells.push_back({s, t, n, static_cast<long long>(value),
                       from_formula != 0});
    }

  if (g.format == "json") {
    json out;
    out["rows"] = json::array();
    for (const auto &c : cells)
      out["rows"].push_back(json{{"sigma", c.sigma},
                                 {"tau", c.tau},
                                 {"n", c.n},
                                 {"value", c.value},
                                 {"source", c.from_formula ? "formula" : "oracle"}});
    std::printf("%s\n", out.dump(2).c_str());
  } else if (g.format == "csv") {
    std::printf("sigma,tau,n,value,source\n");
    for (const auto &c : cells)
      std::printf("%s,%s,%d,%lld,%s\n", csv_escape(c.sigma).c_str(),
                  csv_escape(c.tau).c_str(), c.n, c.value,
                  c.from_formula ? "formula" : "oracle");
  } else {
    std::printf("%-8s %-8s %3s %14s %-8s\n", "sigma", "tau", "n", "a_n",
                "source");
    for (const auto &c : cells)
      std::printf("%-8s %-8s %3d %14lld %-8s\n", c.sigma.c_str(),
                  c.tau.c_str(), c.n, c.value,
                  c.from_formula ? "formula" : "oracle");
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const GlobalOpts &g, int max_n, const std::string &pairs_text,
               bool oeis, const std::string &cache_flag, int threads) {
  const auto pairs = parse_pairs(pairs_text);
  std::vector<RowView> all;
  bool all_match = true;
  for (const auto &[s, t] : pairs) {
    cycperm_rows *rows = nullptr;
    check(cycperm_verify_pair(s.c_str(), t.c_str(), 1, max_n, threads, &rows));
    for (auto &v : collect_rows(rows, g.quiet_timing)) {
      all_match = all_match && v.match;
      all.push_back(std::move(v));
    }
    cycperm_rows_free(rows);
  }
  print_rows(all, g);

  bool oeis_unavailable = false;
  if (oeis) {
    const std::string cache = default_cache_dir(cache_flag);
    for (const auto &[s, t] : pairs) {
      char report[2048];
      int mismatch = 0, unavailable = 0;
      const auto rc = cycperm_oeis_cross_check(s.c_str(), t.c_str(), max_n,
                                               cache.c_str(), 1, &mismatch,
                                               &unavailable, report,
                                               sizeof report);
      if (rc != CYCPERM_OK) die(rc);
      std::fprintf(stderr, "oeis %s;%s:\n  %s\n", s.c_str(), t.c_str(),
                   report);
      // window mismatches fail verification; unfetchable references turn
      // into the OEIS exit code; ambiguous alignments only warn
      if (mismatch) all_match = false;
      if (unavailable) oeis_unavailable = true;
    }
  }

  if (!all_match) {
    std::fprintf(stderr, "verification FAILED:\n");
    for (const auto &r : all)
      if (!r.match)
        std::fprintf(stderr, "  %s;%s n=%d\n", r.sigma.c_str(), r.tau.c_str(),
                     r.n);
    return kExitMismatch;
  }
  if (oeis_unavailable) {
    std::fprintf(stderr, "OEIS data unavailable for some references\n");
    return kExitOeis;
  }
  if (g.format == "text")
    std::fprintf(stderr, "all %zu rows match\n", all.size());
  return kExitOk;
}

// ---- conjectures -----------------------------------------------------------

int cmd_conjectures(const GlobalOpts &g, int max_n,
                    const std::string &cache_flag, bool oeis) {
  const std::string cache = default_cache_dir(cache_flag);
  std::vector<RowView> all;
  bool agree = true;
  cycperm_status worst = CYCPERM_OK;
  for (const char *name : {"binom-n-3-plus-1", "fib-2n-3", "A087626-gf"}) {
    cycperm_rows *rows = nullptr;
    const auto rc = cycperm_conjecture_check(name, max_n, cache.c_str(),
                                             oeis ? 1 : 0, &rows);
    if (rc != CYCPERM_OK) {
      std::fprintf(stderr, "conjecture %s: %s: %s\n", name,
                   cycperm_status_name(rc), cycperm_last_error());
      worst = rc;
      continue;
    }
    for (auto &v : collect_rows(rows, g.quiet_timing)) {
      agree = agree && v.match;
      all.push_back(std::move(v));
    }
    cycperm_rows_free(rows);
  }
  print_rows(all, g);
  if (worst != CYCPERM_OK) return exit_code_for(worst);
  return agree ? kExitOk : kExitMismatch;
}

// ---- construct -------------------------------------------------------------

int cmd_construct(const GlobalOpts &g, const std::string &family, int n,
                  int k) {
  char oneline[512], cycle[512];
  check(cycperm_construct(family.c_str(), n, k, oneline, sizeof oneline, cycle,
                          sizeof cycle));
  if (g.format == "json") {
    json out{{"family", family}, {"n", n},
             {"one_line", oneline}, {"cycle", cycle}};
    if (k > 0) out["k"] = k;
    std::printf("%s\n", out.dump(2).c_str());
  } else if (g.format == "csv") {
    std::printf("family,n,k,one_line,cycle\n%s,%d,%s,%s,%s\n",
                csv_escape(family).c_str(), n,
                k > 0 ? std::to_string(k).c_str() : "", oneline,
                csv_escape(cycle).c_str());
  } else {
    std::printf("one-line: %s\ncycle:    %s\n", oneline, cycle);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"cyclic permutations avoiding a pattern in one-line notation "
               "and another in standard cycle notation"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_flag("--quiet-timing", g.quiet_timing,
               "zero out timing fields for reproducible output");

  // enumerate
  auto *enumerate = app.add_subcommand(
      "enumerate", "count or list A_n(sigma;tau) by exhaustive search");
  enumerate->fallthrough();
  std::string sigma, tau;
  int n = 0;
  bool list = false, no_prune = false;
  std::vector<std::string> constraints;
  long long limit = 0, budget = 0;
  int threads = 1;
  enumerate->add_option("--n", n, "permutation length")->required();
  enumerate->add_option("--sigma", sigma, "one-line pattern(s)")->required();
  enumerate->add_option("--tau", tau, "cycle-word pattern(s)")->required();
  enumerate->add_flag("--list", list, "list the members");
  enumerate->add_option("--constraint", constraints,
                        "pos=val filter on the one-line word (repeatable)");
  enumerate->add_flag("--no-prune", no_prune, "disable cycle-word pruning");
  enumerate->add_option("--limit", limit, "cap on listed members");
  enumerate->add_option("--threads", threads, "worker threads");
  enumerate->add_option("--budget", budget, "search-node budget");

  // table
  auto *table = app.add_subcommand("table", "a_n values with their source");
  table->fallthrough();
  int table_max_n = 8;
  std::string pairs_text;
  bool describe = false;
  table->add_option("--max-n", table_max_n, "largest n")->capture_default_str();
  table->add_option("--pairs", pairs_text,
                    "sigma:tau list, e.g. 231:213,312:231 (default all 36)");
  table->add_flag("--describe", describe,
                  "emit the formula table itself (validity, OEIS ids)");

  // verify
  auto *verify = app.add_subcommand(
      "verify", "brute force vs closed forms vs recurrences");
  verify->fallthrough();
  int verify_max_n = 9;
  std::string verify_pairs, cache_dir;
  bool oeis = false;
  int verify_threads = 1;
  verify->add_option("--max-n", verify_max_n, "largest n")
      ->capture_default_str();
  verify->add_option("--pairs", verify_pairs, "sigma:tau list (default all 36)");
  verify->add_flag("--oeis", oeis, "cross-check against OEIS b-files");
  verify->add_option("--cache-dir", cache_dir, "OEIS cache directory");
  verify->add_option("--threads", verify_threads, "worker threads");

  // conjectures
  auto *conjectures = app.add_subcommand(
      "conjectures", "long-pattern conjecture checks");
  conjectures->fallthrough();
  int conj_max_n = 9;
  std::string conj_cache;
  bool conj_oeis = false;
  conjectures->add_option("--max-n", conj_max_n, "largest n")
      ->capture_default_str();
  conjectures->add_option("--cache-dir", conj_cache, "OEIS cache directory");
  conjectures->add_flag("--oeis", conj_oeis, "allow network fetches");

  // construct
  auto *construct = app.add_subcommand(
      "construct", "evaluate an explicit permutation family");
  construct->fallthrough();
  std::string family;
  int cn = 0, ck = 0;
  construct->add_option("--family", family, "family id")->required();
  construct->add_option("--n", cn, "permutation length")->required();
  construct->add_option("--k", ck, "family parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  if (enumerate->parsed())
    return cmd_enumerate(g, sigma, tau, n, list, constraints, no_prune, limit,
                         threads, budget);
  if (table->parsed())
    return describe ? cmd_describe(g) : cmd_table(g, table_max_n, pairs_text);
  if (verify->parsed())
    return cmd_verify(g, verify_max_n, verify_pairs, oeis, cache_dir,
                      verify_threads);
  if (conjectures->parsed())
    return cmd_conjectures(g, conj_max_n, conj_cache, conj_oeis);
  if (construct->parsed()) return cmd_construct(g, family, cn, ck);
  return kExitUsage;
}
