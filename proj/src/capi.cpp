#include "cycperm/cycperm.h"

#include <chrono>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "oeis.hpp"
#include "patterns.hpp"
#include "perm.hpp"
#include "verify.hpp"

using namespace cycperm;

struct cycperm_result {
  EnumerationResult res;
};

struct cycperm_rows {
  std::vector<VerificationRow> rows;
};

struct cycperm_oeis {
  OeisWindow window;
};

namespace {

thread_local std::string g_last_error;

cycperm_status fail(cycperm_status code, const char *what) {
  g_last_error = what ? what : "";
  return code;
}

template <typename Fn>
cycperm_status guarded(Fn &&fn) {
  try {
    fn();
    return CYCPERM_OK;
  } catch (const Error &e) {
    return fail(e.code(), e.what());
  } catch (const std::exception &e) {
    return fail(CYCPERM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CYCPERM_ERR_INTERNAL, "unknown error");
  }
}

cycperm_status copy_out(const std::string &s, char *buf, size_t buflen) {
  if (!buf || buflen < s.size() + 1)
    return fail(CYCPERM_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return CYCPERM_OK;
}

void copy_field(char *dst, size_t cap, const std::string &s) {
  const size_t len = std::min(cap - 1, s.size());
  std::memcpy(dst, s.data(), len);
  dst[len] = '\0';
}

EnumOptions to_options(const cycperm_enum_options *opts) {
  EnumOptions o;
  if (!opts) return o;
  o.prune = opts->prune != 0;
  o.threads = opts->threads;
  if (opts->node_budget > 0) o.node_budget = opts->node_budget;
  if (opts->member_limit > 0) o.member_limit = opts->member_limit;
  for (size_t i = 0; i < opts->num_constraints; ++i)
    o.constraints.emplace_back(opts->constraint_positions[i],
                               opts->constraint_values[i]);
  return o;
}

// a one-line word or a parenthesized cycle word, as a plain sequence
std::vector<int> parse_sequence(const char *text) {
  std::string_view sv(text);
  if (!sv.empty() && sv.front() == '(') {
    CycleWord c = parse_cycle(sv);
    return {c.entries().begin(), c.entries().end()};
  }
  Permutation p = parse_permutation(sv);
  return {p.word().begin(), p.word().end()};
}

}  // namespace

extern "C" {

const char *cycperm_version(void) { return "1.0.0"; }

const char *cycperm_status_name(cycperm_status s) {
  switch (s) {
    case CYCPERM_OK: return "ok";
    case CYCPERM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CYCPERM_ERR_PARSE: return "parse error";
    case CYCPERM_ERR_NOT_CYCLIC: return "not cyclic";
    case CYCPERM_ERR_OUT_OF_RANGE: return "out of range";
    case CYCPERM_ERR_RESOURCE_LIMIT: return "resource limit exceeded";
    case CYCPERM_ERR_OVERFLOW: return "integer overflow";
    case CYCPERM_ERR_NO_RECURRENCE: return "no recurrence";
    case CYCPERM_ERR_NOT_A_MEMBER: return "not a member";
    case CYCPERM_ERR_OEIS_UNAVAILABLE: return "OEIS data unavailable";
    case CYCPERM_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case CYCPERM_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char *cycperm_last_error(void) { return g_last_error.c_str(); }

/* ---- permutation words -------------------------------------------------- */

cycperm_status cycperm_to_cycle(const char *oneline, char *buf, size_t buflen) {
  if (!oneline) return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  std::string out;
  const auto rc = guarded([&] {
    out = to_string(standard_cycle(parse_permutation(oneline)));
  });
  return rc != CYCPERM_OK ? rc : copy_out(out, buf, buflen);
}

cycperm_status cycperm_from_cycle(const char *cycle, char *buf, size_t buflen) {
  if (!cycle) return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  std::string out;
  const auto rc =
      guarded([&] { out = to_string(from_cycle(parse_cycle(cycle))); });
  return rc != CYCPERM_OK ? rc : copy_out(out, buf, buflen);
}

cycperm_status cycperm_is_cyclic(const char *oneline, int *out) {
  if (!oneline || !out) return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = is_cyclic(parse_permutation(oneline)) ? 1 : 0; });
}

cycperm_status cycperm_symmetry(const char *oneline, const char *which,
                                char *buf, size_t buflen) {
  if (!oneline || !which)
    return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  std::string out;
  const auto rc = guarded([&] {
    const Permutation p = parse_permutation(oneline);
    const std::string_view w(which);
    Permutation q = p;
    if (w == "reverse") q = reverse(p);
    else if (w == "complement") q = complement(p);
    else if (w == "inverse") q = inverse(p);
    else if (w == "rc") q = reverse_complement(p);
    else if (w == "rci") q = reverse_complement_inverse(p);
    else throw InvalidArgumentError("unknown symmetry: " + std::string(w));
    out = to_string(q);
  });
  return rc != CYCPERM_OK ? rc : copy_out(out, buf, buflen);
}

cycperm_status cycperm_avoids(const char *seq, const char *patterns, int *out) {
  if (!seq || !patterns || !out)
    return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto values = parse_sequence(seq);
    *out = avoids_all(values, parse_pattern_set(patterns)) ? 1 : 0;
  });
}

/* ---- exhaustive enumeration --------------------------------------------- */

void cycperm_enum_options_init(cycperm_enum_options *opts) {
  if (!opts) return;
  std::memset(opts, 0, sizeof *opts);
  opts->prune = 1;
  opts->threads = 1;
}

cycperm_status cycperm_enumerate(const char *sigma, const char *tau, int n,
                                 const cycperm_enum_options *opts,
                                 cycperm_result **out) {
  if (!sigma || !tau || !out)
    return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    PairQuery q{parse_pattern_set(sigma), parse_pattern_set(tau), n,
                opts && opts->collect_members != 0};
    auto holder = std::make_unique<cycperm_result>();
    holder->res = brute_force(q, to_options(opts));
    *out = holder.release();
  });
}

int64_t cycperm_result_count(const cycperm_result *r) { return r->res.count; }

int64_t cycperm_result_nodes(const cycperm_result *r) {
  return r->res.nodes_visited;
}

double cycperm_result_elapsed_ms(const cycperm_result *r) {
  return std::chrono::duration<double, std::milli>(r->res.elapsed).count();
}

int cycperm_result_truncated(const cycperm_result *r) {
  return r->res.truncated ? 1 : 0;
}

size_t cycperm_result_num_members(const cycperm_result *r) {
  return r->res.members ? r->res.members->size() : 0;
}

cycperm_status cycperm_result_member(const cycperm_result *r, size_t index,
                                     char *buf, size_t buflen) {
  if (!r->res.members || index >= r->res.members->size())
    return fail(CYCPERM_ERR_OUT_OF_RANGE, "member index out of range");
  return copy_out(to_string((*r->res.members)[index]), buf, buflen);
}

cycperm_status cycperm_result_member_cycle(const cycperm_result *r,
                                           size_t index, char *buf,
                                           size_t buflen) {
  if (!r->res.members || index >= r->res.members->size())
    return fail(CYCPERM_ERR_OUT_OF_RANGE, "member index out of range");
  std::string out;
  const auto rc = guarded(
      [&] { out = to_string(standard_cycle((*r->res.members)[index])); });
  return rc != CYCPERM_OK ? rc : copy_out(out, buf, buflen);
}

void cycperm_result_free(cycperm_result *r) { delete r; }

/* ---- closed forms and recurrences ---------------------------------------- */

cycperm_status cycperm_fibonacci(int n, int64_t *out) {
  if (!out) return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = fibonacci(n); });
}

cycperm_status cycperm_binomial(int64_t n, int64_t k, int64_t *out) {
  if (!out) return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = binomial(n, k); });
}

cycperm_status cycperm_closed_form(const char *sigma, const char *tau, int n,
                                   int64_t *value, int *from_formula) {
  if (!sigma || !tau || !value)
    return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const FormulaValue v = closed_form(Pattern(sigma), Pattern(tau), n);
    *value = v.value;
    if (from_formula) *from_formula = v.source == ValueSource::formula ? 1 : 0;
  });
}

int cycperm_formula_table_size(void) {
  return static_cast<int>(formula_table().size());
}

cycperm_status cycperm_formula_entry(int index, cycperm_formula_info *out) {
  if (!out) return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  if (index < 0 || index >= cycperm_formula_table_size())
    return fail(CYCPERM_ERR_OUT_OF_RANGE, "table index out of range");
  const FormulaEntry &e = formula_table()[static_cast<size_t>(index)];
  copy_field(out->sigma, sizeof out->sigma, to_string(e.sigma.perm()));
  copy_field(out->tau, sizeof out->tau, to_string(e.tau.perm()));
  out->valid_from = e.valid_from;
  copy_field(out->oeis_id, sizeof out->oeis_id, e.oeis_id_text());
  copy_field(out->transform, sizeof out->transform, e.oeis_transform_text());
  copy_field(out->description, sizeof out->description, e.description);
  return CYCPERM_OK;
}

cycperm_status cycperm_recurrence_seq(const char *sigma, const char *tau,
                                      int up_to_n, int64_t *terms, size_t cap,
                                      size_t *count, int *first_n) {
  if (!sigma || !tau || !count || !first_n)
    return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const SequenceWindow w = recurrence_seq(Pattern(sigma), Pattern(tau), up_to_n);
    *first_n = w.first_n;
    *count = w.terms.size();
    if (terms) {
      if (cap < w.terms.size())
        throw Error(CYCPERM_ERR_BUFFER_TOO_SMALL, "terms buffer too small");
      std::copy(w.terms.begin(), w.terms.end(), terms);
    }
  });
}

/* ---- verification rows ---------------------------------------------------- */

namespace {

void fill_row(const VerificationRow &src, cycperm_row *dst) {
  copy_field(dst->sigma, sizeof dst->sigma, src.sigma);
  copy_field(dst->tau, sizeof dst->tau, src.tau);
  dst->n = src.n;
  dst->has_brute = src.brute.has_value();
  dst->brute = src.brute.value_or(0);
  dst->has_formula = src.formula.has_value();
  dst->formula = src.formula.value_or(0);
  dst->has_recurrence = src.recurrence.has_value();
  dst->recurrence = src.recurrence.value_or(0);
  dst->match = src.match ? 1 : 0;
  dst->elapsed_ms = src.elapsed_ms;
}

}  // namespace

cycperm_status cycperm_verify_pair(const char *sigma, const char *tau,
                                   int n_lo, int n_hi, int threads,
                                   cycperm_rows **out) {
  if (!sigma || !tau || !out)
    return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    EnumOptions opts;
    opts.threads = threads;
    auto holder = std::make_unique<cycperm_rows>();
    holder->rows = verify_pair(Pattern(sigma), Pattern(tau), n_lo, n_hi, opts);
    *out = holder.release();
  });
}

cycperm_status cycperm_conjecture_check(const char *name, int max_n,
                                        const char *cache_dir,
                                        int allow_network, cycperm_rows **out) {
  if (!name || !out) return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::optional<SequenceWindow> window;
    if (std::string_view(name) == "A087626-gf") {
      OeisClient client(cache_dir ? cache_dir : "", allow_network != 0);
      AlignedWindow aligned = aligned_gf_window(client);
      if (!aligned.window) throw OeisUnavailableError(aligned.note);
      window = std::move(aligned.window);
    }
    auto holder = std::make_unique<cycperm_rows>();
    holder->rows = conjecture_check(name, max_n, window);
    *out = holder.release();
  });
}

size_t cycperm_rows_size(const cycperm_rows *rows) { return rows->rows.size(); }

cycperm_status cycperm_rows_get(const cycperm_rows *rows, size_t index,
                                cycperm_row *out) {
  if (!out) return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= rows->rows.size())
    return fail(CYCPERM_ERR_OUT_OF_RANGE, "row index out of range");
  fill_row(rows->rows[index], out);
  return CYCPERM_OK;
}

void cycperm_rows_free(cycperm_rows *rows) { delete rows; }

/* ---- constructive families ------------------------------------------------ */

cycperm_status cycperm_construct(const char *family, int n, int k,
                                 char *oneline, size_t oneline_len, char *cycle,
                                 size_t cycle_len) {
  if (!family) return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  std::string one, cyc;
  const auto rc = guarded([&] {
    const Constructed c =
        construct(family, n, k > 0 ? std::optional(k) : std::nullopt);
    one = to_string(c.one_line);
    cyc = to_string(c.cycle);
  });
  if (rc != CYCPERM_OK) return rc;
  if (oneline) {
    const auto rc2 = copy_out(one, oneline, oneline_len);
    if (rc2 != CYCPERM_OK) return rc2;
  }
  if (cycle) return copy_out(cyc, cycle, cycle_len);
  return CYCPERM_OK;
}

cycperm_status cycperm_lift(const char *rule, const char *sigma,
                            const char *tau, const char *witness, char *buf,
                            size_t buflen) {
  if (!rule || !sigma || !tau || !witness)
    return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  std::string out;
  const auto rc = guarded([&] {
    const auto r = lift_rule_from_name(rule);
    if (!r) throw InvalidArgumentError("unknown lift rule: " + std::string(rule));
    out = to_string(
        lift(*r, Pattern(sigma), Pattern(tau), parse_permutation(witness)));
  });
  return rc != CYCPERM_OK ? rc : copy_out(out, buf, buflen);
}

/* ---- OEIS b-files ---------------------------------------------------------- */

cycperm_status cycperm_oeis_fetch(const char *oeis_id, const char *cache_dir,
                                  int allow_network, int refresh,
                                  cycperm_oeis **out) {
  if (!oeis_id || !out)
    return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    OeisClient client(cache_dir ? cache_dir : "", allow_network != 0);
    auto holder = std::make_unique<cycperm_oeis>();
    holder->window = client.fetch(oeis_id, refresh != 0);
    *out = holder.release();
  });
}

int64_t cycperm_oeis_first_index(const cycperm_oeis *seq) {
  return seq->window.first_index;
}

size_t cycperm_oeis_size(const cycperm_oeis *seq) {
  return seq->window.terms.size();
}

cycperm_status cycperm_oeis_term(const cycperm_oeis *seq, size_t index,
                                 int64_t *out) {
  if (!out) return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= seq->window.terms.size())
    return fail(CYCPERM_ERR_OUT_OF_RANGE, "term index out of range");
  *out = seq->window.terms[index];
  return CYCPERM_OK;
}

void cycperm_oeis_free(cycperm_oeis *seq) { delete seq; }

cycperm_status cycperm_oeis_cross_check(const char *sigma, const char *tau,
                                        int max_n, const char *cache_dir,
                                        int allow_network, int *any_mismatch,
                                        int *any_unavailable, char *buf,
                                        size_t buflen) {
  if (!sigma || !tau) return fail(CYCPERM_ERR_INVALID_ARGUMENT, "null argument");
  std::string report;
  int mismatch = 0, unavailable = 0;
  const auto rc = guarded([&] {
    OeisClient client(cache_dir ? cache_dir : "", allow_network != 0);
    const auto &entry = formula_entry(Pattern(sigma), Pattern(tau));
    for (const auto &res : oeis_cross_check(entry, client, max_n)) {
      if (!report.empty()) report += "\n";
      report += res.oeis_id + ": " + to_string(res.status);
      if (!res.note.empty()) report += " (" + res.note + ")";
      if (res.status == OeisCheckStatus::mismatch) mismatch = 1;
      if (res.status == OeisCheckStatus::unavailable) unavailable = 1;
    }
  });
  if (rc != CYCPERM_OK) return rc;
  if (any_mismatch) *any_mismatch = mismatch;
  if (any_unavailable) *any_unavailable = unavailable;
  if (buf) return copy_out(report, buf, buflen);
  return CYCPERM_OK;
}

} /* extern "C" */
