#ifndef CYCPERM_FORMULAS_HPP
#define CYCPERM_FORMULAS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "patterns.hpp"

namespace cycperm {

/// F(1) = F(2) = 1. Overflow raises OverflowError.
std::int64_t fibonacci(int n);

/// C(n, k); 0 when k < 0, k > n, or n < 0. Overflow raises OverflowError.
std::int64_t binomial(std::int64_t n, std::int64_t k);

enum class ValueSource { formula, oracle };

struct FormulaValue {
  std::int64_t value;
  ValueSource source;
};

enum class OeisParity { all, even_n, odd_n };

/// Cross-reference to an OEIS sequence: local values a_n should match
/// term + add for n of the given parity, at an alignment offset found
/// empirically by sliding the fetched window.
struct OeisRef {
  std::string id;
  int add = 0;
  OeisParity parity = OeisParity::all;
};

struct FormulaEntry {
  Pattern sigma;
  Pattern tau;
  int valid_from;  // smallest n where the closed form is asserted
  std::vector<OeisRef> oeis;
  std::string description;

  std::string oeis_id_text() const;
  std::string oeis_transform_text() const;
};

/// All 36 (sigma, tau) pairs over S3 x S3.
const std::array<FormulaEntry, 36> &formula_table();
const FormulaEntry &formula_entry(const Pattern &sigma, const Pattern &tau);

/// a_n(sigma;tau). For n >= valid_from this is the closed form; below it the
/// value comes from the exhaustive oracle and is flagged as such. tau = 312
/// dispatches to (sigma^{-1}; 213); tau in {123,132} uses the 0/1 rows.
FormulaValue closed_form(const Pattern &sigma, const Pattern &tau, int n);

struct SequenceWindow {
  int first_n;
  std::vector<std::int64_t> terms;  // terms[i] = a_{first_n + i}
};

/// Terms generated purely by the pair's recurrence from its base cases.
/// Throws NoRecurrenceError for pairs without one.
SequenceWindow recurrence_seq(const Pattern &sigma, const Pattern &tau,
                              int up_to_n);

struct VerificationRow {
  std::string sigma;
  std::string tau;
  int n = 0;
  std::optional<std::int64_t> brute;
  std::optional<std::int64_t> formula;
  std::optional<std::int64_t> recurrence;
  bool match = false;
  double elapsed_ms = 0.0;
};

/// Brute count vs closed form (where valid) vs recurrence (where defined)
/// for each n in [n_lo, n_hi].
std::vector<VerificationRow> verify_pair(const Pattern &sigma,
                                         const Pattern &tau, int n_lo,
                                         int n_hi,
                                         const EnumOptions &opts = {});

/// Conjectured values for the named long-pattern conjecture, one row per n.
/// Names: "binom-n-3-plus-1", "fib-2n-3", "A087626-gf". The gf check
/// compares against a sequence window (pass the fetched A087626 terms);
/// without one it throws OeisUnavailableError.
std::vector<VerificationRow> conjecture_check(
    std::string_view name, int max_n,
    const std::optional<SequenceWindow> &oeis_terms = std::nullopt,
    const EnumOptions &opts = {});

/// Names understood by conjecture_check.
std::array<std::string_view, 3> conjecture_names();

}  // namespace cycperm

#endif
