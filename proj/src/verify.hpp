#ifndef CYCPERM_VERIFY_HPP
#define CYCPERM_VERIFY_HPP

#include <string>
#include <vector>

#include "formulas.hpp"
#include "oeis.hpp"

namespace cycperm {

enum class OeisCheckStatus { ok, mismatch, ambiguous, unavailable };

struct OeisCheckResult {
  std::string sigma;
  std::string tau;
  std::string oeis_id;
  OeisCheckStatus status = OeisCheckStatus::unavailable;
  std::int64_t offset = 0;  // local n matches window index n + offset
  std::string note;
};

const char *to_string(OeisCheckStatus s);

/// Compare an entry's closed-form values against its OEIS references.
/// Alignment offsets are found by sliding a window of locally computed terms
/// (from valid_from upward) and are persisted in the cache sidecar; zero or
/// multiple candidate offsets report as ambiguous.
std::vector<OeisCheckResult> oeis_cross_check(const FormulaEntry &entry,
                                              OeisClient &client, int max_n);

struct AlignedWindow {
  std::optional<SequenceWindow> window;  // first_n speaks local n
  std::string note;
};

/// Fetch A087626 and align it against brute-force a_n(3412;213) terms,
/// for the generating-function conjecture check. Throws
/// OeisUnavailableError when the sequence cannot be fetched at all.
AlignedWindow aligned_gf_window(OeisClient &client, int align_max_n = 8,
                                const EnumOptions &opts = {});

}  // namespace cycperm

#endif
