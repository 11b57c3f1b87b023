#include "verify.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cycperm {

const char *to_string(OeisCheckStatus s) {
  switch (s) {
    case OeisCheckStatus::ok: return "ok";
    case OeisCheckStatus::mismatch: return "mismatch";
    case OeisCheckStatus::ambiguous: return "ambiguous";
    case OeisCheckStatus::unavailable: return "unavailable";
  }
  return "?";
}

std::vector<OeisCheckResult> oeis_cross_check(const FormulaEntry &entry,
                                              OeisClient &client, int max_n) {
  std::vector<OeisCheckResult> out;
  const std::string sigma_text = to_string(entry.sigma.perm());
  const std::string tau_text = to_string(entry.tau.perm());
  const int hi = std::max(max_n, entry.valid_from + 6);

  for (const auto &ref : entry.oeis) {
    OeisCheckResult res;
    res.sigma = sigma_text;
    res.tau = tau_text;
    res.oeis_id = ref.id;

    // local closed-form terms of the matching parity
    std::vector<std::int64_t> local;
    std::vector<int> ns;
    for (int n = entry.valid_from; n <= hi; ++n) {
      if (ref.parity == OeisParity::even_n && n % 2 != 0) continue;
      if (ref.parity == OeisParity::odd_n && n % 2 != 1) continue;
      local.push_back(closed_form(entry.sigma, entry.tau, n).value);
      ns.push_back(n);
    }
    if (local.empty()) continue;

    OeisWindow window;
    try {
      window = client.fetch(ref.id);
    } catch (const Error &e) {
      res.status = OeisCheckStatus::unavailable;
      res.note = e.what();
      out.push_back(std::move(res));
      continue;
    }

    // For parity-split references the aligned quantity is the term index of
    // the parity subsequence, so slide on the subsequence positions.
    std::vector<std::int64_t> positions(ns.size());
    for (size_t i = 0; i < ns.size(); ++i)
      positions[i] = ref.parity == OeisParity::all
                         ? ns[i]
                         : (ns[i] - ns.front()) / 2;
    const int first_pos = static_cast<int>(positions.front());

    const std::string key =
        sigma_text + ":" + tau_text +
        (ref.parity == OeisParity::even_n
             ? ":even"
             : ref.parity == OeisParity::odd_n ? ":odd" : "");
    std::int64_t offset = 0;
    if (auto stored = client.stored_offset(ref.id, key)) {
      offset = *stored;
    } else {
      // slide on the first few terms only; the comparison below covers the
      // full range
      std::vector<std::int64_t> probe(
          local.begin(),
          local.begin() + std::min<size_t>(local.size(), 7));
      const auto hits = align_offsets(window, ref.add, first_pos, probe);
      if (hits.size() != 1) {
        res.status = OeisCheckStatus::ambiguous;
        res.note = hits.empty() ? "no alignment offset matches"
                                : "multiple alignment offsets match";
        out.push_back(std::move(res));
        continue;
      }
      offset = hits.front();
      client.store_offset(ref.id, key, offset);
    }
    res.offset = offset;

    res.status = OeisCheckStatus::ok;
    int compared = 0;
    for (size_t i = 0; i < local.size(); ++i) {
      const auto t = window.term_at(positions[i] + offset);
      if (!t) continue;
      ++compared;
      if (*t + ref.add != local[i]) {
        res.status = OeisCheckStatus::mismatch;
        res.note = "a_" + std::to_string(ns[i]) + " = " +
                   std::to_string(local[i]) + " but " + ref.id + " gives " +
                   std::to_string(*t + ref.add);
        break;
      }
    }
    if (res.status == OeisCheckStatus::ok)
      res.note = "matched " + std::to_string(compared) + " terms";
    out.push_back(std::move(res));
  }
  return out;
}

AlignedWindow aligned_gf_window(OeisClient &client, int align_max_n,
                                const EnumOptions &opts) {
  const OeisWindow window = client.fetch("A087626");

  const PatternSet sigma({Pattern("3412")});
  const PatternSet tau({Pattern("213")});
  std::vector<std::int64_t> local;
  for (int n = 1; n <= align_max_n; ++n) {
    PairQuery q{sigma, tau, n, false};
    local.push_back(brute_force(q, opts).count);
  }

  const std::string key = "A087626-gf";
  std::int64_t offset = 0;
  if (auto stored = client.stored_offset("A087626", key)) {
    offset = *stored;
  } else {
    const auto hits = align_offsets(window, 0, 1, local);
    if (hits.size() != 1) {
      AlignedWindow res;
      res.note = hits.empty()
                     ? "A087626 does not align with the brute-force terms"
                     : "A087626 alignment is ambiguous";
      return res;
    }
    offset = hits.front();
    client.store_offset("A087626", key, offset);
  }

  AlignedWindow res;
  SequenceWindow aligned;
  aligned.first_n = static_cast<int>(window.first_index - offset);
  aligned.terms = window.terms;
  res.window = std::move(aligned);
  res.note = "offset " + std::to_string(offset);
  return res;
}

}  // namespace cycperm
