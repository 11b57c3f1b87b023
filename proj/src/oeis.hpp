#ifndef CYCPERM_OEIS_HPP
#define CYCPERM_OEIS_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cycperm {

struct OeisWindow {
  std::string oeis_id;
  std::int64_t first_index = 0;
  std::vector<std::int64_t> terms;  // terms[i] = value at first_index + i
  std::string fetched_at;           // ISO 8601, "" when unknown

  std::optional<std::int64_t> term_at(std::int64_t index) const;
};

/// b-file client with a local cache directory. Raw files are stored as
/// received ("<id>.txt") next to a parsed JSON sidecar ("<id>.json"); hits
/// never touch the network. Downloads use the canonical b-file URL
/// (https://oeis.org/<id>/b<digits>.txt) and require allow_network.
class OeisClient {
 public:
  /// transport maps a URL to the response body, or nullopt on failure; the
  /// default performs an HTTPS GET.
  using Transport =
      std::function<std::optional<std::string>(const std::string &url)>;

  OeisClient(std::filesystem::path cache_dir, bool allow_network,
             Transport transport = {});

  /// Throws OeisUnavailableError when neither cache nor network can serve
  /// the id, ParseError on malformed b-files.
  OeisWindow fetch(const std::string &oeis_id, bool refresh = false);

  /// Alignment offsets frozen by earlier runs (keyed by context, e.g.
  /// "132:231" or a conjecture name). Best effort; a read-only cache
  /// directory simply does not persist.
  std::optional<std::int64_t> stored_offset(const std::string &oeis_id,
                                            const std::string &key) const;
  void store_offset(const std::string &oeis_id, const std::string &key,
                    std::int64_t offset);

  const std::filesystem::path &cache_dir() const { return cache_dir_; }

 private:
  std::filesystem::path cache_dir_;
  bool allow_network_;
  Transport transport_;
};

/// Parse b-file text: lines "index value", '#' comments skipped, indices
/// strictly increasing. Throws ParseError otherwise.
OeisWindow parse_bfile(const std::string &oeis_id, const std::string &text);

/// Find offsets d such that local[i] == window[first_local_n + i + d] + add
/// for every local term inside the window. Returns all candidates; a unique
/// result pins the alignment.
std::vector<std::int64_t> align_offsets(const OeisWindow &window,
                                        std::int64_t add, int first_local_n,
                                        const std::vector<std::int64_t> &local);

}  // namespace cycperm

#endif
