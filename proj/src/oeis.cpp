#include "oeis.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "errors.hpp"

#ifdef CYCPERM_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

namespace cycperm {

namespace {

using nlohmann::json;

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool valid_id(const std::string &id) {
  if (id.size() < 2 || id[0] != 'A') return false;
  for (size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

std::optional<std::string> read_file(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool write_file(const std::filesystem::path &p, const std::string &data) {
  std::error_code ec;
  std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << data;
  return static_cast<bool>(out);
}

std::optional<std::string> https_get(const std::string &url) {
#ifdef CYCPERM_HAVE_OPENSSL
  const std::string prefix = "https://";
  if (url.rfind(prefix, 0) != 0) return std::nullopt;
  const std::string rest = url.substr(prefix.size());
  const size_t slash = rest.find('/');
  if (slash == std::string::npos) return std::nullopt;
  httplib::SSLClient cli(rest.substr(0, slash));
  cli.set_connection_timeout(10);
  cli.set_read_timeout(30);
  cli.set_follow_location(true);
  auto res = cli.Get(rest.substr(slash));
  if (!res || res->status != 200) return std::nullopt;
  return res->body;
#else
  (void)url;
  return std::nullopt;
#endif
}

}  // namespace

std::optional<std::int64_t> OeisWindow::term_at(std::int64_t index) const {
  const std::int64_t i = index - first_index;
  if (i < 0 || i >= static_cast<std::int64_t>(terms.size()))
    return std::nullopt;
  return terms[static_cast<size_t>(i)];
}

OeisWindow parse_bfile(const std::string &oeis_id, const std::string &text) {
  OeisWindow w;
  w.oeis_id = oeis_id;
  bool have_first = false;
  std::int64_t prev_index = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    std::istringstream ls(line);
    std::int64_t index, value;
    if (!(ls >> index >> value))
      throw ParseError(oeis_id + ": malformed b-file line: '" + line + "'");
    std::string trailing;
    if (ls >> trailing)
      throw ParseError(oeis_id + ": trailing data on b-file line: '" + line +
                       "'");
    if (have_first && index <= prev_index)
      throw ParseError(oeis_id + ": b-file indices must increase");
    if (have_first && index != prev_index + 1)
      throw ParseError(oeis_id + ": b-file indices must be consecutive");
    if (!have_first) {
      w.first_index = index;
      have_first = true;
    }
    prev_index = index;
    w.terms.push_back(value);
  }
  if (w.terms.empty()) throw ParseError(oeis_id + ": empty b-file");
  return w;
}

OeisClient::OeisClient(std::filesystem::path cache_dir, bool allow_network,
                       Transport transport)
    : cache_dir_(std::move(cache_dir)),
      allow_network_(allow_network),
      transport_(transport ? std::move(transport) : Transport(https_get)) {}

OeisWindow OeisClient::fetch(const std::string &oeis_id, bool refresh) {
  if (!valid_id(oeis_id))
    throw InvalidArgumentError("malformed OEIS id: '" + oeis_id + "'");
  const auto raw_path = cache_dir_ / (oeis_id + ".txt");
  const auto sidecar_path = cache_dir_ / (oeis_id + ".json");

  if (!refresh) {
    if (auto raw = read_file(raw_path)) {
      OeisWindow w = parse_bfile(oeis_id, *raw);
      if (auto side = read_file(sidecar_path)) {
        const auto j = json::parse(*side, nullptr, false);
        if (!j.is_discarded() && j.contains("fetched_at"))
          w.fetched_at = j["fetched_at"].get<std::string>();
      }
      return w;
    }
  }

  if (!allow_network_)
    throw OeisUnavailableError(oeis_id +
                               " is not cached and network access is off");
  const std::string url =
      "https://oeis.org/" + oeis_id + "/b" + oeis_id.substr(1) + ".txt";
  auto body = transport_(url);
  if (!body) throw OeisUnavailableError("failed to fetch " + url);
  OeisWindow w = parse_bfile(oeis_id, *body);
  w.fetched_at = now_iso8601();

  // store as received plus the parsed sidecar; failures only cost the cache
  write_file(raw_path, *body);
  json side{{"oeis_id", w.oeis_id},
            {"first_index", w.first_index},
            {"terms", w.terms},
            {"fetched_at", w.fetched_at}};
  if (auto old = read_file(sidecar_path)) {
    const auto j = json::parse(*old, nullptr, false);
    if (!j.is_discarded() && j.contains("alignments"))
      side["alignments"] = j["alignments"];
  }
  write_file(sidecar_path, side.dump(2) + "\n");
  return w;
}

std::optional<std::int64_t> OeisClient::stored_offset(
    const std::string &oeis_id, const std::string &key) const {
  auto side = read_file(cache_dir_ / (oeis_id + ".json"));
  if (!side) return std::nullopt;
  const auto j = json::parse(*side, nullptr, false);
  if (j.is_discarded() || !j.contains("alignments")) return std::nullopt;
  const auto &al = j["alignments"];
  if (!al.contains(key)) return std::nullopt;
  return al[key].get<std::int64_t>();
}

void OeisClient::store_offset(const std::string &oeis_id,
                              const std::string &key, std::int64_t offset) {
  const auto sidecar_path = cache_dir_ / (oeis_id + ".json");
  json j;
  if (auto side = read_file(sidecar_path)) {
    j = json::parse(*side, nullptr, false);
    if (j.is_discarded()) j = json::object();
  } else {
    j = json::object();
  }
  j["oeis_id"] = oeis_id;
  j["alignments"][key] = offset;
  write_file(sidecar_path, j.dump(2) + "\n");
}

std::vector<std::int64_t> align_offsets(
    const OeisWindow &window, std::int64_t add, int first_local_n,
    const std::vector<std::int64_t> &local) {
  std::vector<std::int64_t> hits;
  if (local.empty() || window.terms.empty()) return hits;
  const std::int64_t w0 = window.first_index;
  const std::int64_t w1 = w0 + static_cast<std::int64_t>(window.terms.size()) - 1;
  // offset d aligns local n with window index n + d
  const std::int64_t lo = w0 - (first_local_n + static_cast<std::int64_t>(local.size()) - 1);
  const std::int64_t hi = w1 - first_local_n;
  for (std::int64_t d = lo; d <= hi; ++d) {
    bool any = false, ok = true;
    for (size_t i = 0; i < local.size() && ok; ++i) {
      const auto t = window.term_at(first_local_n + static_cast<std::int64_t>(i) + d);
      if (!t) continue;
      any = true;
      ok = (*t + add == local[i]);
    }
    if (any && ok) hits.push_back(d);
  }
  return hits;
}

}  // namespace cycperm
