#include "cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>

#include "bturan/bgf.hpp"
#include "bturan/embedder.hpp"
#include "bturan/error.hpp"
#include "bturan/pattern_literal.hpp"
#include "bturan/registry.hpp"

namespace workbench {

using nlohmann::json;

json to_json(const CacheRecord& r) {
  return json{{"a", r.key.a},
              {"b", r.key.b},
              {"pattern", r.key.pattern},
              {"variant", r.key.variant},
              {"value", r.value},
              {"certificate_bgf", r.certificate_bgf},
              {"stats", r.stats},
              {"timestamp", r.timestamp},
              {"tool_version", r.tool_version}};
}

CacheRecord record_from_json(const json& j) {
  try {
    CacheRecord r;
    r.key.a = j.at("a").get<int>();
    r.key.b = j.at("b").get<int>();
    r.key.pattern = j.at("pattern").get<std::string>();
    r.key.variant = j.at("variant").get<std::string>();
    r.value = j.at("value").get<long long>();
    r.certificate_bgf = j.at("certificate_bgf").get<std::string>();
    r.stats = j.value("stats", json::object());
    r.timestamp = j.at("timestamp").get<std::string>();
    r.tool_version = j.at("tool_version").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw bturan::ParseError(1, std::string("cache record: ") + e.what());
  }
}

std::optional<std::string> check_record(const CacheRecord& r) {
  try {
    const auto variant = bturan::variant_from_name(r.key.variant);
    if (!variant) return "unknown variant '" + r.key.variant + "'";
    const auto f = bturan::parse_pattern_literal(r.key.pattern);
    const auto g = bturan::parse_bgf(r.certificate_bgf);
    if (g.left_size() != r.key.a || g.right_size() != r.key.b) return "certificate parts differ from the key";
    if (g.edge_count() != r.value) {
      return "certificate has " + std::to_string(g.edge_count()) + " edges, value is " + std::to_string(r.value);
    }
    if (f.fits(r.key.a, r.key.b) && !bturan::is_family_free(g, f)) return "certificate contains " + r.key.pattern;
    if (*variant == bturan::Variant::BC && !bturan::is_connected(g)) return "certificate is not connected";
  } catch (const std::exception& e) {
    return e.what();
  }
  return std::nullopt;
}

std::vector<CacheLine> read_cache(const std::filesystem::path& path, bool must_exist) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    if (must_exist) throw IoError("cache file " + path.string() + " does not exist");
    return {};
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot read cache file " + path.string());
  std::vector<CacheLine> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.empty()) continue;
    CacheLine entry;
    entry.line = line;
    try {
      entry.record = record_from_json(json::parse(text));
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  if (in.bad()) throw IoError("error while reading " + path.string());
  return out;
}

std::map<CacheKey, CacheRecord> latest_records(const std::vector<CacheLine>& lines) {
  std::map<CacheKey, CacheRecord> out;
  for (const auto& l : lines)
    if (l.record) out.insert_or_assign(l.record->key, *l.record);
  return out;
}

void append_record(const std::filesystem::path& path, const CacheRecord& r) {
  const std::string line = to_json(r).dump() + "\n";
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw IoError("cannot open cache " + path.string() + ": " + std::strerror(errno));
  const auto written = ::write(fd, line.data(), line.size());
  const int err = errno;
  ::close(fd);
  if (written != static_cast<ssize_t>(line.size()))
    throw IoError("short write to cache " + path.string() + ": " + std::strerror(err));
}

void rewrite_cache(const std::filesystem::path& path, const std::vector<CacheRecord>& records) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    for (const auto& r : records) out << to_json(r).dump() << '\n';
    if (!out.flush()) throw IoError("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot replace " + path.string() + ": " + ec.message());
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace workbench
