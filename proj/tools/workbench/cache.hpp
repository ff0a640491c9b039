#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace workbench {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CacheKey {
  int a = 0;
  int b = 0;
  std::string pattern;  // normalised literal
  std::string variant;

  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

struct CacheRecord {
  CacheKey key;
  long long value = 0;
  std::string certificate_bgf;
  nlohmann::json stats = nlohmann::json::object();
  std::string timestamp;
  std::string tool_version;
};

nlohmann::json to_json(const CacheRecord& r);
/// Throws bturan::ParseError (line 1 of the record) on missing or mistyped fields.
CacheRecord record_from_json(const nlohmann::json& j);

/// Empty when the record's certificate re-verifies, else the reason.
std::optional<std::string> check_record(const CacheRecord& r);

struct CacheLine {
  std::size_t line = 0;  // 1-based
  std::optional<CacheRecord> record;
  std::string error;  // set when the line does not parse
};

/// A missing file reads as empty unless `must_exist`. Throws IoError when unreadable.
std::vector<CacheLine> read_cache(const std::filesystem::path& path, bool must_exist = false);

/// Latest parsed record per key; later lines win.
std::map<CacheKey, CacheRecord> latest_records(const std::vector<CacheLine>& lines);

/// Appends one line with a single write on an O_APPEND descriptor.
void append_record(const std::filesystem::path& path, const CacheRecord& r);

/// Replaces the file contents through a temporary and a rename.
void rewrite_cache(const std::filesystem::path& path, const std::vector<CacheRecord>& records);

std::string utc_timestamp();

}  // namespace workbench
