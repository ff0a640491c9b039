#pragma once

#include <iosfwd>
#include <string_view>

#include <json.hpp>

namespace workbench {

enum class Format { Json, Csv, Text };

/// Reports are JSON objects. CSV prints the "rows" array when present, else
/// one row of the top-level fields; strings are always quoted.
void emit(const nlohmann::ordered_json& report, Format format, std::ostream& out);

}  // namespace workbench
