#include "report.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace workbench {

using json = nlohmann::ordered_json;

namespace {

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    std::string out = "\"";
    for (char c : v.get<std::string>()) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  }
  if (v.is_structured()) return csv_cell(json(v.dump()));
  return v.dump();
}

std::string text_cell(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::vector<std::string> columns(const json& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, _] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

void emit_csv(const json& report, std::ostream& out) {
  json rows = report.contains("rows") ? report["rows"] : json::array({report});
  const auto cols = columns(rows);
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
  out << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << csv_cell(r.value(cols[c], json()));
    out << '\n';
  }
}

void emit_table(const json& rows, std::ostream& out) {
  const auto cols = columns(rows);
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  for (const auto& r : rows)
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = std::max(width[c], text_cell(r.value(cols[c], json())).size());
  auto line = [&](auto cell) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string s = cell(c);
      out << s;
      if (c + 1 < cols.size()) out << std::string(width[c] - s.size() + 2, ' ');
    }
    out << '\n';
  };
  line([&](std::size_t c) { return cols[c]; });
  for (const auto& r : rows) line([&](std::size_t c) { return text_cell(r.value(cols[c], json())); });
}

void emit_text(const json& v, const std::string& prefix, std::ostream& out) {
  for (const auto& [k, x] : v.items()) {
    const std::string key = prefix + k;
    if (k == "rows" && x.is_array()) continue;
    if (x.is_object()) {
      emit_text(x, key + ".", out);
    } else if (x.is_string() && x.get<std::string>().find('\n') != std::string::npos) {
      out << key << ":\n" << x.get<std::string>();
    } else if (x.is_array() && std::all_of(x.begin(), x.end(), [](const json& e) { return e.is_primitive(); })) {
      out << key << ":";
      for (const auto& e : x) out << ' ' << text_cell(e);
      out << '\n';
    } else if (x.is_array()) {
      out << key << ":\n";
      for (const auto& e : x) out << "  " << (e.is_string() ? e.get<std::string>() : e.dump()) << '\n';
    } else {
      out << key << ": " << text_cell(x) << '\n';
    }
  }
  if (prefix.empty() && v.contains("rows") && v["rows"].is_array()) emit_table(v["rows"], out);
}

}  // namespace

void emit(const json& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << report.dump() << '\n';
      break;
    case Format::Csv:
      emit_csv(report, out);
      break;
    case Format::Text:
      emit_text(report, "", out);
      break;
  }
}

}  // namespace workbench
