#include "bturan/bgf.hpp"

#include <charconv>
#include <set>
#include <utility>
#include <vector>

#include "bturan/error.hpp"

namespace bturan {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

// Parses exactly `count` non-negative decimal integers separated by single spaces.
bool parse_fields(std::string_view line, int count, std::vector<int>& out) {
  out.clear();
  std::size_t pos = 0;
  for (int f = 0; f < count; ++f) {
    if (f > 0) {
      if (pos >= line.size() || line[pos] != ' ') return false;
      ++pos;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{} || ptr == line.data() + pos || value < 0) return false;
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return pos == line.size();
}

}  // namespace

std::string serialize_bgf(const BipartiteGraph& g) {
  std::string out = std::to_string(g.left_size()) + " " + std::to_string(g.right_size()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.left) + " " + std::to_string(e.right) + "\n";
  return out;
}

BipartiteGraph parse_bgf(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header \"a b\"");
  std::vector<int> f;
  if (!parse_fields(lines[0], 2, f)) throw ParseError(1, "malformed header, expected \"a b\"");
  const int a = f[0];
  const int b = f[1];
  if (a > kMaxPartSize || b > kMaxPartSize) {
    throw ParseError(1, "part size exceeds " + std::to_string(kMaxPartSize));
  }
  BipartiteGraph g(a, b);
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    const std::size_t lineno = ln + 1;
    if (!parse_fields(lines[ln], 2, f)) throw ParseError(lineno, "malformed edge line, expected \"i j\"");
    if (f[0] >= a) throw ParseError(lineno, "left endpoint " + std::to_string(f[0]) + " >= a=" + std::to_string(a));
    if (f[1] >= b) throw ParseError(lineno, "endpoint " + std::to_string(f[1]) + " >= b=" + std::to_string(b));
    if (g.has_edge(f[0], f[1])) {
      throw ParseError(lineno, "duplicate edge " + std::to_string(f[0]) + " " + std::to_string(f[1]));
    }
    g.add_edge(f[0], f[1]);
  }
  return g;
}

std::string serialize_graph(const GeneralGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

GeneralGraph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header \"n\"");
  std::vector<int> f;
  if (!parse_fields(lines[0], 1, f)) throw ParseError(1, "malformed header, expected \"n\"");
  const int n = f[0];
  if (n > 64) throw ParseError(1, "vertex count exceeds 64");
  GeneralGraph g(n);
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    const std::size_t lineno = ln + 1;
    if (!parse_fields(lines[ln], 2, f)) throw ParseError(lineno, "malformed edge line, expected \"u v\"");
    if (f[0] >= n || f[1] >= n) throw ParseError(lineno, "endpoint out of range for n=" + std::to_string(n));
    if (f[0] == f[1]) throw ParseError(lineno, "loop at vertex " + std::to_string(f[0]));
    if (g.has_edge(f[0], f[1])) throw ParseError(lineno, "duplicate edge");
    g.add_edge(f[0], f[1]);
  }
  return g;
}

}  // namespace bturan
