#include "bturan/pattern_literal.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "bturan/error.hpp"

namespace bturan {

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  PatternFamily parse() {
    if (peek() == 'T') {
      ++pos_;
      int k = integer();
      expect(',');
      int l = integer();
      finish();
      return PatternFamily(TreesKL{k, l});
    }
    Pattern p = pattern();
    finish();
    return PatternFamily(std::move(p));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("bad pattern literal \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) +
                          ": " + what);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  int integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1000) fail("number too large");
    }
    return static_cast<int>(value);
  }

  void finish() {
    if (pos_ != text_.size()) fail("trailing characters");
  }

  Pattern pattern() {
    try {
      if (accept("Prst:")) {
        int r = integer();
        expect(',');
        int s = integer();
        expect(',');
        int t = integer();
        return make_caterpillar(r, s, t);
      }
      if (accept("U(")) {
        std::vector<Pattern> parts{pattern()};
        while (peek() == ',') {
          ++pos_;
          parts.push_back(pattern());
        }
        expect(')');
        if (parts.size() < 2) fail("union needs at least two parts");
        return make_union(parts);
      }
      if (accept("K2")) return make_star(1);
      if (accept("K1,")) return make_star(integer());
      if (accept("P")) return make_path(integer());
      if (accept("D")) {
        int s = integer();
        expect(',');
        return make_double_star(s, integer());
      }
      if (accept("S")) {
        std::vector<int> legs;
        while (true) {
          int first = integer();
          if (peek() == '*') {
            ++pos_;
            int len = integer();
            legs.insert(legs.end(), static_cast<std::size_t>(first), len);
          } else {
            legs.push_back(first);
          }
          if (peek() == ',' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            continue;
          }
          break;
        }
        return make_spider(legs);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidArgument& e) {
      if (std::string(e.what()).rfind("bad pattern literal", 0) == 0) throw;
      fail(e.what());
    }
    fail("unknown pattern kind");
  }
};

}  // namespace

PatternFamily parse_pattern_literal(std::string_view text) { return LiteralParser(text).parse(); }

}  // namespace bturan
