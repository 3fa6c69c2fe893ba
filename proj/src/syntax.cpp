#include "tbv/syntax.hpp"

#include <cctype>
#include <limits>

namespace tbv {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    Family fam;
    if (text.substr(i, 2) == "pb") {
      fam = Family::PiBar;
      i += 2;
    } else {
      switch (text[i]) {
        case 'l': fam = Family::Lambda; break;
        case 's': fam = Family::Sigma; break;
        case 'v': fam = Family::V; break;
        case 'p': fam = Family::Pi; break;
        default: throw ParseError("unknown generator family", start);
      }
      ++i;
    }
    if (i >= n || !is_digit(text[i])) throw ParseError("expected index", i);
    Index idx = 0;
    while (i < n && is_digit(text[i])) {
      const Index d = static_cast<Index>(text[i] - '0');
      if (idx > (std::numeric_limits<Index>::max() - d) / 10) {
        throw ParseError("index too large", start);
      }
      idx = idx * 10 + d;
      ++i;
    }
    int e = 1;
    if (i < n && text[i] == '\'') {
      e = -1;
      ++i;
    }
    if (i < n && !is_space(text[i])) throw ParseError("unexpected character", i);
    out.push_back({fam, idx, e});
  }
  return Word(std::move(out));
}

}  // namespace tbv
