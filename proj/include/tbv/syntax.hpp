#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tbv/words.hpp"

namespace tbv {

/// Syntax error with the byte offset of the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

// word  := token*           (whitespace separated)
// token := family index "'"?
// family: l s v p pb   ->  lambda sigma v pi pibar
Word parse_word(std::string_view text);

/// Inverse of parse_word; same as to_string(Word).
inline std::string format_word(const Word& w) { return to_string(w); }

}  // namespace tbv
