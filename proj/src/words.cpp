#include "tbv/words.hpp"

#include <limits>

namespace tbv {

Index add_index(Index a, Index b) {
  if (a > std::numeric_limits<Index>::max() - b) {
    throw std::overflow_error("generator index overflow");
  }
  return a + b;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Lambda: return "l";
    case Family::Sigma: return "s";
    case Family::V: return "v";
    case Family::Pi: return "p";
    case Family::PiBar: return "pb";
  }
  return "?";
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Symbol> out;
  out.reserve(letters_.size() + rhs.letters_.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::power(Symbol s, long n) {
  std::vector<Symbol> out;
  if (n < 0) {
    s = s.inverse();
    n = -n;
  }
  out.assign(static_cast<std::size_t>(n), s);
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Symbol> stack;
  stack.reserve(w.size());
  for (const auto& s : w) {
    if (!stack.empty() && stack.back().inverse_of(s)) {
      stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return Word(std::move(stack));
}

Word invert(const Word& w) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (auto it = w.vec().rbegin(); it != w.vec().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

bool uses_only(const Word& w, std::initializer_list<Family> families) {
  for (const auto& s : w) {
    bool ok = false;
    for (auto f : families) ok = ok || s.family == f;
    if (!ok) return false;
  }
  return true;
}

Word bv_generator_image(Family f, Index n) {
  // v_n = l0^{n+1} l1 l0^{-n-2}, p_n = l0^{n+2} s1 l0^{-n-2},
  // pb_n = l0^{n+1} s0 l0^{-n-1}
  const long a = static_cast<long>(add_index(n, 1));
  switch (f) {
    case Family::V:
      return Word::power(lam(0), a) * Word{lam(1)} * Word::power(lam(0), -(a + 1));
    case Family::Pi:
      return Word::power(lam(0), a + 1) * Word{sig(1)} * Word::power(lam(0), -(a + 1));
    case Family::PiBar:
      return Word::power(lam(0), a) * Word{sig(0)} * Word::power(lam(0), -a);
    default:
      throw AlphabetError(std::string("not a BV generator: ") + family_name(f));
  }
}

Word expand_bv_generators(const Word& w) {
  std::vector<Symbol> out;
  for (const auto& s : w) {
    Word img = bv_generator_image(s.family, s.index);
    if (s.exp < 0) img = invert(img);
    out.insert(out.end(), img.begin(), img.end());
  }
  return free_reduce(Word(std::move(out)));
}

std::string to_string(const Symbol& s) {
  std::string out = family_name(s.family);
  out += std::to_string(s.index);
  if (s.exp < 0) out += '\'';
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += to_string(s);
  }
  return out;
}

}  // namespace tbv
