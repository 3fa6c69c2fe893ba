#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tbv {

using Index = std::uint64_t;

/// Thrown by every rewriting procedure whose step budget runs out.
class StepCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation receives letters from the wrong alphabet.
class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checked index arithmetic; rewriting only ever raises indices.
Index add_index(Index a, Index b);

enum class Family : std::uint8_t { Lambda, Sigma, V, Pi, PiBar };

const char* family_name(Family f);

struct Symbol {
  Family family = Family::Lambda;
  Index index = 0;
  int exp = 1;  // +1 or -1

  Symbol inverse() const { return {family, index, -exp}; }
  bool inverse_of(const Symbol& o) const {
    return family == o.family && index == o.index && exp == -o.exp;
  }
  bool operator==(const Symbol&) const = default;
};

inline Symbol lam(Index i, int e = 1) { return {Family::Lambda, i, e}; }
inline Symbol sig(Index i, int e = 1) { return {Family::Sigma, i, e}; }
inline Symbol vg(Index i, int e = 1) { return {Family::V, i, e}; }
inline Symbol pi(Index i, int e = 1) { return {Family::Pi, i, e}; }
inline Symbol pib(Index i, int e = 1) { return {Family::PiBar, i, e}; }

/// An immutable finite sequence of symbols. Multiplication is concatenation.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Symbol> s) : letters_(s) {}
  explicit Word(std::vector<Symbol> s) : letters_(std::move(s)) {}

  std::span<const Symbol> letters() const { return letters_; }
  const std::vector<Symbol>& vec() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Symbol& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word operator*(const Word& rhs) const;
  bool operator==(const Word&) const = default;

  /// Word consisting of `n` copies of `s` (or of its inverse when n < 0).
  static Word power(Symbol s, long n);

 private:
  std::vector<Symbol> letters_;
};

Word free_reduce(const Word& w);
Word invert(const Word& w);

bool uses_only(const Word& w, std::initializer_list<Family> families);

/// Replace v, pi and pibar letters by their images in the lambda/sigma
/// alphabet and freely reduce.
Word expand_bv_generators(const Word& w);

/// Image of a single BV generator (positive exponent) in lambda/sigma.
Word bv_generator_image(Family f, Index n);

/// Plain-text form using the CLI token grammar ("l0 s1' pb2").
std::string to_string(const Word& w);
std::string to_string(const Symbol& s);

}  // namespace tbv
