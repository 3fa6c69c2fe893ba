#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tbv/braid.hpp"
#include "tbv/bv_relations.hpp"
#include "tbv/perms.hpp"
#include "tbv/words.hpp"

namespace tbv {

/// Heights are subsets of the naturals of three shapes: empty, {h}, and
/// the tail {h, h+1, ...}.
class HeightSet {
 public:
  enum class Kind { Empty, Singleton, Tail };

  static HeightSet empty() { return HeightSet(Kind::Empty, 0); }
  static HeightSet singleton(Index h) { return HeightSet(Kind::Singleton, h); }
  static HeightSet tail(Index from) { return HeightSet(Kind::Tail, from); }

  Kind kind() const { return kind_; }
  /// Singleton element, or the least element of a tail.
  Index value() const { return value_; }
  bool is_empty() const { return kind_ == Kind::Empty; }
  bool contains(Index h) const;
  HeightSet intersect(const HeightSet& o) const;
  bool operator==(const HeightSet& o) const = default;

 private:
  HeightSet(Kind k, Index v) : kind_(k), value_(v) {}
  Kind kind_;
  Index value_;
};

std::string to_string(const HeightSet& h);

/// pibar_n: {n+1}; pi_n: tail from n+2; a word: intersection over letters,
/// the empty word having height tail(0). Only pi/pibar letters allowed.
HeightSet height_of(const Symbol& s);
HeightSet height_of(const Word& w);

/// pre * core * post with core a pibar letter and pre, post pi words.
struct Monosyllable {
  Word pre;
  Symbol core;
  Word post;

  Word to_word() const { return pre * Word{core} * post; }
  HeightSet height() const { return height_of(to_word()); }
  Monosyllable inverse() const { return {invert(post), core.inverse(), invert(pre)}; }
  bool operator==(const Monosyllable& o) const = default;
};

/// Throws std::invalid_argument unless w is pi* pibar pi*.
Monosyllable as_monosyllable(const Word& w);

enum class Side { Left, Right };

/// Right: w v_m = v_j w'.  Left: v_m^-1 w = w' v_j^-1.  w is a pi word; j is
/// w(m) for Right and w^{-1}(m) for Left.
struct PiAction {
  Word word;
  Index moved = 0;
};
PiAction pi_action(const Word& w, Index m, Side side);

/// pibar^eps_m v_{m+k} for k >= 1, as (v_m ... v_{m+k-2} v_{m+k-1}^2) *
/// (pibar^eps_{m+k+1} pi^eps_{m+k} ... pi^eps_m). Side::Left gives the
/// mirror: v_{m+k}^-1 pibar^eps_m = (pi^eps_m ... pi^eps_{m+k}
/// pibar^eps_{m+k+1}) * (v_m ... v_{m+k-2} v_{m+k-1}^2)^-1.
std::pair<Word, Word> opi_commute(Index m, Index k, int eps, Side side);

/// L * M * R: L a positive v word, M a pi/pibar word, R a negative v word.
struct LMRForm {
  Word L;
  Word M;
  Word R;
  HeightSet height_M = HeightSet::tail(0);
  Index k = 0;  // a height in height_M that also bounds L and R^-1
  std::uint64_t steps = 0;

  Word to_word() const { return L * M * R; }
};

inline constexpr std::uint64_t kDefaultLmrSteps = 10'000'000;

struct LmrOptions {
  std::uint64_t max_steps = kDefaultLmrSteps;
  std::uint64_t braid_steps = kDefaultBraidSteps;
};

/// Moves every positive v to the left end and every negative v to the right
/// end. Input: v, pi, pibar letters.
LMRForm to_first_form(const Word& w, BVMode mode, const LmrOptions& opts = {});

/// One monosyllable of height {h} raised to height {h+1}.
///  A: M = M' v_j^-1 (always emits).   B: M = v_j M' (always emits).
///  C: M v_m = [v_j] M' for m < h.     D: v_m^-1 M = M' [v_j^-1] for m < h.
enum class RaiseOp { A, B, C, D };

struct MonoRaise {
  std::optional<Index> left_v;   // v_j emitted on the left (B, C)
  Monosyllable mono;
  std::optional<Index> right_v;  // v_j^-1 emitted on the right (A, D)
};
MonoRaise mono_raise(const Monosyllable& M, RaiseOp op, Index m = 0);

/// Monosyllables of nondecreasing heights, all raised by one:
/// M1...Mr = M1'...Mr' * [v_j^-1].
struct WordRaise {
  std::vector<Monosyllable> monos;
  std::optional<Index> right_v;
};
WordRaise raise_word_heights(const std::vector<Monosyllable>& monos);

/// M with h in its height raised to contain h+1. Right: M = M' [v_j^-1].
/// Left: M = [v_j] M'. A tail-height M comes back unchanged.
struct MRaise {
  std::optional<Index> v;
  Word M;
};
MRaise raise_M(const Word& M, Index h, Side side);

/// A bound k with k in height(L): start from 0 and for each v_m take k+1
/// when m <= k-1 and m+2 otherwise.
Index l_height_bound(const Word& L);

/// The normal form used by the word problem: M has height containing k and
/// k bounds both L and R^-1.
LMRForm to_third_form(const Word& w, BVMode mode, const LmrOptions& opts = {});

/// For M of height containing h: pi_i^e -> sigma_{(h-1)-i}^e (i <= h-2) and
/// pibar_{h-1}^e -> sigma_0^e. Throws std::invalid_argument otherwise.
BraidWord m_to_sigma(const Word& M, Index h);

struct BVDecision {
  bool trivial = false;
  LMRForm form;
  std::variant<BraidWord, Permutation> beta;
  std::uint64_t braid_steps = 0;
};

BVDecision decide_bv(const Word& w, BVMode mode, const LmrOptions& opts = {});
bool is_trivial_bv(const Word& w, BVMode mode, const LmrOptions& opts = {});
bool equal_bv(const Word& a, const Word& b, BVMode mode, const LmrOptions& opts = {});

}  // namespace tbv
