#pragma once

#include <cstdint>
#include <vector>

#include "tbv/perms.hpp"
#include "tbv/words.hpp"

namespace tbv {

struct BraidLetter {
  Index index = 0;
  int exp = 1;
  bool operator==(const BraidLetter&) const = default;
};

/// A word in the Artin generators sigma_i^{+-1}. A word whose largest index
/// is n-2 lives in the braid group on n strands.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<BraidLetter> letters) : letters_(std::move(letters)) {}
  /// From a word of Sigma letters (or Pi letters, read as sigmas).
  static BraidWord from_word(const Word& w);

  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// Number of strands needed: max index + 2 (1 for the empty word).
  Index strands() const;

  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;
  Word to_word() const;

  bool operator==(const BraidWord&) const = default;

 private:
  std::vector<BraidLetter> letters_;
};

inline constexpr std::uint64_t kDefaultBraidSteps = 1'000'000;

long exponent_sum(const BraidWord& b);
Permutation permutation_image(const BraidWord& b);

struct HandleReduction {
  BraidWord reduced;        // handle-free, freely reduced
  std::uint64_t steps = 0;  // handle reductions performed
};

/// Repeatedly reduce permitted handles until none is left. Throws
/// StepCapExceeded once more than `max_steps` reductions were needed.
HandleReduction reduce_handles(const BraidWord& b,
                               std::uint64_t max_steps = kDefaultBraidSteps);

/// Word problem in the braid group: exponent sum and permutation image are
/// checked first, then handle reduction decides.
bool is_trivial_braid(const BraidWord& b, std::uint64_t max_steps = kDefaultBraidSteps);
bool equal_braid(const BraidWord& a, const BraidWord& b,
                 std::uint64_t max_steps = kDefaultBraidSteps);

}  // namespace tbv
