#pragma once

#include <vector>

#include "tbv/words.hpp"

namespace tbv {

/// Finitely supported permutation of the naturals. Stored as the image of
/// 0..n-1; every j >= n is fixed. Trailing fixed points are trimmed so
/// equal permutations compare equal.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Index> images);

  static Permutation transposition(Index i);  // swaps i and i+1

  Index apply(Index j) const { return j < img_.size() ? img_[j] : j; }
  bool is_identity() const { return img_.empty(); }
  Permutation inverse() const;
  /// One past the largest moved point.
  Index degree() const { return img_.size(); }
  const std::vector<Index>& images() const { return img_; }

  bool operator==(const Permutation&) const = default;

 private:
  void trim();
  std::vector<Index> img_;
};

/// Function composition: compose(p, q)(j) = p(q(j)).
Permutation compose(const Permutation& p, const Permutation& q);

/// Image of a sigma word or pi word. Letters compose as functions, so the
/// rightmost letter acts first: image(a b) = compose(image(a), image(b)).
Permutation from_sigma_word(const Word& w);

/// A positive sigma word whose image is p.
Word to_sigma_word(const Permutation& p);

}  // namespace tbv
