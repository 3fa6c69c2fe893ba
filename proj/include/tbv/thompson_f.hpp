#pragma once

#include <utility>
#include <vector>

#include "tbv/words.hpp"

namespace tbv {

/// Positive element of the monoid of F in its unique nondecreasing form
/// l_{i0} l_{i1} ... l_{ik}, i0 <= i1 <= ... <= ik.
struct FNormal {
  std::vector<Index> indices;

  std::size_t length() const { return indices.size(); }
  Word to_word() const;
  bool operator==(const FNormal&) const = default;
};

/// Sort a positive lambda word with l_q l_m -> l_m l_{q+1} (m < q).
FNormal normalize_monoid(const Word& w);
FNormal normalize_monoid(std::vector<Index> indices);

struct FFraction {
  FNormal positive;
  FNormal negative;
};

/// w = P N^{-1} in F, obtained by pushing every inverse letter to the right.
FFraction f_fraction(const Word& w);

bool is_trivial_F(const Word& w);
bool equal_F(const Word& a, const Word& b);

}  // namespace tbv
