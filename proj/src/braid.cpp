#include "tbv/braid.hpp"

#include <algorithm>

namespace tbv {

BraidWord BraidWord::from_word(const Word& w) {
  const bool sigmas = uses_only(w, {Family::Sigma});
  const bool pis = uses_only(w, {Family::Pi});
  if (!sigmas && !pis) throw AlphabetError("braid words use sigma letters only");
  std::vector<BraidLetter> out;
  out.reserve(w.size());
  for (const auto& s : w) out.push_back({s.index, s.exp});
  return BraidWord(std::move(out));
}

Index BraidWord::strands() const {
  Index n = 1;
  for (const auto& l : letters_) n = std::max(n, add_index(l.index, 2));
  return n;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  auto out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(std::move(out));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back({it->index, -it->exp});
  }
  return BraidWord(std::move(out));
}

Word BraidWord::to_word() const {
  std::vector<Symbol> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(sig(l.index, l.exp));
  return Word(std::move(out));
}

long exponent_sum(const BraidWord& b) {
  long s = 0;
  for (const auto& l : b.letters()) s += l.exp;
  return s;
}

Permutation permutation_image(const BraidWord& b) {
  return from_sigma_word(b.to_word());
}

namespace {

void free_reduce_in_place(std::vector<BraidLetter>& w) {
  std::size_t k = 0;
  for (const auto& l : w) {
    if (k > 0 && w[k - 1].index == l.index && w[k - 1].exp == -l.exp) {
      --k;
    } else {
      w[k++] = l;
    }
  }
  w.resize(k);
}

struct Handle {
  std::size_t begin;
  std::size_t end;  // inclusive
};

// The handle sigma_i^e v sigma_i^-e with the smallest right end. Its inner
// part contains only letters of index > i and, since every handle ends at
// or after it, no inner handle: it is permitted.
bool find_handle(const std::vector<BraidLetter>& w, Handle& h) {
  // Stack of positions; finds the nearest earlier letter of index <= current.
  std::vector<std::size_t> stack;
  for (std::size_t q = 0; q < w.size(); ++q) {
    while (!stack.empty() && w[stack.back()].index > w[q].index) stack.pop_back();
    if (!stack.empty()) {
      const auto p = stack.back();
      if (w[p].index == w[q].index && w[p].exp == -w[q].exp) {
        h = {p, q};
        return true;
      }
    }
    stack.push_back(q);
  }
  return false;
}

}  // namespace

HandleReduction reduce_handles(const BraidWord& b, std::uint64_t max_steps) {
  std::vector<BraidLetter> w = b.letters();
  free_reduce_in_place(w);
  std::uint64_t steps = 0;
  Handle h{};
  std::vector<BraidLetter> next;
  while (find_handle(w, h)) {
    if (++steps > max_steps) {
      throw StepCapExceeded("braid handle reduction exceeded " +
                            std::to_string(max_steps) + " steps");
    }
    const Index i = w[h.begin].index;
    const int e = w[h.begin].exp;
    next.clear();
    next.insert(next.end(), w.begin(), w.begin() + static_cast<long>(h.begin));
    // sigma_i^e sigma_{i+1}^d sigma_i^-e = sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e;
    // higher letters commute with sigma_i.
    for (std::size_t k = h.begin + 1; k < h.end; ++k) {
      const auto& l = w[k];
      if (l.index == i + 1) {
        next.push_back({i + 1, -e});
        next.push_back({i, l.exp});
        next.push_back({i + 1, e});
      } else {
        next.push_back(l);
      }
    }
    next.insert(next.end(), w.begin() + static_cast<long>(h.end) + 1, w.end());
    free_reduce_in_place(next);
    w.swap(next);
  }
  return {BraidWord(std::move(w)), steps};
}

bool is_trivial_braid(const BraidWord& b, std::uint64_t max_steps) {
  if (exponent_sum(b) != 0) return false;
  if (!permutation_image(b).is_identity()) return false;
  return reduce_handles(b, max_steps).reduced.empty();
}

bool equal_braid(const BraidWord& a, const BraidWord& b, std::uint64_t max_steps) {
  return is_trivial_braid(a * b.inverse(), max_steps);
}

}  // namespace tbv
