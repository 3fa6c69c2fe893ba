#include "tbv/thompson_f.hpp"

namespace tbv {

Word FNormal::to_word() const {
  std::vector<Symbol> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(lam(i));
  return Word(std::move(out));
}

FNormal normalize_monoid(std::vector<Index> idx) {
  // Leftmost violation first. Each swap removes one inversion and the
  // length never changes, so the loop terminates.
  std::size_t i = 0;
  while (i + 1 < idx.size()) {
    if (idx[i + 1] < idx[i]) {
      const Index q = idx[i];
      idx[i] = idx[i + 1];
      idx[i + 1] = add_index(q, 1);
      i = i == 0 ? 0 : i - 1;
    } else {
      ++i;
    }
  }
  return FNormal{std::move(idx)};
}

FNormal normalize_monoid(const Word& w) {
  std::vector<Index> idx;
  idx.reserve(w.size());
  for (const auto& s : w) {
    if (s.family != Family::Lambda || s.exp != 1) {
      throw AlphabetError("normalize_monoid expects positive lambda letters, got " +
                          to_string(s));
    }
    idx.push_back(s.index);
  }
  return normalize_monoid(std::move(idx));
}

FFraction f_fraction(const Word& w) {
  if (!uses_only(w, {Family::Lambda})) {
    throw AlphabetError("f_fraction expects lambda letters only");
  }
  // Scan right to left, keeping the processed suffix as pos * neg^{-1}
  // with `pos` positive. An inverse letter is pushed through `pos`.
  const Word reduced = free_reduce(w);
  std::vector<Index> pos;  // left to right
  std::vector<Index> neg;  // l_{neg[0]}^{-1} l_{neg[1]}^{-1} ... left to right
  for (auto it = reduced.vec().rbegin(); it != reduced.vec().rend(); ++it) {
    if (it->exp > 0) {
      pos.insert(pos.begin(), it->index);
      continue;
    }
    Index m = it->index;
    std::vector<Index> out;
    out.reserve(pos.size());
    bool cancelled = false;
    std::size_t j = 0;
    for (; j < pos.size(); ++j) {
      const Index q = pos[j];
      if (q == m) {
        cancelled = true;
        break;
      }
      if (m < q) {
        out.push_back(add_index(q, 1));  // l_m^-1 l_q -> l_{q+1} l_m^-1
      } else {
        out.push_back(q);  // l_m^-1 l_q -> l_q l_{m+1}^-1
        m = add_index(m, 1);
      }
    }
    if (cancelled) {
      out.insert(out.end(), pos.begin() + static_cast<long>(j) + 1, pos.end());
    } else {
      neg.insert(neg.begin(), m);
    }
    pos = std::move(out);
  }
  // N^{-1} = l_{neg0}^{-1} ... l_{negr}^{-1}  =>  N = l_{negr} ... l_{neg0}
  std::vector<Index> n(neg.rbegin(), neg.rend());
  return {normalize_monoid(std::move(pos)), normalize_monoid(std::move(n))};
}

bool is_trivial_F(const Word& w) {
  auto fr = f_fraction(w);
  return fr.positive == fr.negative;
}

bool equal_F(const Word& a, const Word& b) { return is_trivial_F(a * invert(b)); }

}  // namespace tbv
