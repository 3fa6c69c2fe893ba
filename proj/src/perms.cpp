#include "tbv/perms.hpp"

#include <algorithm>
#include <numeric>

namespace tbv {

Permutation::Permutation(std::vector<Index> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto x : img_) {
    if (x >= img_.size() || seen[x]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[x] = true;
  }
  trim();
}

void Permutation::trim() {
  while (!img_.empty() && img_.back() == img_.size() - 1) img_.pop_back();
}

Permutation Permutation::transposition(Index i) {
  std::vector<Index> img(add_index(i, 2));
  std::iota(img.begin(), img.end(), Index{0});
  std::swap(img[i], img[i + 1]);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (Index j = 0; j < img_.size(); ++j) r.img_[img_[j]] = j;
  return r;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  const Index n = std::max(p.degree(), q.degree());
  std::vector<Index> img(n);
  for (Index j = 0; j < n; ++j) img[j] = p.apply(q.apply(j));
  return Permutation(std::move(img));
}

Permutation from_sigma_word(const Word& w) {
  const bool sigmas = uses_only(w, {Family::Sigma});
  const bool pis = uses_only(w, {Family::Pi});
  if (!sigmas && !pis) {
    throw AlphabetError("from_sigma_word expects only sigma or only pi letters");
  }
  Index n = 0;
  for (const auto& s : w) n = std::max(n, add_index(s.index, 2));
  std::vector<Index> img(n);
  std::iota(img.begin(), img.end(), Index{0});
  // img = t_{a1} o ... o t_{ar}; post-compose by walking left to right:
  // (f o t)(j) = f(t(j)) swaps the entries at positions i and i+1.
  for (const auto& s : w) std::swap(img[s.index], img[s.index + 1]);
  return Permutation(std::move(img));
}

Word to_sigma_word(const Permutation& p) {
  // Bubble sort the image sequence; each adjacent swap is one transposition
  // applied on the right, so p = t_{k1} ... t_{kr} with the swaps reversed.
  std::vector<Index> img = p.images();
  std::vector<Symbol> swaps;
  for (std::size_t pass = 0; pass < img.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < img.size(); ++i) {
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        swaps.push_back(sig(i));
      }
    }
  }
  // img o t_{k1} o ... o t_{kr} = id  =>  p = t_{kr} o ... o t_{k1}
  std::reverse(swaps.begin(), swaps.end());
  return Word(std::move(swaps));
}

}  // namespace tbv
