#pragma once

// Independent oracles and generators shared by the unit tests and the
// acceptance binary. Nothing here calls the rewriting code under test except
// the braid fallback in hat_oracle, which is flagged in its result.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tbv/braid.hpp"
#include "tbv/syntax.hpp"
#include "tbv/words.hpp"

namespace tbv::testing {

inline Word W(const std::string& text) { return parse_word(text); }

// ---------------------------------------------------------------- generators

inline Word random_word(std::mt19937_64& rng, std::initializer_list<Family> fams,
                        Index max_index, std::size_t len, bool allow_inverse = true) {
  const std::vector<Family> fs(fams);
  std::vector<Symbol> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const Family f = fs[rng() % fs.size()];
    const int e = allow_inverse && rng() % 2 ? -1 : 1;
    out.push_back(Symbol{f, rng() % (max_index + 1), e});
  }
  return Word(std::move(out));
}

inline Word random_bv_word(std::mt19937_64& rng, Index max_index, std::size_t max_len) {
  return random_word(rng, {Family::V, Family::Pi, Family::PiBar}, max_index,
                     rng() % (max_len + 1));
}

inline Word random_hat_word(std::mt19937_64& rng, Index max_index, std::size_t max_len) {
  return random_word(rng, {Family::Lambda, Family::Sigma}, max_index, rng() % (max_len + 1));
}

inline BraidWord random_braid(std::mt19937_64& rng, Index max_index, std::size_t len) {
  std::vector<BraidLetter> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back({rng() % (max_index + 1), rng() % 2 ? 1 : -1});
  return BraidWord(std::move(out));
}

// lhs * rhs^-1 for a random Artin relation with indices <= max_index (>= 2):
// far commutation, the braid relation, or a free cancellation pair.
inline BraidWord random_braid_relator(std::mt19937_64& rng, Index max_index) {
  const Index m = rng() % (max_index + 1);
  switch (rng() % 3) {
    case 0: {
      const BraidWord a({{m, rng() % 2 ? 1 : -1}});
      return a * a.inverse();
    }
    case 1: {
      const Index lo = rng() % (max_index - 1);
      const Index hi = lo + 2 + rng() % (max_index - lo - 1);
      const BraidWord a({{lo, 1}, {hi, 1}}), b({{hi, 1}, {lo, 1}});
      return a * b.inverse();
    }
    default: {
      const Index k = std::min<Index>(m, max_index - 1);
      const BraidWord a({{k, 1}, {k + 1, 1}, {k, 1}}), b({{k + 1, 1}, {k, 1}, {k + 1, 1}});
      return a * b.inverse();
    }
  }
}

// w with `r` spliced in at a random position.
inline BraidWord insert_at_random(const BraidWord& w, const BraidWord& r, std::mt19937_64& rng) {
  const std::size_t pos = rng() % (w.size() + 1);
  std::vector<BraidLetter> out(w.letters().begin(), w.letters().begin() + static_cast<long>(pos));
  out.insert(out.end(), r.letters().begin(), r.letters().end());
  out.insert(out.end(), w.letters().begin() + static_cast<long>(pos), w.letters().end());
  return BraidWord(std::move(out));
}

// ------------------------------------------------- positive monoid of F

// Applies l_q l_m -> l_m l_{q+1} (m < q) at a uniformly random descent until
// none is left.
inline std::vector<Index> random_order_sort(std::vector<Index> w, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> descents;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i + 1] < w[i]) descents.push_back(i);
    if (descents.empty()) return w;
    const std::size_t i = descents[rng() % descents.size()];
    const Index q = w[i], m = w[i + 1];
    w[i] = m;
    w[i + 1] = q + 1;
  }
}

// ------------------------------------------------------------- permutations

// Image of a sigma word; rightmost letter acts first. Stored densely on
// 0..deg-1.
inline std::vector<Index> sigma_images(const Word& w, std::size_t deg) {
  std::vector<Index> img(deg);
  for (std::size_t j = 0; j < deg; ++j) img[j] = j;
  // p = s_{a1} ... s_{ak}; p(j) = s_{a1}(...(s_{ak}(j))).
  for (std::size_t j = 0; j < deg; ++j) {
    Index x = j;
    for (auto it = w.vec().rbegin(); it != w.vec().rend(); ++it) {
      if (x == it->index) x = x + 1;
      else if (x == it->index + 1) x = x - 1;
    }
    img[j] = x;
  }
  return img;
}

inline bool sigma_word_is_identity(const Word& w) {
  Index deg = 0;
  for (const auto& s : w) deg = std::max<Index>(deg, s.index + 2);
  const auto img = sigma_images(w, deg);
  for (std::size_t j = 0; j < img.size(); ++j)
    if (img[j] != j) return false;
  return true;
}

// ------------------------------------------------------------ braid groups

// Artin's faithful action of B_n on the free group <x_0..x_{n-1}>. Letters
// of free-group words are +-(j+1). Returns nullopt when an image grows past
// `cap` letters.
inline std::optional<bool> artin_trivial(const BraidWord& b, std::size_t cap = 4096) {
  const std::size_t n = b.strands();
  using FWord = std::vector<long>;
  auto reduce_push = [](FWord& out, long x) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  };
  std::vector<FWord> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = {static_cast<long>(j) + 1};
  for (const auto& l : b.letters()) {
    const long a = static_cast<long>(l.index) + 1, c = a + 1;
    // Substitution for the generator pair (x_a, x_c); other generators fixed.
    FWord sa, sc;
    if (l.exp > 0) {
      sa = {a, c, -a};
      sc = {a};
    } else {
      sa = {c};
      sc = {-c, a, c};
    }
    for (auto& w : img) {
      FWord out;
      for (long x : w) {
        const long g = x > 0 ? x : -x;
        const FWord* sub = g == a ? &sa : g == c ? &sc : nullptr;
        if (!sub) {
          reduce_push(out, x);
        } else if (x > 0) {
          for (long y : *sub) reduce_push(out, y);
        } else {
          for (auto it = sub->rbegin(); it != sub->rend(); ++it) reduce_push(out, -*it);
        }
      }
      if (out.size() > cap) return std::nullopt;
      w = std::move(out);
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (img[j] != FWord{static_cast<long>(j) + 1}) return false;
  return true;
}

// -------------------------------------------------------------- hat groups

// Presentation rules restated locally, with every rewrite moving positive
// lambdas left and negative lambdas right:
//   s^e_q l_m:   q > m: l_m s_{q+1};  q = m: l_{m+1} s_m s_{m+1};
//                q = m-1: l_{m-1} s_m s_{m-1};  q < m-1: l_m s_q
//   l_m^-1 l_q:  q > m: l_{q+1} l_m^-1;  q < m: l_q l_{m+1}^-1
//   l_m^-1 s^e_q: q > m: s_{q+1} l_m^-1;  q = m: s_{m+1} s_m l_{m+1}^-1;
//                q = m-1: s_{m-1} s_m l_{m-1}^-1;  q < m-1: s_q l_m^-1
// The rewrite position is chosen uniformly among all redexes.
struct HatOracleResult {
  std::vector<Index> f, g;  // sorted positive parts
  Word beta;                // sigma word
  bool trivial = false;
  bool braid_decided_by_artin = true;
};

inline std::optional<HatOracleResult> hat_oracle(const Word& input, bool vhat,
                                                 std::mt19937_64& rng,
                                                 std::size_t max_steps = 2'000'000) {
  std::vector<Symbol> w(input.begin(), input.end());
  if (vhat)
    for (auto& s : w)
      if (s.family == Family::Sigma) s.exp = 1;
  auto is_pos_lam = [](const Symbol& s) { return s.family == Family::Lambda && s.exp > 0; };
  auto is_neg_lam = [](const Symbol& s) { return s.family == Family::Lambda && s.exp < 0; };
  auto is_sig = [](const Symbol& s) { return s.family == Family::Sigma; };
  for (std::size_t step = 0;; ++step) {
    if (step > max_steps) return std::nullopt;
    std::vector<std::size_t> redexes;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const Symbol &a = w[i], &b = w[i + 1];
      const bool cancel = a.inverse_of(b) || (vhat && is_sig(a) && a == b);
      if (cancel || (is_sig(a) && is_pos_lam(b)) ||
          (is_neg_lam(a) && (is_pos_lam(b) || is_sig(b))))
        redexes.push_back(i);
    }
    if (redexes.empty()) break;
    const std::size_t i = redexes[rng() % redexes.size()];
    const Symbol a = w[i], b = w[i + 1];
    std::vector<Symbol> rep;
    if (a.inverse_of(b) || (vhat && is_sig(a) && a == b)) {
      // cancels
    } else if (is_sig(a)) {
      const Index q = a.index, m = b.index;
      const int e = a.exp;
      if (q > m) rep = {lam(m), sig(q + 1, e)};
      else if (q == m) rep = {lam(m + 1), sig(m, e), sig(m + 1, e)};
      else if (q + 1 == m) rep = {lam(m - 1), sig(m, e), sig(m - 1, e)};
      else rep = {lam(m), sig(q, e)};
    } else if (is_pos_lam(b)) {
      const Index m = a.index, q = b.index;
      if (q > m) rep = {lam(q + 1), lam(m, -1)};
      else rep = {lam(q), lam(m + 1, -1)};
    } else {
      const Index m = a.index, q = b.index;
      const int e = b.exp;
      if (q > m) rep = {sig(q + 1, e), lam(m, -1)};
      else if (q == m) rep = {sig(m + 1, e), sig(m, e), lam(m + 1, -1)};
      else if (q + 1 == m) rep = {sig(m - 1, e), sig(m, e), lam(m - 1, -1)};
      else rep = {sig(q, e), lam(m, -1)};
    }
    w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
    w.insert(w.begin() + static_cast<long>(i), rep.begin(), rep.end());
  }
  HatOracleResult r;
  std::vector<Symbol> sigmas;
  std::vector<Index> neg;
  for (const auto& s : w) {
    if (is_pos_lam(s)) r.f.push_back(s.index);
    else if (is_sig(s)) sigmas.push_back(s);
    else neg.push_back(s.index);
  }
  std::reverse(neg.begin(), neg.end());
  r.f = random_order_sort(r.f, rng);
  r.g = random_order_sort(neg, rng);
  r.beta = Word(sigmas);
  bool beta_trivial;
  if (vhat) {
    beta_trivial = sigma_word_is_identity(r.beta);
  } else {
    const auto a = artin_trivial(BraidWord::from_word(r.beta));
    r.braid_decided_by_artin = a.has_value();
    beta_trivial = a ? *a : is_trivial_braid(BraidWord::from_word(r.beta));
  }
  r.trivial = r.f == r.g && beta_trivial;
  return r;
}

}  // namespace tbv::testing
