#include "selftest.hpp"

#include <random>

#include "tbv/bv_relations.hpp"

namespace tbv {

namespace {

Word random_word(std::mt19937_64& rng, Index max_index, std::size_t len) {
  static constexpr Family kFamilies[] = {Family::V, Family::Pi, Family::PiBar};
  std::vector<Symbol> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const Family f = kFamilies[rng() % 3];
    const Index idx = rng() % (max_index + 1);
    out.push_back(Symbol{f, idx, rng() % 2 ? 1 : -1});
  }
  return Word(std::move(out));
}

// lhs * rhs^-1 of a random admissible relation instance.
Word random_relator(std::mt19937_64& rng, Index max_index) {
  const auto& all = all_bv_relations();
  for (;;) {
    const BVRelation r = all[rng() % all.size()];
    const RelationParams p{rng() % (max_index + 1), rng() % (max_index + 1),
                           rng() % 2 ? 1 : -1};
    if (!relation_admits(r, p)) continue;
    const auto s = relation_sides(r, p);
    return s.lhs * invert(s.rhs);
  }
}

Word conjugated_relator(std::mt19937_64& rng, Index max_index, std::size_t max_len) {
  const Word u = random_word(rng, max_index, rng() % (max_len / 2 + 1));
  return u * random_relator(rng, max_index) * invert(u);
}

}  // namespace

std::vector<Word> selftest_words(std::uint64_t seed, std::size_t samples, Index max_index,
                                 std::size_t max_len) {
  std::mt19937_64 rng(seed);
  std::vector<Word> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    switch (i % 4) {
      case 2:
        out.push_back(conjugated_relator(rng, max_index, max_len));
        break;
      case 3: {
        const Word a = conjugated_relator(rng, max_index, max_len);
        out.push_back(a * conjugated_relator(rng, max_index, max_len));
        break;
      }
      default:
        out.push_back(random_word(rng, max_index, rng() % (max_len + 1)));
    }
  }
  return out;
}

SelftestResult run_selftest(const SelftestConfig& cfg) {
  SelftestResult res;
  const auto words = selftest_words(cfg.seed, cfg.samples, cfg.max_index, cfg.max_len);
  res.samples = words.size();
  for (const auto& w : words) {
    const Word expanded = expand_bv_generators(w);
    for (const BVMode mode : {BVMode::BV, BVMode::V}) {
      ModeTally& t = mode == BVMode::BV ? res.bv : res.v;
      try {
        const bool lmr = is_trivial_bv(w, mode, cfg.lmr);
        const bool hat = is_trivial_hat(
            expanded, mode == BVMode::BV ? GroupMode::BVHat : GroupMode::VHat, cfg.hat);
        if (lmr == hat) {
          ++t.agree;
        } else {
          res.disagreements.push_back(std::string(mode_name(mode)) + ": " + to_string(w));
        }
        if (hat) ++t.trivial;
      } catch (const StepCapExceeded&) {
        ++t.capped;
      }
    }
  }
  return res;
}

}  // namespace tbv
