#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tbv/hatgroups.hpp"
#include "tbv/thompson_f.hpp"

using namespace tbv;
using tbv::testing::W;

namespace {

constexpr GroupMode kModes[] = {GroupMode::BVHat, GroupMode::VHat};

// Relators of the hat presentations with indices <= n.
std::vector<Word> hat_relators(Index n, GroupMode mode) {
  std::vector<Word> out;
  for (Index q = 0; q <= n; ++q) {
    for (Index m = 0; m <= n; ++m) {
      if (m < q) out.push_back(Word{lam(q), lam(m)} *
                               invert(Word{lam(m), lam(q + 1)}));
      for (int e : {1, -1}) {
        if (m < q) out.push_back(Word{sig(q, e), lam(m)} * invert(Word{lam(m), sig(q + 1, e)}));
        if (m == q)
          out.push_back(Word{sig(m, e), lam(m)} *
                        invert(Word{lam(m + 1), sig(m, e), sig(m + 1, e)}));
        if (m == q + 1)
          out.push_back(Word{sig(q, e), lam(m)} * invert(Word{lam(q), sig(q + 1, e), sig(q, e)}));
        if (m > q + 1) out.push_back(Word{sig(q, e), lam(m)} * invert(Word{lam(m), sig(q, e)}));
      }
      if (m + 2 <= q) out.push_back(Word{sig(m), sig(q), sig(m, -1), sig(q, -1)});
    }
    out.push_back(Word{sig(q), sig(q + 1), sig(q), sig(q + 1, -1), sig(q, -1), sig(q + 1, -1)});
    if (mode == GroupMode::VHat) out.push_back(Word{sig(q), sig(q)});
  }
  return out;
}

}  // namespace

TEST_SUITE("hatgroups") {
  TEST_CASE("sigma past lambda examples") {
    CHECK(push_sigma_past_lambda(sig(2), lam(0)) == W("l0 s3"));
    CHECK(push_sigma_past_lambda(sig(0), lam(0)) == W("l1 s0 s1"));
    CHECK(push_sigma_past_lambda(sig(0, -1), lam(0)) == W("l1 s0' s1'"));
    CHECK(push_sigma_past_lambda(sig(1), lam(2)) == W("l1 s2 s1"));
    CHECK(push_sigma_past_lambda(sig(0), lam(5)) == W("l5 s0"));
    CHECK_THROWS_AS(push_sigma_past_lambda(lam(0), lam(0)), AlphabetError);
  }

  TEST_CASE("lambda inverse right examples") {
    CHECK(push_lambda_inverse_right(lam(1, -1), lam(3)) == W("l4 l1'"));
    CHECK(push_lambda_inverse_right(lam(1, -1), sig(2)) == W("s3 l1'"));
    CHECK(push_lambda_inverse_right(lam(0, -1), lam(0)).empty());
    CHECK(push_lambda_inverse_right(lam(3, -1), lam(1)) == W("l1 l4'"));
    CHECK(push_lambda_inverse_right(lam(2, -1), sig(2, -1)) == W("s3' s2' l3'"));
    CHECK(push_lambda_inverse_right(lam(2, -1), sig(1)) == W("s1 s2 l1'"));
    CHECK(push_lambda_inverse_right(lam(4, -1), sig(1)) == W("s1 l4'"));
    CHECK_THROWS_AS(push_lambda_inverse_right(lam(0), lam(0)), AlphabetError);
  }

  TEST_CASE("every local rule is an identity in both groups") {
    for (const GroupMode mode : kModes) {
      for (Index q = 0; q < 6; ++q) {
        for (Index m = 0; m < 6; ++m) {
          for (int e : {1, -1}) {
            CHECK(equal_hat(Word{sig(q, e), lam(m)}, push_sigma_past_lambda(sig(q, e), lam(m)),
                            mode));
            CHECK(equal_hat(Word{lam(m, -1), sig(q, e)},
                            push_lambda_inverse_right(lam(m, -1), sig(q, e)), mode));
          }
          CHECK(equal_hat(Word{lam(m, -1), lam(q)}, push_lambda_inverse_right(lam(m, -1), lam(q)),
                          mode));
        }
      }
    }
  }

  TEST_CASE("canonical form examples") {
    const HatFraction a = canonicalize_hat(W("s0 l0"), GroupMode::BVHat);
    CHECK(a.f_part.indices == std::vector<Index>{1});
    CHECK(a.beta_word() == W("s0 s1"));
    CHECK(a.g_part.indices.empty());

    const HatFraction b = canonicalize_hat(W("l0 l0'"), GroupMode::BVHat);
    CHECK(b.f_part.indices.empty());
    CHECK(b.beta_word().empty());
    CHECK(b.g_part.indices.empty());

    const HatFraction c = canonicalize_hat(W("l0 s0 l0' l0 s0' l0'"), GroupMode::BVHat);
    CHECK(c.f_part == c.g_part);
    CHECK(is_trivial_braid(std::get<BraidWord>(c.beta)));

    const HatFraction d = canonicalize_hat(W("s0 s0"), GroupMode::VHat);
    CHECK(std::holds_alternative<Permutation>(d.beta));
    CHECK(std::get<Permutation>(d.beta).is_identity());
    CHECK_THROWS_AS(canonicalize_hat(W("v0"), GroupMode::BVHat), AlphabetError);
  }

  TEST_CASE("triviality and equality examples") {
    CHECK(is_trivial_hat(W("s0 s0"), GroupMode::VHat));
    CHECK_FALSE(is_trivial_hat(W("s0 s0"), GroupMode::BVHat));
    CHECK_FALSE(is_trivial_hat(W("l1 l2'"), GroupMode::BVHat));
    CHECK_FALSE(is_trivial_hat(W("l1 l2'"), GroupMode::VHat));
    CHECK(equal_hat(W("s1 l1"), W("l2 s1 s2"), GroupMode::BVHat));
    CHECK(equal_hat(W("s3' l0 s1"), W("s3' l0 s1"), GroupMode::BVHat));
    CHECK_FALSE(equal_hat(W("l0"), W("s0"), GroupMode::BVHat));
    CHECK_FALSE(equal_hat(W("l0"), W("s0"), GroupMode::VHat));
  }

  TEST_CASE("every defining relator up to index 8 is trivial") {
    for (const GroupMode mode : kModes)
      for (const Word& r : hat_relators(8, mode)) CHECK_MESSAGE(is_trivial_hat(r, mode), to_string(r));
  }

  TEST_CASE("conjugation by lambda shifts indices") {
    for (Index m = 0; m < 5; ++m) {
      for (Index q = m + 1; q < 8; ++q) {
        CHECK(equal_hat(Word{lam(m, -1), lam(q), lam(m)}, Word{lam(q + 1)}, GroupMode::BVHat));
        CHECK(equal_hat(Word{lam(m, -1), sig(q), lam(m)}, Word{sig(q + 1)}, GroupMode::BVHat));
      }
    }
    // l0^-i s1 l0^i = s_{i+1}, l0^-i l1 l0^i = l_{i+1}.
    for (long i = 1; i < 6; ++i) {
      const Word c = Word::power(lam(0), -i);
      const Word ci = Word::power(lam(0), i);
      CHECK(equal_hat(c * Word{sig(1)} * ci, Word{sig(static_cast<Index>(i) + 1)},
                      GroupMode::BVHat));
      CHECK(equal_hat(c * Word{lam(1)} * ci, Word{lam(static_cast<Index>(i) + 1)},
                      GroupMode::VHat));
    }
  }

  TEST_CASE("canonical fraction reconstructs the input") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 400; ++i) {
      const Word w = tbv::testing::random_hat_word(rng, 4, 10);
      for (const GroupMode mode : kModes) {
        const HatFraction h = canonicalize_hat(w, mode);
        CHECK(std::is_sorted(h.f_part.indices.begin(), h.f_part.indices.end()));
        CHECK(std::is_sorted(h.g_part.indices.begin(), h.g_part.indices.end()));
        CHECK(is_trivial_hat(w * invert(h.to_word()), mode));
        CHECK(equal_hat(h.to_word(), w, mode));
      }
    }
  }

  TEST_CASE("decider agrees with random-order rewriting") {
    std::mt19937_64 rng(32);
    const auto relators = hat_relators(4, GroupMode::VHat);
    int trivial_seen = 0;
    for (int i = 0; i < 1500; ++i) {
      Word w = tbv::testing::random_hat_word(rng, 4, 10);
      if (i % 2 == 1) {
        const Word u = tbv::testing::random_hat_word(rng, 4, 5);
        w = u * relators[rng() % relators.size()] * invert(u);
      }
      for (const GroupMode mode : kModes) {
        const bool vhat = mode == GroupMode::VHat;
        const auto oracle = tbv::testing::hat_oracle(w, vhat, rng);
        REQUIRE(oracle.has_value());
        const HatDecision d = decide_hat(w, mode);
        CHECK_MESSAGE(d.trivial == oracle->trivial, to_string(w));
        if (d.trivial) ++trivial_seen;
      }
    }
    CHECK(trivial_seen > 500);
  }

  TEST_CASE("relator insertion preserves the verdict") {
    std::mt19937_64 rng(33);
    for (const GroupMode mode : kModes) {
      const auto relators = hat_relators(5, mode);
      for (int i = 0; i < 300; ++i) {
        const Word a = tbv::testing::random_hat_word(rng, 5, 6);
        const Word b = tbv::testing::random_hat_word(rng, 5, 6);
        const Word r = relators[rng() % relators.size()];
        CHECK(equal_hat(a * b, a * r * b, mode));
        CHECK(is_trivial_hat(a * invert(a), mode));
      }
    }
  }

  TEST_CASE("trivial in the braided group implies trivial in the permutation group") {
    std::mt19937_64 rng(34);
    const auto relators = hat_relators(4, GroupMode::BVHat);
    for (int i = 0; i < 400; ++i) {
      const Word u = tbv::testing::random_hat_word(rng, 4, 6);
      Word w = u * relators[rng() % relators.size()] * invert(u);
      if (i % 2) w = w * tbv::testing::random_hat_word(rng, 4, 4);
      if (is_trivial_hat(w, GroupMode::BVHat)) CHECK(is_trivial_hat(w, GroupMode::VHat));
    }
  }

  TEST_CASE("step cap is enforced") {
    HatOptions opts;
    opts.max_steps = 1;
    CHECK_THROWS_AS(canonicalize_hat(W("l0' l3 l0' s4 l1 s2 l0"), GroupMode::BVHat, opts),
                    StepCapExceeded);
  }

  TEST_CASE("a corrupted rule table changes a verdict") {
    static const auto bad_sigma = +[](Symbol s, Symbol l) -> Word {
      if (s.index == l.index) return Word{lam(l.index + 1), sig(s.index + 1, s.exp), sig(s.index, s.exp)};
      return push_sigma_past_lambda(s, l);
    };
    static const RuleTable bad{bad_sigma, &push_lambda_inverse_right};
    HatOptions opts;
    opts.rules = &bad;
    const Word relator = W("s0 l0") * invert(W("l1 s0 s1"));
    CHECK(is_trivial_hat(relator, GroupMode::BVHat));
    CHECK_FALSE(is_trivial_hat(relator, GroupMode::BVHat, opts));
  }
}
