#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tbv/bv_relations.hpp"
#include "tbv/hatgroups.hpp"

using namespace tbv;
using tbv::testing::W;

TEST_SUITE("bv-relations") {
  TEST_CASE("apply_relation examples") {
    CHECK(apply_relation(BVRelation::VShift, {1, 2, 1}, Direction::Forward, 0, W("v2 v1")) ==
          W("v1 v3"));
    CHECK(apply_relation(BVRelation::PiBarVSame, {0, 0, 1}, Direction::Forward, 0,
                         W("pb0 v0")) == W("p0 pb1"));
    CHECK(apply_relation(BVRelation::PiSquare, {3, 0, 1}, Direction::Forward, 0, W("p3 p3"),
                         BVMode::V)
              .empty());
    CHECK(apply_relation(BVRelation::VShift, {1, 2, 1}, Direction::Backward, 1,
                         W("p0 v1 v3 p0")) == W("p0 v2 v1 p0"));
  }

  TEST_CASE("apply_relation errors") {
    CHECK_THROWS_AS(apply_relation(BVRelation::VShift, {2, 1, 1}, Direction::Forward, 0,
                                   W("v1 v2")),
                    RelationMismatch);
    CHECK_THROWS_AS(apply_relation(BVRelation::VShift, {1, 2, 1}, Direction::Forward, 1,
                                   W("v2 v1")),
                    RelationMismatch);
    CHECK_THROWS_AS(apply_relation(BVRelation::PiSquare, {3, 0, 1}, Direction::Forward, 0,
                                   W("p3 p3"), BVMode::BV),
                    RelationMismatch);
    CHECK_THROWS_AS(relation_sides(BVRelation::PiVFar, {1, 0, 1}), RelationMismatch);
    CHECK_THROWS_AS(relation_sides(BVRelation::PiFar, {1, 2, 1}), RelationMismatch);
  }

  TEST_CASE("side conditions") {
    CHECK(relation_admits(BVRelation::PiVFar, {2, 0, 1}));
    CHECK_FALSE(relation_admits(BVRelation::PiVFar, {1, 0, 1}));
    CHECK(relation_admits(BVRelation::PiBarPiFar, {0, 2, 1}));
    CHECK_FALSE(relation_admits(BVRelation::PiBarPiFar, {0, 1, 1}));
    CHECK_FALSE(relation_admits(BVRelation::VShift, {1, 1, 1}));
    CHECK_FALSE(relation_admits(BVRelation::PiFar, {0, 1, -1}));
    CHECK(relation_admits(BVRelation::PiVSame, {0, 0, -1}));
  }

  TEST_CASE("names round-trip and squares are V-only") {
    for (const BVRelation r : all_bv_relations()) {
      CHECK(relation_from_name(relation_name(r)) == r);
      CHECK(relation_enabled(r, BVMode::V));
      const bool square = r == BVRelation::PiSquare || r == BVRelation::PiBarSquare;
      CHECK(relation_enabled(r, BVMode::BV) == !square);
    }
    CHECK_FALSE(relation_from_name("no-such-relation").has_value());
    CHECK(all_bv_relations().size() == 13);
  }

  TEST_CASE("every instance is sound in the hat group") {
    for (const BVRelation r : all_bv_relations()) {
      const GroupMode mode = relation_enabled(r, BVMode::BV) ? GroupMode::BVHat : GroupMode::VHat;
      int instances = 0;
      for (Index m = 0; m <= 6; ++m)
        for (Index q = 0; q <= 6; ++q)
          for (int e : {1, -1}) {
            const RelationParams p{m, q, e};
            if (!relation_admits(r, p)) continue;
            const auto s = relation_sides(r, p);
            CHECK_MESSAGE(equal_hat(expand_bv_generators(s.lhs), expand_bv_generators(s.rhs), mode),
                          relation_name(r), " m=", m, " q=", q, " e=", e);
            ++instances;
          }
      CHECK(instances > 0);
    }
  }

  TEST_CASE("rewriting a random word with a relation preserves the element") {
    std::mt19937_64 rng(41);
    const auto& all = all_bv_relations();
    int applied = 0;
    for (int i = 0; i < 600; ++i) {
      const BVRelation r = all[rng() % all.size()];
      const RelationParams p{rng() % 5, rng() % 5, rng() % 2 ? 1 : -1};
      if (!relation_admits(r, p)) continue;
      const auto s = relation_sides(r, p);
      const Word a = tbv::testing::random_bv_word(rng, 4, 4);
      const Word b = tbv::testing::random_bv_word(rng, 4, 4);
      const bool fwd = rng() % 2;
      const Word w = a * (fwd ? s.lhs : s.rhs) * b;
      const BVMode mode = relation_enabled(r, BVMode::BV) ? BVMode::BV : BVMode::V;
      const Word out = apply_relation(r, p, fwd ? Direction::Forward : Direction::Backward,
                                      a.size(), w, mode);
      CHECK(out == a * (fwd ? s.rhs : s.lhs) * b);
      const GroupMode hm = mode == BVMode::BV ? GroupMode::BVHat : GroupMode::VHat;
      CHECK(equal_hat(expand_bv_generators(w), expand_bv_generators(out), hm));
      ++applied;
    }
    CHECK(applied > 100);
  }
}
