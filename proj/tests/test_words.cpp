#include <doctest.h>

#include <limits>
#include <random>

#include "support.hpp"
#include "tbv/syntax.hpp"
#include "tbv/thompson_f.hpp"
#include "tbv/words.hpp"

using namespace tbv;
using tbv::testing::W;

TEST_SUITE("words") {
  TEST_CASE("free_reduce cancels adjacent inverse pairs") {
    CHECK(free_reduce(Word{lam(0), lam(0, -1)}).empty());
    CHECK(free_reduce(Word{sig(1), lam(2), lam(2, -1), sig(1)}) == Word{sig(1), sig(1)});
    CHECK(free_reduce(Word{vg(3)}) == Word{vg(3)});
    CHECK(free_reduce(W("s0 s1 s1' pb2 pb2' s0'")).empty());
  }

  TEST_CASE("invert reverses and flips exponents") {
    CHECK(invert(Word{sig(0), lam(1)}) == Word{lam(1, -1), sig(0, -1)});
    CHECK(invert(Word{}).empty());
    CHECK(invert(Word{pi(2, -1)}) == Word{pi(2)});
  }

  TEST_CASE("generator images") {
    CHECK(expand_bv_generators(Word{vg(0)}) == W("l0 l1 l0' l0'"));
    CHECK(expand_bv_generators(Word{pib(0)}) == W("l0 s0 l0'"));
    CHECK(expand_bv_generators(Word{vg(1), vg(1, -1)}).empty());
    // v_n = l0^{n+1} l1 l0^{-n-2}; pi_n = l0^{n+2} s1 l0^{-n-2};
    // pibar_n = l0^{n+1} s0 l0^{-n-1}.
    for (Index n = 0; n < 6; ++n) {
      const long k = static_cast<long>(n);
      CHECK(bv_generator_image(Family::V, n) ==
            Word::power(lam(0), k + 1) * Word{lam(1)} * Word::power(lam(0), -k - 2));
      CHECK(bv_generator_image(Family::Pi, n) ==
            Word::power(lam(0), k + 2) * Word{sig(1)} * Word::power(lam(0), -k - 2));
      CHECK(bv_generator_image(Family::PiBar, n) ==
            Word::power(lam(0), k + 1) * Word{sig(0)} * Word::power(lam(0), -k - 1));
    }
    CHECK_THROWS_AS(expand_bv_generators(W("l3 s2")), AlphabetError);
  }

  TEST_CASE("power and concatenation") {
    CHECK(Word::power(lam(2), 3) == W("l2 l2 l2"));
    CHECK(Word::power(lam(2), -2) == W("l2' l2'"));
    CHECK(Word::power(lam(2), 0).empty());
    CHECK(W("l0") * W("s1'") == W("l0 s1'"));
  }

  TEST_CASE("index arithmetic is checked") {
    const Index top = std::numeric_limits<Index>::max();
    CHECK(add_index(3, 4) == 7);
    CHECK_THROWS_AS(add_index(top, 1), std::overflow_error);
  }

  TEST_CASE("word inverse is a two-sided inverse under free reduction") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      const Word w = tbv::testing::random_word(
          rng, {Family::Lambda, Family::Sigma, Family::V, Family::Pi, Family::PiBar}, 6,
          rng() % 12);
      CHECK(free_reduce(w * invert(w)).empty());
      CHECK(free_reduce(invert(w) * w).empty());
      CHECK(invert(invert(w)) == w);
      CHECK(free_reduce(free_reduce(w)) == free_reduce(w));
    }
  }
}

TEST_SUITE("syntax") {
  TEST_CASE("parse examples") {
    CHECK(parse_word("l0 l1 l0' l0'") == Word{lam(0), lam(1), lam(0, -1), lam(0, -1)});
    CHECK(parse_word("l0 l1 l0' l0'") == expand_bv_generators(Word{vg(0)}));
    CHECK(parse_word("").empty());
    CHECK(parse_word("   ").empty());
    CHECK(parse_word("s0 s0") == Word{sig(0), sig(0)});
    CHECK(parse_word("pb3' v0 p2") == Word{pib(3, -1), vg(0), pi(2)});
    CHECK(parse_word("  v10\tp0' ") == Word{vg(10), pi(0, -1)});
  }

  TEST_CASE("parse errors report the position") {
    auto position_of = [](const char* text) -> long {
      try {
        parse_word(text);
      } catch (const ParseError& e) {
        return static_cast<long>(e.position);
      }
      return -1;
    };
    CHECK(position_of("x0") == 0);
    CHECK(position_of("l0 q1") == 3);
    // A missing index is reported where the index should start.
    CHECK(position_of("l") == 1);
    CHECK(position_of("l0 s") == 4);
    CHECK(position_of("l0 la") == 4);
    CHECK(position_of("l0''") >= 0);
    CHECK(position_of("l99999999999999999999999") >= 0);
    CHECK_THROWS_AS(parse_word("v0 z"), std::invalid_argument);
  }

  TEST_CASE("format then parse round-trips") {
    CHECK(format_word(W("pb3' v0 p2")) == "pb3' v0 p2");
    CHECK(format_word(Word{}).empty());
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
      const Word w = tbv::testing::random_word(
          rng, {Family::Lambda, Family::Sigma, Family::V, Family::Pi, Family::PiBar}, 40,
          rng() % 15);
      CHECK(parse_word(format_word(w)) == w);
    }
  }
}
