#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tbv/bv_lmr.hpp"
#include "tbv/hatgroups.hpp"

namespace tbv {

struct SelftestConfig {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  Index max_index = 5;
  std::size_t max_len = 10;
  LmrOptions lmr;
  HatOptions hat;
};

struct ModeTally {
  std::size_t agree = 0;
  std::size_t trivial = 0;  // as judged by the hat-group decider
  std::size_t capped = 0;
};

struct SelftestResult {
  std::size_t samples = 0;
  ModeTally bv;
  ModeTally v;
  std::vector<std::string> disagreements;  // "MODE: word"

  bool ok() const {
    return disagreements.empty() && bv.capped == 0 && v.capped == 0 &&
           bv.agree == samples && v.agree == samples;
  }
};

/// Draws BV-alphabet words and compares the intrinsic decider with the
/// hat-group decider on the expansion, in both V and BV. Sample i is a
/// uniform random word (length <= max_len, index <= max_index) when i % 4
/// is 0 or 1, a conjugate u r u^-1 of a random relator r when i % 4 == 2,
/// and a product of two such conjugates when i % 4 == 3. Constructed words
/// may exceed max_len.
SelftestResult run_selftest(const SelftestConfig& cfg);

/// The sample stream for `seed`, in order.
std::vector<Word> selftest_words(std::uint64_t seed, std::size_t samples, Index max_index,
                                 std::size_t max_len);

}  // namespace tbv
