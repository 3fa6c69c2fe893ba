#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "tbv/braid.hpp"
#include "tbv/perms.hpp"
#include "tbv/thompson_f.hpp"
#include "tbv/words.hpp"

namespace tbv {

/// VHat carries the extra relations sigma_m^2 = 1; BVHat does not.
enum class GroupMode { VHat, BVHat };

const char* mode_name(GroupMode m);

/// Local rewriting rules used by the canonicalizer. Both functions return
/// the right-hand side of a rule applied to a two-letter left-hand side.
///  - sigma_past_lambda(s_q^e, l_m): one positive lambda followed by one or
///    two sigma letters.
///  - lambda_inverse_right(l_m^-1, x): letters ending in a single l^-1, or
///    the empty word when x = l_m.
struct RuleTable {
  Word (*sigma_past_lambda)(Symbol s, Symbol l);
  Word (*lambda_inverse_right)(Symbol l, Symbol x);
};

Word push_sigma_past_lambda(Symbol s, Symbol l);
Word push_lambda_inverse_right(Symbol l, Symbol x);

const RuleTable& default_rule_table();

inline constexpr std::uint64_t kDefaultHatSteps = 10'000'000;

struct HatOptions {
  std::uint64_t max_steps = kDefaultHatSteps;
  std::uint64_t braid_steps = kDefaultBraidSteps;
  const RuleTable* rules = nullptr;  // nullptr: default_rule_table()
};

/// f_part * beta * g_part^{-1}.
struct HatFraction {
  GroupMode mode = GroupMode::BVHat;
  FNormal f_part;
  std::variant<BraidWord, Permutation> beta;  // BraidWord in BVHat
  FNormal g_part;
  std::uint64_t steps = 0;  // rewriting steps spent computing it

  Word beta_word() const;
  /// f_part * beta * g_part^{-1} as a lambda/sigma word.
  Word to_word() const;
};

HatFraction canonicalize_hat(const Word& w, GroupMode mode, const HatOptions& opts = {});

struct HatDecision {
  bool trivial = false;
  HatFraction fraction;
  std::uint64_t braid_steps = 0;
};

HatDecision decide_hat(const Word& w, GroupMode mode, const HatOptions& opts = {});
bool is_trivial_hat(const Word& w, GroupMode mode, const HatOptions& opts = {});
bool equal_hat(const Word& a, const Word& b, GroupMode mode, const HatOptions& opts = {});

std::string describe(const HatFraction& h);

}  // namespace tbv
