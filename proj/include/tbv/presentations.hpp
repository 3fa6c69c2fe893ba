#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tbv/bv_lmr.hpp"
#include "tbv/hatgroups.hpp"
#include "tbv/words.hpp"

namespace tbv {

enum class Group { VHat, BVHat, V, BV, F, SInf, BInf };

const char* group_name(Group g);  // VHAT, BVHAT, V, BV, F, SINF, BINF
std::optional<Group> group_from_name(const std::string& name);

/// The claim lhs = rhs in `group`.
struct RelationInstance {
  Word lhs;
  Word rhs;
  std::string source;  // family id plus the indices used
  Group group = Group::BV;
};

struct FamilySpec {
  std::string id;
  std::string description;
  std::function<std::vector<RelationInstance>(Index)> instantiate;
};

/// Every family checked by verify_all, in a fixed order.
const std::vector<FamilySpec>& default_families();

/// Instances with every index <= N that satisfy the family's side
/// condition. Throws std::invalid_argument for an unknown id.
std::vector<RelationInstance> instantiate_family(const std::string& id, Index N,
                                                 const std::vector<FamilySpec>& families =
                                                     default_families());

/// Generating schemes for the finite presentations.
///   Hat:   base {l0, s0, s1}; l1 = s0 l0 s1^-1 s0^-1, and for i > 1
///          l_i = l0^{1-i} l1 l0^{i-1}, s_i = l0^{1-i} s1 l0^{i-1}.
///   BVv:   base {v0, v1, pb0, pb1}; v_i, pb_i (i >= 2) by v0-conjugation
///          of v1, pb1; p_i = pb_i v_i pb_{i+1}^-1.
///   BVpi:  base {p0, p1, pb0, pb1}; p_i, pb_i (i >= 2) by v0-conjugation
///          of p1, pb1; v_i = pb_i^-1 p_i pb_{i+1}.
enum class Scheme { Hat, BVv, BVpi };

const char* scheme_name(Scheme s);

/// Replaces every non-base letter by its definition, recursively; the result
/// is freely reduced. Throws AlphabetError for letters outside the scheme.
Word expand_finite_defs(const Word& w, Scheme scheme);

enum class Verdict { Holds, Fails, ResourceCap };

const char* verdict_name(Verdict v);  // holds, fails, resource-cap

struct VerifyOptions {
  HatOptions hat;
  LmrOptions lmr;
};

struct VerifyResult {
  RelationInstance instance;
  Verdict verdict = Verdict::Fails;
  std::string decider;
  std::string transcript;
  std::uint64_t steps = 0;
};

/// Decides lhs * rhs^-1 in the instance's group. V and BV use both the
/// intrinsic decider and the hat-group decider on the expansion, and hold
/// only when both agree on trivial.
VerifyResult verify(const RelationInstance& inst, const VerifyOptions& opts = {});

struct FamilyCount {
  std::size_t passed = 0;
  std::size_t total = 0;
};

struct VerifyReport {
  std::vector<VerifyResult> results;  // sorted by source tag
  std::map<std::string, FamilyCount> per_family;
  bool all_hold() const;
  std::vector<const VerifyResult*> failures() const;
};

/// Runs every family (or only `family`) at bound N. Throws
/// std::invalid_argument for an unknown family id.
VerifyReport verify_all(Index N, const std::optional<std::string>& family = std::nullopt,
                        const VerifyOptions& opts = {},
                        const std::vector<FamilySpec>& families = default_families());

}  // namespace tbv
