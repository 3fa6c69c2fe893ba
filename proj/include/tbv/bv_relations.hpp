#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tbv/words.hpp"

namespace tbv {

enum class BVMode { V, BV };

const char* mode_name(BVMode m);

/// Relation families among v, pi and pibar (m, q the indices, e = +-1):
///   VShift        v_q v_m = v_m v_{q+1}                      m < q
///   PiVLow        pi_q v_m = v_m pi_{q+1}                    m < q
///   PiVSame       pi^e_m v_m = v_{m+1} pi^e_m pi^e_{m+1}
///   PiVFar        pi_q v_m = v_m pi_q                        m > q+1
///   PiBarVLow     pibar_q v_m = v_m pibar_{q+1}              m < q
///   PiBarVSame    pibar^e_m v_m = pi^e_m pibar^e_{m+1}
///   PiFar         pi_q pi_m = pi_m pi_q                      |m-q| >= 2
///   PiBraid       pi_m pi_{m+1} pi_m = pi_{m+1} pi_m pi_{m+1}
///   PiBarPiFar    pibar_q pi_m = pi_m pibar_q                q >= m+2
///   PiPiBarBraid  pi_m pibar_{m+1} pi_m = pibar_{m+1} pi_m pibar_{m+1}
///   PiSquare      pi_m pi_m = 1                              V only
///   PiBarSquare   pibar_m pibar_m = 1                        V only
///   PiVNext       pi^-e_m v_{m+1} = v_m pi^-e_{m+1} pi^-e_m  (consequence)
enum class BVRelation {
  VShift,
  PiVLow,
  PiVSame,
  PiVFar,
  PiBarVLow,
  PiBarVSame,
  PiFar,
  PiBraid,
  PiBarPiFar,
  PiPiBarBraid,
  PiSquare,
  PiBarSquare,
  PiVNext,
};

const char* relation_name(BVRelation r);
std::optional<BVRelation> relation_from_name(const std::string& name);
const std::vector<BVRelation>& all_bv_relations();

/// Index parameters. Families with one index use `m`. `eps` is only free
/// for PiVSame, PiBarVSame and PiVNext; everywhere else it must be +1.
struct RelationParams {
  Index m = 0;
  Index q = 0;
  int eps = 1;
};

struct RelationSides {
  Word lhs;
  Word rhs;
};

class RelationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool relation_enabled(BVRelation r, BVMode mode);
bool relation_uses_q(BVRelation r);
bool relation_uses_eps(BVRelation r);
/// Side condition on the indices, e.g. m < q for VShift.
bool relation_admits(BVRelation r, const RelationParams& p);

/// Both sides of an instance. Throws RelationMismatch when the indices
/// violate the side condition.
RelationSides relation_sides(BVRelation r, const RelationParams& p);

enum class Direction { Forward, Backward };

/// Replace the occurrence of one side (lhs for Forward) starting at
/// `position` by the other side.
Word apply_relation(BVRelation r, const RelationParams& p, Direction dir,
                    std::size_t position, const Word& w, BVMode mode = BVMode::BV);

}  // namespace tbv
