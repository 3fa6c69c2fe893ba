#include "tbv/bv_relations.hpp"

#include <algorithm>
#include <array>

namespace tbv {

const char* mode_name(BVMode m) { return m == BVMode::V ? "V" : "BV"; }

namespace {

constexpr std::array<std::pair<BVRelation, const char*>, 13> kNames{{
    {BVRelation::VShift, "v-shift"},   {BVRelation::PiVLow, "pi-v-low"},   {BVRelation::PiVSame, "pi-v-same"},
    {BVRelation::PiVFar, "pi-v-far"},   {BVRelation::PiBarVLow, "pibar-v-low"},   {BVRelation::PiBarVSame, "pibar-v-same"},
    {BVRelation::PiFar, "pi-far"},   {BVRelation::PiBraid, "pi-braid"},   {BVRelation::PiBarPiFar, "pibar-pi-far"},
    {BVRelation::PiPiBarBraid, "pi-pibar-braid"}, {BVRelation::PiSquare, "pi-square"}, {BVRelation::PiBarSquare, "pibar-square"},
    {BVRelation::PiVNext, "pi-v-next"},
}};

}  // namespace

const char* relation_name(BVRelation r) {
  for (const auto& [id, name] : kNames) {
    if (id == r) return name;
  }
  return "?";
}

std::optional<BVRelation> relation_from_name(const std::string& name) {
  for (const auto& [id, n] : kNames) {
    if (name == n) return id;
  }
  return std::nullopt;
}

const std::vector<BVRelation>& all_bv_relations() {
  static const std::vector<BVRelation> all = [] {
    std::vector<BVRelation> v;
    for (const auto& [id, n] : kNames) v.push_back(id);
    return v;
  }();
  return all;
}

bool relation_enabled(BVRelation r, BVMode mode) {
  return mode == BVMode::V || (r != BVRelation::PiSquare && r != BVRelation::PiBarSquare);
}

bool relation_uses_q(BVRelation r) {
  switch (r) {
    case BVRelation::VShift:
    case BVRelation::PiVLow:
    case BVRelation::PiVFar:
    case BVRelation::PiBarVLow:
    case BVRelation::PiFar:
    case BVRelation::PiBarPiFar:
      return true;
    default:
      return false;
  }
}

bool relation_uses_eps(BVRelation r) {
  return r == BVRelation::PiVSame || r == BVRelation::PiBarVSame || r == BVRelation::PiVNext;
}

bool relation_admits(BVRelation r, const RelationParams& p) {
  if (p.eps != 1 && p.eps != -1) return false;
  if (!relation_uses_eps(r) && p.eps != 1) return false;
  const Index m = p.m;
  const Index q = p.q;
  switch (r) {
    case BVRelation::VShift:
    case BVRelation::PiVLow:
    case BVRelation::PiBarVLow:
      return m < q;
    case BVRelation::PiVFar:
      return m > q + 1;
    case BVRelation::PiFar:
      return (m > q ? m - q : q - m) >= 2;
    case BVRelation::PiBarPiFar:
      return q >= m + 2;
    default:
      return true;
  }
}

RelationSides relation_sides(BVRelation r, const RelationParams& p) {
  if (!relation_admits(r, p)) {
    throw RelationMismatch(std::string("indices violate the side condition of ") +
                           relation_name(r));
  }
  const Index m = p.m;
  const Index q = p.q;
  const int e = p.eps;
  const Index m1 = add_index(m, 1);
  switch (r) {
    case BVRelation::VShift: return {{vg(q), vg(m)}, {vg(m), vg(add_index(q, 1))}};
    case BVRelation::PiVLow: return {{pi(q), vg(m)}, {vg(m), pi(add_index(q, 1))}};
    case BVRelation::PiVSame: return {{pi(m, e), vg(m)}, {vg(m1), pi(m, e), pi(m1, e)}};
    case BVRelation::PiVFar: return {{pi(q), vg(m)}, {vg(m), pi(q)}};
    case BVRelation::PiBarVLow: return {{pib(q), vg(m)}, {vg(m), pib(add_index(q, 1))}};
    case BVRelation::PiBarVSame: return {{pib(m, e), vg(m)}, {pi(m, e), pib(m1, e)}};
    case BVRelation::PiFar: return {{pi(q), pi(m)}, {pi(m), pi(q)}};
    case BVRelation::PiBraid: return {{pi(m), pi(m1), pi(m)}, {pi(m1), pi(m), pi(m1)}};
    case BVRelation::PiBarPiFar: return {{pib(q), pi(m)}, {pi(m), pib(q)}};
    case BVRelation::PiPiBarBraid: return {{pi(m), pib(m1), pi(m)}, {pib(m1), pi(m), pib(m1)}};
    case BVRelation::PiSquare: return {{pi(m), pi(m)}, {}};
    case BVRelation::PiBarSquare: return {{pib(m), pib(m)}, {}};
    case BVRelation::PiVNext: return {{pi(m, -e), vg(m1)}, {vg(m), pi(m1, -e), pi(m, -e)}};
  }
  throw std::logic_error("unknown relation");
}

Word apply_relation(BVRelation r, const RelationParams& p, Direction dir,
                    std::size_t position, const Word& w, BVMode mode) {
  if (!relation_enabled(r, mode)) {
    throw RelationMismatch(std::string(relation_name(r)) + " does not hold in " +
                           mode_name(mode));
  }
  const auto sides = relation_sides(r, p);
  const Word& from = dir == Direction::Forward ? sides.lhs : sides.rhs;
  const Word& to = dir == Direction::Forward ? sides.rhs : sides.lhs;
  if (position > w.size() || w.size() - position < from.size() ||
      !std::equal(from.begin(), from.end(), w.begin() + static_cast<long>(position))) {
    throw RelationMismatch(std::string("pattern of ") + relation_name(r) +
                           " not found at position " + std::to_string(position));
  }
  std::vector<Symbol> out(w.begin(), w.begin() + static_cast<long>(position));
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), w.begin() + static_cast<long>(position + from.size()), w.end());
  return Word(std::move(out));
}

}  // namespace tbv
