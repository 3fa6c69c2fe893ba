#include "tbv/presentations.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>
#include <thread>

#include "tbv/braid.hpp"
#include "tbv/perms.hpp"
#include "tbv/syntax.hpp"
#include "tbv/thompson_f.hpp"

namespace tbv {

namespace {

constexpr std::array<std::pair<Group, const char*>, 7> kGroupNames{{
    {Group::VHat, "VHAT"},
    {Group::BVHat, "BVHAT"},
    {Group::V, "V"},
    {Group::BV, "BV"},
    {Group::F, "F"},
    {Group::SInf, "SINF"},
    {Group::BInf, "BINF"},
}};

}  // namespace

const char* group_name(Group g) {
  for (const auto& [id, name] : kGroupNames) {
    if (id == g) return name;
  }
  return "?";
}

std::optional<Group> group_from_name(const std::string& name) {
  for (const auto& [id, n] : kGroupNames) {
    if (name == n) return id;
  }
  return std::nullopt;
}

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Hat: return "hat";
    case Scheme::BVv: return "bv-v";
    case Scheme::BVpi: return "bv-pi";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::ResourceCap: return "resource-cap";
  }
  return "?";
}

namespace {

Word power_of(const Word& w, long n) {
  const Word base = n < 0 ? invert(w) : w;
  std::vector<Symbol> out;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out.insert(out.end(), base.begin(), base.end());
  return Word(std::move(out));
}

// c^{1-i} x c^{i-1}
Word conjugate_down(const Word& c, const Word& x, Index i) {
  const long k = static_cast<long>(i) - 1;
  return power_of(c, -k) * x * power_of(c, k);
}

Word expand_letter(const Symbol& s, Scheme scheme);

Word expand_positive(Family f, Index i, Scheme scheme) {
  auto letter = [&](Family g, Index j) { return expand_letter(Symbol{g, j, 1}, scheme); };
  switch (scheme) {
    case Scheme::Hat:
      if (f == Family::Lambda) {
        if (i == 0) return {lam(0)};
        if (i == 1) return {sig(0), lam(0), sig(1, -1), sig(0, -1)};
        return conjugate_down({lam(0)}, letter(Family::Lambda, 1), i);
      }
      if (f == Family::Sigma) {
        if (i <= 1) return {sig(i)};
        return conjugate_down({lam(0)}, {sig(1)}, i);
      }
      break;
    case Scheme::BVv:
      if (f == Family::V) {
        if (i <= 1) return {vg(i)};
        return conjugate_down({vg(0)}, {vg(1)}, i);
      }
      if (f == Family::PiBar) {
        if (i <= 1) return {pib(i)};
        return conjugate_down({vg(0)}, {pib(1)}, i);
      }
      if (f == Family::Pi) {
        return letter(Family::PiBar, i) * letter(Family::V, i) *
               invert(letter(Family::PiBar, add_index(i, 1)));
      }
      break;
    case Scheme::BVpi:
      if (f == Family::V) {
        return invert(letter(Family::PiBar, i)) * letter(Family::Pi, i) *
               letter(Family::PiBar, add_index(i, 1));
      }
      if (f == Family::Pi) {
        if (i <= 1) return {pi(i)};
        return conjugate_down(letter(Family::V, 0), {pi(1)}, i);
      }
      if (f == Family::PiBar) {
        if (i <= 1) return {pib(i)};
        return conjugate_down(letter(Family::V, 0), {pib(1)}, i);
      }
      break;
  }
  throw AlphabetError(std::string("letter family ") + family_name(f) +
                      " is not reachable in scheme " + scheme_name(scheme));
}

Word expand_letter(const Symbol& s, Scheme scheme) {
  const Word w = expand_positive(s.family, s.index, scheme);
  return s.exp > 0 ? w : invert(w);
}

}  // namespace

Word expand_finite_defs(const Word& w, Scheme scheme) {
  std::vector<Symbol> out;
  for (const auto& s : w) {
    const Word e = expand_letter(s, scheme);
    out.insert(out.end(), e.begin(), e.end());
  }
  return free_reduce(Word(std::move(out)));
}

namespace {

using Instances = std::vector<RelationInstance>;

std::string param_tag(std::initializer_list<std::pair<const char*, long>> ps) {
  std::string s;
  for (const auto& [k, v] : ps) {
    s += ' ';
    s += k;
    s += '=';
    s += std::to_string(v);
  }
  return s;
}

void add(Instances& out, const std::string& family, Group g, const std::string& params,
         Word lhs, Word rhs) {
  out.push_back({std::move(lhs), std::move(rhs),
                 family + " " + group_name(g) + params, g});
}

std::vector<int> signs(bool both) { return both ? std::vector<int>{1, -1} : std::vector<int>{1}; }

// The four sigma/lambda families, identical in shape for both hat groups;
// the braided group also takes sigma^-1.
Instances sigma_lambda(const std::string& fam, Index N,
                       Word (*make)(Index, Index, int, Word&)) {
  Instances out;
  for (Group g : {Group::VHat, Group::BVHat}) {
    for (int e : signs(g == Group::BVHat)) {
      for (Index m = 0; m <= N; ++m) {
        for (Index q = 0; q <= N; ++q) {
          Word rhs;
          Word lhs = make(m, q, e, rhs);
          if (lhs.empty()) continue;
          add(out, fam, g, param_tag({{"m", long(m)}, {"q", long(q)}, {"e", e}}), lhs, rhs);
        }
      }
    }
  }
  return out;
}

Word pair_word(const std::string& text) { return parse_word(text); }

struct TextRelation {
  const char* lhs;
  const char* rhs;
};

// Relators of the finite hat presentations over {l0, s0, s1} and defined
// letters.
const std::vector<TextRelation>& hat_finite_common() {
  static const std::vector<TextRelation> r{
      {"l1' l2 l1", "l3"}, {"l1' l3 l1", "l4"},   {"s0 s2", "s2 s0"},     {"s0 s3", "s3 s0"},
      {"s1 s3", "s3 s1"},  {"s1 s4", "s4 s1"},    {"s0 s1 s0", "s1 s0 s1"}, {"s1 s2 s1", "s2 s1 s2"},
      {"l1' s2 l1", "s3"}, {"l1' s3 l1", "s4"},   {"s0 l0", "l1 s0 s1"},  {"s1 l1", "l2 s1 s2"},
      {"s0 l2", "l2 s0"},  {"s0 l3", "l3 s0"},    {"s1 l3", "l3 s1"},     {"s1 l4", "l4 s1"},
  };
  return r;
}

const std::vector<TextRelation>& hat_finite_v_extra() {
  static const std::vector<TextRelation> r{{"s0 s0", ""}, {"s1 s1", ""}};
  return r;
}

const std::vector<TextRelation>& hat_finite_bv_extra() {
  static const std::vector<TextRelation> r{{"s0' l0", "l1 s0' s1'"}, {"s1' l1", "l2 s1' s2'"}};
  return r;
}

// Relators of the finite presentation of BV over four generators.
const std::vector<TextRelation>& bv_finite_relators() {
  static const std::vector<TextRelation> r{
      {"v2 v1", "v1 v3"},         {"v3 v1", "v1 v4"},
      {"pb2 v1", "v1 pb3"},       {"pb3 v1", "v1 pb4"},
      {"p0 v0", "v1 p0 p1"},      {"p1 v1", "v2 p1 p2"},
      {"p0' v0", "v1 p0' p1'"},   {"p1' v1", "v2 p1' p2'"},
      {"p0 v2", "v2 p0"},         {"p0 v3", "v3 p0"},
      {"p1 v3", "v3 p1"},         {"p1 v4", "v4 p1"},
      {"p0", "pb1' v0' pb0"},     {"p1", "pb2' v1' pb1"},
      {"p0 p2", "p2 p0"},         {"p0 p3", "p3 p0"},
      {"p1 p3", "p3 p1"},         {"p1 p4", "p4 p1"},
      {"p0 p1 p0", "p1 p0 p1"},   {"p1 p2 p1", "p2 p1 p2"},
      {"pb2 p0", "p0 pb2"},       {"pb3 p0", "p0 pb3"},
      {"pb3 p1", "p1 pb3"},       {"pb4 p1", "p1 pb4"},
      {"p0 pb1 p0", "pb1 p0 pb1"}, {"p1 pb2 p1", "pb2 p1 pb2"},
  };
  return r;
}

const std::vector<TextRelation>& bv_finite_v_extra() {
  static const std::vector<TextRelation> r{
      {"pb0 pb0", ""}, {"pb1 pb1", ""}, {"p0 p0", ""}, {"p1 p1", ""}};
  return r;
}

void add_text(Instances& out, const std::string& fam, Group g, const TextRelation& t,
              Scheme scheme) {
  const Word lhs = pair_word(t.lhs);
  const Word rhs = pair_word(t.rhs);
  const std::string tag = std::string(": ") + t.lhs + " = " + (*t.rhs ? t.rhs : "1");
  out.push_back({expand_finite_defs(lhs, scheme), expand_finite_defs(rhs, scheme),
                 fam + " " + group_name(g) + tag, g});
}

// Instances of one relation between v, pi and pibar, both groups where it
// holds.
Instances bv_family(BVRelation r, const std::string& fam, Index N) {
  Instances out;
  for (Group g : {Group::BV, Group::V}) {
    const BVMode mode = g == Group::BV ? BVMode::BV : BVMode::V;
    if (!relation_enabled(r, mode)) continue;
    for (int e : signs(relation_uses_eps(r))) {
      for (Index m = 0; m <= N; ++m) {
        for (Index q = 0; q <= (relation_uses_q(r) ? N : 0); ++q) {
          const RelationParams p{m, q, e};
          if (!relation_admits(r, p)) continue;
          const auto sides = relation_sides(r, p);
          std::string tag = param_tag({{"m", long(m)}});
          if (relation_uses_q(r)) tag += param_tag({{"q", long(q)}});
          if (relation_uses_eps(r)) tag += param_tag({{"e", e}});
          add(out, fam, g, tag, sides.lhs, sides.rhs);
        }
      }
    }
  }
  return out;
}

Word substitute(const Word& w, Family target) {
  std::vector<Symbol> out;
  for (const auto& s : w) {
    if (s.family != target) {
      out.push_back(s);
      continue;
    }
    const Index n = s.index;
    const Index n1 = add_index(n, 1);
    // pi_n = pb_n v_n pb_{n+1}^-1 ; v_n = pb_n^-1 p_n pb_{n+1}
    const Word def = target == Family::Pi ? Word{pib(n), vg(n), pib(n1, -1)}
                                          : Word{pib(n, -1), pi(n), pib(n1)};
    const Word e = s.exp > 0 ? def : invert(def);
    out.insert(out.end(), e.begin(), e.end());
  }
  return Word(std::move(out));
}

// The relations presenting BV over {v_n, pibar_n} (pi defined) or over
// {pi_n, pibar_n} (v defined), with the defined letter substituted.
Instances generator_change(const std::string& fam, Family defined, Index N) {
  Instances raw;
  for (BVRelation r : {BVRelation::VShift, BVRelation::PiVSame, BVRelation::PiVFar,
                       BVRelation::PiBarVLow, BVRelation::PiFar, BVRelation::PiBraid,
                       BVRelation::PiBarPiFar, BVRelation::PiPiBarBraid, BVRelation::PiSquare,
                       BVRelation::PiBarSquare}) {
    auto part = bv_family(r, std::string(relation_name(r)), N);
    raw.insert(raw.end(), part.begin(), part.end());
  }
  for (Group g : {Group::BV, Group::V}) {
    for (Index m = 0; m <= N; ++m) {
      // pi_m = pibar_{m+1}^-1 v_m^-1 pibar_m
      add(raw, "pi-inverse-form", g, param_tag({{"m", long(m)}}), Word{pi(m)},
          Word{pib(add_index(m, 1), -1), vg(m, -1), pib(m)});
    }
  }
  Instances out;
  for (auto& inst : raw) {
    out.push_back({substitute(inst.lhs, defined), substitute(inst.rhs, defined),
                   fam + " " + inst.source, inst.group});
  }
  return out;
}

const char* bv_formula(BVRelation r) {
  switch (r) {
    case BVRelation::VShift: return "v_q v_m = v_m v_{q+1}, m<q";
    case BVRelation::PiVLow: return "p_q v_m = v_m p_{q+1}, m<q";
    case BVRelation::PiVSame: return "p^e_m v_m = v_{m+1} p^e_m p^e_{m+1}";
    case BVRelation::PiVFar: return "p_q v_m = v_m p_q, m>q+1";
    case BVRelation::PiBarVLow: return "pb_q v_m = v_m pb_{q+1}, m<q";
    case BVRelation::PiBarVSame: return "pb^e_m v_m = p^e_m pb^e_{m+1}";
    case BVRelation::PiFar: return "p_q p_m = p_m p_q, |m-q|>=2";
    case BVRelation::PiBraid: return "p_m p_{m+1} p_m = p_{m+1} p_m p_{m+1}";
    case BVRelation::PiBarPiFar: return "pb_q p_m = p_m pb_q, q>=m+2";
    case BVRelation::PiPiBarBraid: return "p_m pb_{m+1} p_m = pb_{m+1} p_m pb_{m+1}";
    case BVRelation::PiSquare: return "p_m^2 = 1, V only";
    case BVRelation::PiBarSquare: return "pb_m^2 = 1, V only";
    case BVRelation::PiVNext: return "p^-e_m v_{m+1} = v_m p^-e_{m+1} p^-e_m";
  }
  return "";
}

std::vector<FamilySpec> build_families() {
  std::vector<FamilySpec> fs;
  fs.push_back({"hat.lambda-shift", "l_q l_m = l_m l_{q+1}, m<q, in both hat groups",
                [](Index N) {
                  Instances out;
                  for (Group g : {Group::VHat, Group::BVHat}) {
                    for (Index q = 0; q <= N; ++q) {
                      for (Index m = 0; m < q; ++m) {
                        add(out, "hat.lambda-shift", g, param_tag({{"m", long(m)}, {"q", long(q)}}),
                            {lam(q), lam(m)}, {lam(m), lam(add_index(q, 1))});
                      }
                    }
                  }
                  return out;
                }});
  fs.push_back({"hat.sigma-square", "s_m^2 = 1 in the permutation hat group", [](Index N) {
                  Instances out;
                  for (Index m = 0; m <= N; ++m) {
                    add(out, "hat.sigma-square", Group::VHat, param_tag({{"m", long(m)}}),
                        {sig(m), sig(m)}, {});
                  }
                  return out;
                }});
  fs.push_back({"hat.sigma-far", "s_m s_n = s_n s_m, |m-n|>=2", [](Index N) {
                  Instances out;
                  for (Group g : {Group::VHat, Group::BVHat}) {
                    for (Index n = 0; n <= N; ++n) {
                      for (Index m = 0; m + 2 <= n; ++m) {
                        add(out, "hat.sigma-far", g, param_tag({{"m", long(m)}, {"n", long(n)}}),
                            {sig(m), sig(n)}, {sig(n), sig(m)});
                      }
                    }
                  }
                  return out;
                }});
  fs.push_back({"hat.sigma-braid", "s_m s_{m+1} s_m = s_{m+1} s_m s_{m+1}", [](Index N) {
                  Instances out;
                  for (Group g : {Group::VHat, Group::BVHat}) {
                    for (Index m = 0; m <= N; ++m) {
                      const Index m1 = add_index(m, 1);
                      add(out, "hat.sigma-braid", g, param_tag({{"m", long(m)}}),
                          {sig(m), sig(m1), sig(m)}, {sig(m1), sig(m), sig(m1)});
                    }
                  }
                  return out;
                }});
  fs.push_back({"hat.sigma-lambda-low", "s^e_q l_m = l_m s^e_{q+1}, m<q", [](Index N) {
                  return sigma_lambda("hat.sigma-lambda-low", N,
                                      [](Index m, Index q, int e, Word& rhs) -> Word {
                                        if (!(m < q)) return {};
                                        rhs = {lam(m), sig(add_index(q, 1), e)};
                                        return {sig(q, e), lam(m)};
                                      });
                }});
  fs.push_back({"hat.sigma-lambda-same", "s^e_m l_m = l_{m+1} s^e_m s^e_{m+1}", [](Index N) {
                  return sigma_lambda("hat.sigma-lambda-same", N,
                                      [](Index m, Index q, int e, Word& rhs) -> Word {
                                        if (q != 0) return {};
                                        const Index m1 = add_index(m, 1);
                                        rhs = {lam(m1), sig(m, e), sig(m1, e)};
                                        return {sig(m, e), lam(m)};
                                      });
                }});
  fs.push_back({"hat.sigma-lambda-next", "s^e_m l_{m+1} = l_m s^e_{m+1} s^e_m", [](Index N) {
                  return sigma_lambda("hat.sigma-lambda-next", N,
                                      [](Index m, Index q, int e, Word& rhs) -> Word {
                                        if (q != 0) return {};
                                        const Index m1 = add_index(m, 1);
                                        rhs = {lam(m), sig(m1, e), sig(m, e)};
                                        return {sig(m, e), lam(m1)};
                                      });
                }});
  fs.push_back({"hat.sigma-lambda-far", "s^e_q l_m = l_m s^e_q, m>q+1", [](Index N) {
                  return sigma_lambda("hat.sigma-lambda-far", N,
                                      [](Index m, Index q, int e, Word& rhs) -> Word {
                                        if (!(m > q + 1)) return {};
                                        rhs = {lam(m), sig(q, e)};
                                        return {sig(q, e), lam(m)};
                                      });
                }});
  fs.push_back({"perm.square", "s_m^2 = 1 among permutations", [](Index N) {
                  Instances out;
                  for (Index m = 0; m <= N; ++m) {
                    add(out, "perm.square", Group::SInf, param_tag({{"m", long(m)}}),
                        {sig(m), sig(m)}, {});
                  }
                  return out;
                }});
  fs.push_back({"perm.far", "s_m s_n = s_n s_m, |m-n|>=2, permutations and braids",
                [](Index N) {
                  Instances out;
                  for (Group g : {Group::SInf, Group::BInf}) {
                    for (Index n = 0; n <= N; ++n) {
                      for (Index m = 0; m + 2 <= n; ++m) {
                        add(out, "perm.far", g, param_tag({{"m", long(m)}, {"n", long(n)}}),
                            {sig(m), sig(n)}, {sig(n), sig(m)});
                      }
                    }
                  }
                  return out;
                }});
  fs.push_back({"perm.braid", "s_m s_{m+1} s_m = s_{m+1} s_m s_{m+1}, permutations and braids",
                [](Index N) {
                  Instances out;
                  for (Group g : {Group::SInf, Group::BInf}) {
                    for (Index m = 0; m <= N; ++m) {
                      const Index m1 = add_index(m, 1);
                      add(out, "perm.braid", g, param_tag({{"m", long(m)}}),
                          {sig(m), sig(m1), sig(m)}, {sig(m1), sig(m), sig(m1)});
                    }
                  }
                  return out;
                }});
  fs.push_back({"f.shift", "l_q l_m = l_m l_{q+1}, m<q, in Thompson's group F", [](Index N) {
                  Instances out;
                  for (Index q = 0; q <= N; ++q) {
                    for (Index m = 0; m < q; ++m) {
                      add(out, "f.shift", Group::F, param_tag({{"m", long(m)}, {"q", long(q)}}),
                          {lam(q), lam(m)}, {lam(m), lam(add_index(q, 1))});
                    }
                  }
                  return out;
                }});
  fs.push_back({"hat-finite.relators",
                "relators of the three-generator hat presentations, definitions expanded",
                [](Index) {
                  Instances out;
                  for (Group g : {Group::VHat, Group::BVHat}) {
                    for (const auto& t : hat_finite_common()) {
                      add_text(out, "hat-finite.relators", g, t, Scheme::Hat);
                    }
                    const auto& extra =
                        g == Group::VHat ? hat_finite_v_extra() : hat_finite_bv_extra();
                    for (const auto& t : extra) add_text(out, "hat-finite.relators", g, t, Scheme::Hat);
                  }
                  return out;
                }});
  fs.push_back({"hat-finite.definitions",
                "defined letters l_i, s_i equal the generators they stand for", [](Index N) {
                  Instances out;
                  for (Group g : {Group::VHat, Group::BVHat}) {
                    for (Index i = 1; i <= std::max<Index>(N, 4); ++i) {
                      add(out, "hat-finite.definitions", g, param_tag({{"l", long(i)}}), {lam(i)},
                          expand_finite_defs({lam(i)}, Scheme::Hat));
                      if (i >= 2) {
                        add(out, "hat-finite.definitions", g, param_tag({{"s", long(i)}}),
                            {sig(i)}, expand_finite_defs({sig(i)}, Scheme::Hat));
                      }
                    }
                  }
                  return out;
                }});
  for (BVRelation r : all_bv_relations()) {
    const std::string fam = std::string("bv.") + relation_name(r);
    fs.push_back({fam, bv_formula(r),
                  [r, fam](Index N) { return bv_family(r, fam, N); }});
  }
  fs.push_back({"bv-gens.pi-definition", "pi_n = pibar_n v_n pibar_{n+1}^-1", [](Index N) {
                  Instances out;
                  for (Group g : {Group::BV, Group::V}) {
                    for (Index n = 0; n <= N; ++n) {
                      add(out, "bv-gens.pi-definition", g, param_tag({{"n", long(n)}}), {pi(n)},
                          {pib(n), vg(n), pib(add_index(n, 1), -1)});
                    }
                  }
                  return out;
                }});
  fs.push_back({"bv-gens.v-definition", "v_n = pibar_n^-1 pi_n pibar_{n+1}", [](Index N) {
                  Instances out;
                  for (Group g : {Group::BV, Group::V}) {
                    for (Index n = 0; n <= N; ++n) {
                      add(out, "bv-gens.v-definition", g, param_tag({{"n", long(n)}}), {vg(n)},
                          {pib(n, -1), pi(n), pib(add_index(n, 1))});
                    }
                  }
                  return out;
                }});
  fs.push_back({"bv-gens.v-pibar", "relations over {v_n, pibar_n} with pi_n substituted",
                [](Index N) { return generator_change("bv-gens.v-pibar", Family::Pi, N); }});
  fs.push_back({"bv-gens.pi-pibar", "relations over {pi_n, pibar_n} with v_n substituted",
                [](Index N) { return generator_change("bv-gens.pi-pibar", Family::V, N); }});
  for (const auto& [fam, scheme] : {std::pair{"bv-finite.v-scheme", Scheme::BVv},
                                    std::pair{"bv-finite.pi-scheme", Scheme::BVpi}}) {
    const std::string f = fam;
    const Scheme s = scheme;
    fs.push_back({f, "relators of the four-generator presentation of BV and V, expanded",
                  [f, s](Index) {
                    Instances out;
                    for (Group g : {Group::BV, Group::V}) {
                      for (const auto& t : bv_finite_relators()) add_text(out, f, g, t, s);
                      if (g == Group::V) {
                        for (const auto& t : bv_finite_v_extra()) add_text(out, f, g, t, s);
                      }
                    }
                    return out;
                  }});
  }
  fs.push_back({"bv-finite.definitions",
                "both four-generator schemes define the true generators and agree", [](Index N) {
                  Instances out;
                  for (Group g : {Group::BV, Group::V}) {
                    for (Index i = 0; i <= std::max<Index>(N, 4); ++i) {
                      for (const Symbol s : {vg(i), pi(i), pib(i)}) {
                        const Word w{s};
                        const Word ev = expand_finite_defs(w, Scheme::BVv);
                        const Word ep = expand_finite_defs(w, Scheme::BVpi);
                        const std::string t = " " + to_string(s);
                        add(out, "bv-finite.definitions", g, t + " v-scheme", w, ev);
                        add(out, "bv-finite.definitions", g, t + " pi-scheme", w, ep);
                        add(out, "bv-finite.definitions", g, t + " schemes-agree", ev, ep);
                      }
                    }
                  }
                  return out;
                }});
  return fs;
}

}  // namespace

const std::vector<FamilySpec>& default_families() {
  static const std::vector<FamilySpec> fs = build_families();
  return fs;
}

std::vector<RelationInstance> instantiate_family(const std::string& id, Index N,
                                                 const std::vector<FamilySpec>& families) {
  for (const auto& f : families) {
    if (f.id == id) return f.instantiate(N);
  }
  throw std::invalid_argument("unknown relation family: " + id);
}

namespace {

std::string fraction_text(const HatDecision& d) { return describe(d.fraction); }

std::string lmr_text(const BVDecision& d) {
  return "L=\"" + to_string(d.form.L) + "\" M=\"" + to_string(d.form.M) + "\" R=\"" +
         to_string(d.form.R) + "\" k=" + std::to_string(d.form.k);
}

}  // namespace

VerifyResult verify(const RelationInstance& inst, const VerifyOptions& opts) {
  VerifyResult r;
  r.instance = inst;
  const Word w = inst.lhs * invert(inst.rhs);
  auto set = [&](bool holds) { r.verdict = holds ? Verdict::Holds : Verdict::Fails; };
  try {
    switch (inst.group) {
      case Group::VHat:
      case Group::BVHat: {
        const auto mode = inst.group == Group::VHat ? GroupMode::VHat : GroupMode::BVHat;
        const auto d = decide_hat(w, mode, opts.hat);
        r.decider = "hatgroups";
        r.transcript = fraction_text(d) + " braid_steps=" + std::to_string(d.braid_steps);
        r.steps = d.fraction.steps + d.braid_steps;
        set(d.trivial);
        break;
      }
      case Group::V:
      case Group::BV: {
        const bool v = inst.group == Group::V;
        const auto d1 = decide_bv(w, v ? BVMode::V : BVMode::BV, opts.lmr);
        const auto d2 =
            decide_hat(expand_bv_generators(w), v ? GroupMode::VHat : GroupMode::BVHat, opts.hat);
        r.decider = "bv-lmr+hatgroups";
        r.transcript = "lmr: " + lmr_text(d1) + "; hat: " + fraction_text(d2);
        if (d1.trivial != d2.trivial) r.transcript += "; deciders disagree";
        r.steps = d1.form.steps + d1.braid_steps + d2.fraction.steps + d2.braid_steps;
        set(d1.trivial && d2.trivial);
        break;
      }
      case Group::F: {
        const auto fr = f_fraction(w);
        r.decider = "thompson-f";
        r.transcript = "P=\"" + to_string(fr.positive.to_word()) + "\" N=\"" +
                       to_string(fr.negative.to_word()) + "\"";
        set(fr.positive == fr.negative);
        break;
      }
      case Group::SInf: {
        const auto p = from_sigma_word(w);
        r.decider = "perms";
        r.transcript = "degree=" + std::to_string(p.degree());
        set(p.is_identity());
        break;
      }
      case Group::BInf: {
        const auto b = BraidWord::from_word(w);
        const auto red = reduce_handles(b, opts.hat.braid_steps);
        r.decider = "braid";
        r.transcript = "handle_steps=" + std::to_string(red.steps) + " reduced=\"" +
                       to_string(red.reduced.to_word()) + "\"";
        r.steps = red.steps;
        set(red.reduced.empty());
        break;
      }
    }
  } catch (const StepCapExceeded& e) {
    r.verdict = Verdict::ResourceCap;
    r.transcript = e.what();
  }
  return r;
}

bool VerifyReport::all_hold() const {
  return std::all_of(results.begin(), results.end(),
                     [](const VerifyResult& r) { return r.verdict == Verdict::Holds; });
}

std::vector<const VerifyResult*> VerifyReport::failures() const {
  std::vector<const VerifyResult*> out;
  for (const auto& r : results) {
    if (r.verdict != Verdict::Holds) out.push_back(&r);
  }
  return out;
}

VerifyReport verify_all(Index N, const std::optional<std::string>& family,
                        const VerifyOptions& opts, const std::vector<FamilySpec>& families) {
  std::vector<std::pair<std::string, RelationInstance>> work;
  bool found = !family;
  for (const auto& f : families) {
    if (family && f.id != *family) continue;
    found = true;
    for (auto& inst : f.instantiate(N)) work.emplace_back(f.id, std::move(inst));
  }
  if (!found) throw std::invalid_argument("unknown relation family: " + *family);

  std::vector<VerifyResult> results(work.size());
  const std::size_t threads =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
  std::vector<std::future<void>> jobs;
  for (std::size_t t = 0; t < threads; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < work.size(); i += threads) {
        results[i] = verify(work[i].second, opts);
      }
    }));
  }
  for (auto& j : jobs) j.get();

  VerifyReport rep;
  for (std::size_t i = 0; i < work.size(); ++i) {
    auto& c = rep.per_family[work[i].first];
    ++c.total;
    if (results[i].verdict == Verdict::Holds) ++c.passed;
  }
  rep.results = std::move(results);
  std::stable_sort(rep.results.begin(), rep.results.end(),
                   [](const VerifyResult& a, const VerifyResult& b) {
                     return a.instance.source < b.instance.source;
                   });
  return rep;
}

}  // namespace tbv
