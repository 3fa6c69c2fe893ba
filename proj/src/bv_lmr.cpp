#include "tbv/bv_lmr.hpp"

#include <algorithm>
#include <stdexcept>

#include "tbv/thompson_f.hpp"

namespace tbv {

bool HeightSet::contains(Index h) const {
  switch (kind_) {
    case Kind::Empty: return false;
    case Kind::Singleton: return h == value_;
    case Kind::Tail: return h >= value_;
  }
  return false;
}

HeightSet HeightSet::intersect(const HeightSet& o) const {
  if (is_empty() || o.is_empty()) return empty();
  if (kind_ == Kind::Tail && o.kind_ == Kind::Tail) return tail(std::max(value_, o.value_));
  if (kind_ == Kind::Singleton) return o.contains(value_) ? *this : empty();
  return contains(o.value_) ? o : empty();
}

std::string to_string(const HeightSet& h) {
  switch (h.kind()) {
    case HeightSet::Kind::Empty: return "{}";
    case HeightSet::Kind::Singleton: return "{" + std::to_string(h.value()) + "}";
    case HeightSet::Kind::Tail: return "{" + std::to_string(h.value()) + ",...}";
  }
  return "?";
}

HeightSet height_of(const Symbol& s) {
  if (s.family == Family::Pi) return HeightSet::tail(add_index(s.index, 2));
  if (s.family == Family::PiBar) return HeightSet::singleton(add_index(s.index, 1));
  throw AlphabetError("heights are defined for pi/pibar letters only");
}

HeightSet height_of(const Word& w) {
  HeightSet h = HeightSet::tail(0);
  for (const auto& s : w) h = h.intersect(height_of(s));
  return h;
}

Monosyllable as_monosyllable(const Word& w) {
  std::size_t cores = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].family == Family::PiBar) {
      ++cores;
      at = i;
    } else if (w[i].family != Family::Pi) {
      throw AlphabetError("a monosyllable uses pi/pibar letters only");
    }
  }
  if (cores != 1) throw std::invalid_argument("a monosyllable has exactly one pibar letter");
  const auto& v = w.vec();
  return {Word(std::vector<Symbol>(v.begin(), v.begin() + static_cast<long>(at))), w[at],
          Word(std::vector<Symbol>(v.begin() + static_cast<long>(at) + 1, v.end()))};
}

namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t cap) : cap_(cap) {}
  void tick() {
    if (++used_ > cap_) {
      throw StepCapExceeded("LMR computation exceeded " + std::to_string(cap_) + " steps");
    }
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

constexpr std::uint64_t kUnbounded = ~std::uint64_t{0};

Index inc(Index i) { return add_index(i, 1); }

// x v_m = v_{vs...} rest.
struct LeftPass {
  std::vector<Index> vs;
  std::vector<Symbol> rest;
};

LeftPass pass_v_left(const Symbol& x, Index m) {
  const Index q = x.index;
  const int e = x.exp;
  switch (x.family) {
    case Family::Pi:
      if (m < q) return {{m}, {pi(inc(q), e)}};
      if (m == q) return {{inc(q)}, {pi(q, e), pi(inc(q), e)}};
      if (m == q + 1) return {{q}, {pi(inc(q), e), pi(q, e)}};
      return {{m}, {pi(q, e)}};
    case Family::PiBar: {
      if (m < q) return {{m}, {pib(inc(q), e)}};
      if (m == q) return {{}, {pi(q, e), pib(inc(q), e)}};
      // pibar_q v_m = v_q ... v_{m-2} v_{m-1}^2 pibar_{m+1} pi_m ... pi_q
      LeftPass p;
      for (Index i = q; i + 1 < m; ++i) p.vs.push_back(i);
      p.vs.push_back(m - 1);
      p.vs.push_back(m - 1);
      p.rest.push_back(pib(inc(m), e));
      for (Index i = m + 1; i-- > q;) p.rest.push_back(pi(i, e));
      return p;
    }
    case Family::V:
      if (e > 0) throw std::logic_error("pass_v_left: positive v in the passed word");
      if (m == q) return {{}, {}};
      if (m < q) return {{m}, {vg(inc(q), -1)}};
      return {{inc(m)}, {vg(q, -1)}};
    default:
      throw AlphabetError("BV words use v, pi and pibar letters only");
  }
}

// v_m^-1 x = rest v_{vs0}^-1 v_{vs1}^-1 ...
struct RightPass {
  std::vector<Symbol> rest;
  std::vector<Index> vs;
};

RightPass pass_vinv_right(Index m, const Symbol& x) {
  const Index q = x.index;
  const int e = x.exp;
  switch (x.family) {
    case Family::Pi:
      if (m < q) return {{pi(inc(q), e)}, {m}};
      if (m == q) return {{pi(inc(q), e), pi(q, e)}, {inc(q)}};
      if (m == q + 1) return {{pi(q, e), pi(inc(q), e)}, {q}};
      return {{pi(q, e)}, {m}};
    case Family::PiBar: {
      if (m < q) return {{pib(inc(q), e)}, {m}};
      if (m == q) return {{pib(inc(q), e), pi(q, e)}, {}};
      // v_m^-1 pibar_q = pi_q ... pi_m pibar_{m+1} (v_q ... v_{m-2} v_{m-1}^2)^-1
      RightPass p;
      for (Index i = q; i <= m; ++i) p.rest.push_back(pi(i, e));
      p.rest.push_back(pib(inc(m), e));
      p.vs.push_back(m - 1);
      p.vs.push_back(m - 1);
      for (Index i = m - 1; i-- > q;) p.vs.push_back(i);
      return p;
    }
    case Family::V:
      if (e < 0) throw std::logic_error("pass_vinv_right: negative v in the passed word");
      if (m == q) return {{}, {}};
      if (m < q) return {{vg(inc(q))}, {m}};
      return {{vg(q)}, {inc(m)}};
    default:
      throw AlphabetError("BV words use v, pi and pibar letters only");
  }
}

// Moves v_m from the right end of `prefix` to its left end; returns the
// v indices that come out, left to right (empty when absorbed).
std::vector<Index> push_v_left(std::vector<Symbol>& prefix, Index m, Budget& b) {
  std::vector<Symbol> passed_rev;
  std::vector<Index> out;
  bool exited = true;
  while (!prefix.empty()) {
    b.tick();
    const Symbol x = prefix.back();
    prefix.pop_back();
    LeftPass p = pass_v_left(x, m);
    passed_rev.insert(passed_rev.end(), p.rest.rbegin(), p.rest.rend());
    if (p.vs.size() == 1) {
      m = p.vs[0];
      continue;
    }
    for (Index u : p.vs) {
      auto r = push_v_left(prefix, u, b);
      out.insert(out.end(), r.begin(), r.end());
    }
    exited = false;
    break;
  }
  if (exited) out.push_back(m);
  prefix.insert(prefix.end(), passed_rev.rbegin(), passed_rev.rend());
  return out;
}

// Moves v_m^-1 from the left end of `suffix` to its right end; returns the
// indices of the v^-1 letters that come out, left to right.
std::vector<Index> push_vinv_right(std::vector<Symbol>& suffix, Index m, Budget& b) {
  std::vector<Symbol> passed;
  std::size_t i = 0;
  while (i < suffix.size()) {
    b.tick();
    RightPass p = pass_vinv_right(m, suffix[i++]);
    passed.insert(passed.end(), p.rest.begin(), p.rest.end());
    if (p.vs.size() == 1) {
      m = p.vs[0];
      continue;
    }
    std::vector<Symbol> rest(suffix.begin() + static_cast<long>(i), suffix.end());
    std::vector<std::vector<Index>> outs(p.vs.size());
    for (std::size_t k = p.vs.size(); k-- > 0;) outs[k] = push_vinv_right(rest, p.vs[k], b);
    passed.insert(passed.end(), rest.begin(), rest.end());
    suffix.swap(passed);
    std::vector<Index> out;
    for (const auto& o : outs) out.insert(out.end(), o.begin(), o.end());
    return out;
  }
  suffix.swap(passed);
  return {m};
}

void require_pi_word(const Word& w, const char* who) {
  if (!uses_only(w, {Family::Pi})) {
    throw AlphabetError(std::string(who) + " expects a word in pi letters only");
  }
}

void require_unit_exponents(const Word& w) {
  for (const auto& s : w) {
    if (s.exp != 1 && s.exp != -1) throw std::invalid_argument("letter exponents must be +-1");
  }
}

PiAction pi_action_impl(const Word& w, Index m, Side side, Budget& b) {
  std::vector<Symbol> v = w.vec();
  const auto out = side == Side::Right ? push_v_left(v, m, b) : push_vinv_right(v, m, b);
  if (out.size() != 1) throw std::logic_error("pi_action: a pi word moves exactly one v");
  return {Word(std::move(v)), out[0]};
}

// Pushes v_m leftward through one monosyllable; it stays a monosyllable.
std::vector<Index> push_v_left_mono(Monosyllable& M, Index m, Budget& b) {
  std::vector<Symbol> v = M.to_word().vec();
  auto out = push_v_left(v, m, b);
  M = as_monosyllable(free_reduce(Word(std::move(v))));
  return out;
}

std::vector<Index> push_vinv_right_mono(Monosyllable& M, Index m, Budget& b) {
  std::vector<Symbol> v = M.to_word().vec();
  auto out = push_vinv_right(v, m, b);
  M = as_monosyllable(free_reduce(Word(std::move(v))));
  return out;
}

// v_{in...} sitting right of monos[0..end) moved to their left.
std::vector<Index> push_v_left_monos(std::vector<Monosyllable>& monos, std::size_t end,
                                     std::vector<Index> in, Budget& b) {
  for (std::size_t j = end; j-- > 0;) {
    std::vector<Index> next;
    for (Index u : in) {
      auto r = push_v_left_mono(monos[j], u, b);
      next.insert(next.end(), r.begin(), r.end());
    }
    in.swap(next);
  }
  return in;
}

// v^-1_{in...} sitting left of monos[begin..) moved to their right.
std::vector<Index> push_vinv_right_monos(std::vector<Monosyllable>& monos, std::size_t begin,
                                         std::vector<Index> in, Budget& b) {
  for (std::size_t j = begin; j < monos.size(); ++j) {
    std::vector<std::vector<Index>> outs(in.size());
    for (std::size_t k = in.size(); k-- > 0;) outs[k] = push_vinv_right_mono(monos[j], in[k], b);
    in.clear();
    for (const auto& o : outs) in.insert(in.end(), o.begin(), o.end());
  }
  return in;
}

Index singleton_height(const Monosyllable& M) {
  const HeightSet h = M.height();
  if (h.kind() != HeightSet::Kind::Singleton) {
    throw std::invalid_argument("monosyllable height must be a singleton, got " + to_string(h));
  }
  return h.value();
}

MonoRaise mono_raise_impl(const Monosyllable& M, RaiseOp op, Index m, Budget& b) {
  const Index h = singleton_height(M);
  const Index top = h - 1;  // core index
  const int g = M.core.exp;
  MonoRaise r;
  switch (op) {
    case RaiseOp::A: {
      // pibar_{h-1} = pi_{h-1} pibar_h v_{h-1}^-1
      auto act = pi_action_impl(M.post, top, Side::Left, b);
      r.mono = {M.pre * Word{pi(top, g)}, pib(h, g), act.word};
      r.right_v = act.moved;
      return r;
    }
    case RaiseOp::B: {
      // pibar_{h-1} = v_{h-1} pibar_h pi_{h-1}
      auto act = pi_action_impl(M.pre, top, Side::Right, b);
      r.left_v = act.moved;
      r.mono = {act.word, pib(h, g), Word{pi(top, g)} * M.post};
      return r;
    }
    case RaiseOp::C: {
      if (m >= h) throw std::invalid_argument("mono_raise C needs m < height");
      auto act = pi_action_impl(M.post, m, Side::Right, b);
      if (act.moved == top) {
        r.mono = {M.pre * Word{pi(top, g)}, pib(h, g), act.word};
        return r;
      }
      auto act2 = pi_action_impl(M.pre, act.moved, Side::Right, b);
      r.left_v = act2.moved;
      r.mono = {act2.word, pib(h, g), act.word};
      return r;
    }
    case RaiseOp::D: {
      if (m >= h) throw std::invalid_argument("mono_raise D needs m < height");
      auto act = pi_action_impl(M.pre, m, Side::Left, b);
      if (act.moved == top) {
        r.mono = {act.word, pib(h, g), Word{pi(top, g)} * M.post};
        return r;
      }
      auto act2 = pi_action_impl(M.post, act.moved, Side::Left, b);
      r.mono = {act.word, pib(h, g), act2.word};
      r.right_v = act2.moved;
      return r;
    }
  }
  throw std::logic_error("unknown raise op");
}

WordRaise raise_word_heights_impl(const std::vector<Monosyllable>& monos, Budget& b) {
  WordRaise out;
  Index prev = 0;
  for (const auto& M : monos) {
    const Index h = singleton_height(M);
    if (h < prev) throw std::invalid_argument("raise_word_heights needs nondecreasing heights");
    prev = h;
    b.tick();
    MonoRaise r = out.right_v ? mono_raise_impl(M, RaiseOp::D, *out.right_v, b)
                              : mono_raise_impl(M, RaiseOp::A, 0, b);
    r.mono = {free_reduce(r.mono.pre), r.mono.core, free_reduce(r.mono.post)};
    out.monos.push_back(std::move(r.mono));
    out.right_v = r.right_v;
  }
  return out;
}

std::vector<Monosyllable> invert_monos(const std::vector<Monosyllable>& monos) {
  std::vector<Monosyllable> out;
  out.reserve(monos.size());
  for (auto it = monos.rbegin(); it != monos.rend(); ++it) out.push_back(it->inverse());
  return out;
}

// The same raise applied to M^{-1}: M = [v_j] M'.
WordRaise raise_word_heights_left(const std::vector<Monosyllable>& monos, Budget& b) {
  WordRaise r = raise_word_heights_impl(invert_monos(monos), b);
  r.monos = invert_monos(r.monos);
  return r;
}

// Monosyllables of a word with at least one pibar; the pi prefix joins the
// first one.
std::vector<Monosyllable> split_monos(const Word& M) {
  std::vector<Monosyllable> out;
  std::vector<Symbol> pre;
  for (const auto& s : M) {
    if (s.family == Family::PiBar) {
      out.push_back({Word(std::move(pre)), s, Word{}});
      pre.clear();
    } else if (out.empty()) {
      pre.push_back(s);
    } else {
      out.back().post = out.back().post * Word{s};
    }
  }
  return out;
}

Word join_monos(const std::vector<Monosyllable>& monos) {
  std::vector<Symbol> out;
  for (const auto& M : monos) {
    const Word w = M.to_word();
    out.insert(out.end(), w.begin(), w.end());
  }
  return Word(std::move(out));
}

bool has_pi_at_least(const Word& w, Index bound) {
  return std::any_of(w.begin(), w.end(), [&](const Symbol& s) { return s.index >= bound; });
}

Word v_word(const std::vector<Index>& idx, int exp) {
  std::vector<Symbol> out;
  out.reserve(idx.size());
  for (Index i : idx) out.push_back(vg(i, exp));
  return Word(std::move(out));
}

Index bound_step(Index k, Index m) { return m + 1 <= k ? k + 1 : add_index(m, 2); }

Index bound_of(const std::vector<Index>& vs) {
  Index k = 0;
  for (Index m : vs) k = bound_step(k, m);
  return k;
}

struct FirstForm {
  std::vector<Index> L;
  std::vector<Symbol> M;
  std::vector<Index> R;  // v_{R0}^-1 v_{R1}^-1 ...
};

FirstForm first_form_impl(const Word& w, Budget& b) {
  require_unit_exponents(w);
  if (!uses_only(w, {Family::V, Family::Pi, Family::PiBar})) {
    throw AlphabetError("BV words use v, pi and pibar letters only");
  }
  FirstForm f;
  std::vector<Symbol> x;
  for (const auto& s : free_reduce(w)) {
    if (s.family == Family::V && s.exp > 0) {
      auto out = push_v_left(x, s.index, b);
      f.L.insert(f.L.end(), out.begin(), out.end());
    } else {
      x.push_back(s);
    }
  }
  std::vector<Symbol> rev;  // M reversed
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    if (it->family == Family::V) {
      std::vector<Symbol> y(rev.rbegin(), rev.rend());
      auto out = push_vinv_right(y, it->index, b);
      rev.assign(y.rbegin(), y.rend());
      f.R.insert(f.R.begin(), out.begin(), out.end());
    } else {
      rev.push_back(*it);
    }
  }
  f.M.assign(rev.rbegin(), rev.rend());
  f.M = free_reduce(Word(std::move(f.M))).vec();
  return f;
}

struct Layout {
  std::vector<Index> L;
  std::vector<Monosyllable> monos;
  std::vector<Index> R;

  Index h(std::size_t i) const { return monos[i].core.index + 1; }
  void prepend_r(Index j) { R.insert(R.begin(), j); }
  Layout inverse() const {
    return {std::vector<Index>(R.rbegin(), R.rend()), invert_monos(monos),
            std::vector<Index>(L.rbegin(), L.rend())};
  }
};

// Raises pibar letters until every monosyllable has nonempty height. A
// monosyllable can fail this only through pi letters of index >= its core.
void make_proper(Layout& lay, Budget& b) {
  auto& monos = lay.monos;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    while (has_pi_at_least(monos[i].post, monos[i].core.index)) {
      b.tick();
      const Index q = monos[i].core.index;
      const int g = monos[i].core.exp;
      monos[i].core = pib(inc(q), g);
      monos[i].post = Word{pi(q, g)} * monos[i].post;
      std::vector<Symbol> pre = monos[i].pre.vec();
      auto out = push_v_left(pre, q, b);
      monos[i].pre = Word(std::move(pre));
      out = push_v_left_monos(monos, i, std::move(out), b);
      lay.L.insert(lay.L.end(), out.begin(), out.end());
    }
  }
  while (!monos.empty() && has_pi_at_least(monos[0].pre, monos[0].core.index)) {
    b.tick();
    const Index q = monos[0].core.index;
    const int g = monos[0].core.exp;
    monos[0].core = pib(inc(q), g);
    monos[0].pre = monos[0].pre * Word{pi(q, g)};
    std::vector<Symbol> post = monos[0].post.vec();
    auto out = push_vinv_right(post, q, b);
    monos[0].post = Word(std::move(post));
    out = push_vinv_right_monos(monos, 1, std::move(out), b);
    lay.R.insert(lay.R.begin(), out.begin(), out.end());
  }
  for (const auto& M : monos) {
    if (M.height().kind() != HeightSet::Kind::Singleton) {
      throw std::logic_error("make_proper left a monosyllable of height " +
                             to_string(M.height()));
    }
  }
}

void raise_suffix(Layout& lay, std::size_t s, Budget& b) {
  std::vector<Monosyllable> block(lay.monos.begin() + static_cast<long>(s), lay.monos.end());
  WordRaise r = raise_word_heights_impl(block, b);
  std::copy(r.monos.begin(), r.monos.end(), lay.monos.begin() + static_cast<long>(s));
  if (r.right_v) lay.prepend_r(*r.right_v);
}

// Brings all monosyllables to one common height.
void equalize_heights(Layout& lay, Budget& b) {
  const std::size_t t = lay.monos.size();
  // Nondecreasing: raise suffix blocks until each clears everything before it.
  for (std::size_t s = t; s-- > 0;) {
    Index before = 0;
    for (std::size_t i = 0; i < s; ++i) before = std::max(before, lay.h(i));
    while (lay.h(s) < before) raise_suffix(lay, s, b);
  }
  // In the inverse the heights are nonincreasing; raise the tail blocks.
  lay = lay.inverse();
  for (std::size_t s = t; s-- > 1;) {
    while (lay.h(s) < lay.h(s - 1)) raise_suffix(lay, s, b);
  }
  lay = lay.inverse();
}

LMRForm finish(const std::vector<Index>& L, const Word& M, const std::vector<Index>& R, Index k,
               const Budget& b) {
  LMRForm f;
  f.L = v_word(L, 1);
  f.M = M;
  f.R = v_word(R, -1);
  f.height_M = height_of(M);
  f.k = k;
  f.steps = b.used();
  if (!f.height_M.contains(k)) throw std::logic_error("third form: k outside height(M)");
  return f;
}

LMRForm third_form_impl(const Word& w, Budget& b) {
  FirstForm ff = first_form_impl(w, b);
  const Word M(ff.M);
  Layout lay{std::move(ff.L), split_monos(M), std::move(ff.R)};
  if (lay.monos.empty()) {
    const Index k = std::max({bound_of(lay.L),
                              bound_of(std::vector<Index>(lay.R.rbegin(), lay.R.rend())),
                              height_of(M).value()});
    return finish(lay.L, M, lay.R, k, b);
  }
  make_proper(lay, b);
  equalize_heights(lay, b);
  Index h = lay.h(0);
  Index k1 = bound_of(lay.L);
  Index k2 = bound_of(std::vector<Index>(lay.R.rbegin(), lay.R.rend()));
  while (k1 > h || k2 > h) {
    b.tick();
    if (k2 > h) {
      WordRaise r = raise_word_heights_left(lay.monos, b);
      lay.monos = std::move(r.monos);
      if (r.right_v) {
        lay.L.push_back(*r.right_v);
        k1 = bound_step(k1, *r.right_v);
      }
    } else {
      WordRaise r = raise_word_heights_impl(lay.monos, b);
      lay.monos = std::move(r.monos);
      if (r.right_v) {
        lay.prepend_r(*r.right_v);
        k2 = bound_step(k2, *r.right_v);
      }
    }
    ++h;
  }
  return finish(lay.L, free_reduce(join_monos(lay.monos)), lay.R, h, b);
}

}  // namespace

PiAction pi_action(const Word& w, Index m, Side side) {
  require_pi_word(w, "pi_action");
  Budget b(kUnbounded);
  return pi_action_impl(w, m, side, b);
}

std::pair<Word, Word> opi_commute(Index m, Index k, int eps, Side side) {
  if (k == 0) throw std::invalid_argument("opi_commute needs k >= 1");
  if (eps != 1 && eps != -1) throw std::invalid_argument("opi_commute needs eps = +-1");
  const Index top = add_index(m, k);
  std::vector<Index> vs;
  for (Index i = m; i + 1 < top; ++i) vs.push_back(i);
  vs.push_back(top - 1);
  vs.push_back(top - 1);
  std::vector<Symbol> p;
  if (side == Side::Right) {
    p.push_back(pib(inc(top), eps));
    for (Index i = top + 1; i-- > m;) p.push_back(pi(i, eps));
    return {v_word(vs, 1), Word(std::move(p))};
  }
  for (Index i = m; i <= top; ++i) p.push_back(pi(i, eps));
  p.push_back(pib(inc(top), eps));
  return {Word(std::move(p)), invert(v_word(vs, 1))};
}

LMRForm to_first_form(const Word& w, BVMode, const LmrOptions& opts) {
  Budget b(opts.max_steps);
  FirstForm f = first_form_impl(w, b);
  LMRForm out;
  out.L = v_word(f.L, 1);
  out.M = Word(std::move(f.M));
  out.R = v_word(f.R, -1);
  out.height_M = height_of(out.M);
  out.k = out.height_M.is_empty() ? 0 : out.height_M.value();
  out.steps = b.used();
  return out;
}

MonoRaise mono_raise(const Monosyllable& M, RaiseOp op, Index m) {
  Budget b(kUnbounded);
  return mono_raise_impl(M, op, m, b);
}

WordRaise raise_word_heights(const std::vector<Monosyllable>& monos) {
  Budget b(kUnbounded);
  return raise_word_heights_impl(monos, b);
}

MRaise raise_M(const Word& M, Index h, Side side) {
  if (!uses_only(M, {Family::Pi, Family::PiBar})) {
    throw AlphabetError("raise_M expects pi/pibar letters only");
  }
  const HeightSet hs = height_of(M);
  if (!hs.contains(h)) {
    throw std::invalid_argument("raise_M: " + std::to_string(h) + " is not in height " +
                                to_string(hs));
  }
  if (hs.kind() == HeightSet::Kind::Tail) return {std::nullopt, M};
  Budget b(kUnbounded);
  const auto monos = split_monos(M);
  WordRaise r = side == Side::Right ? raise_word_heights_impl(monos, b)
                                    : raise_word_heights_left(monos, b);
  return {r.right_v, join_monos(r.monos)};
}

Index l_height_bound(const Word& L) {
  std::vector<Index> idx;
  for (const auto& s : L) {
    if (s.family != Family::V || s.exp != 1) {
      throw AlphabetError("l_height_bound expects positive v letters only");
    }
    idx.push_back(s.index);
  }
  return bound_of(idx);
}

LMRForm to_third_form(const Word& w, BVMode, const LmrOptions& opts) {
  Budget b(opts.max_steps);
  return third_form_impl(w, b);
}

BraidWord m_to_sigma(const Word& M, Index h) {
  if (h == 0 && !M.empty()) throw std::invalid_argument("m_to_sigma: height 0 admits no letters");
  std::vector<Symbol> out;
  out.reserve(M.size());
  for (const auto& s : M) {
    const bool ok = (s.family == Family::Pi && s.index + 2 <= h) ||
                    (s.family == Family::PiBar && s.index + 1 == h);
    if (!ok) {
      throw std::invalid_argument("m_to_sigma: " + to_string(s) + " has no height " +
                                  std::to_string(h));
    }
    out.push_back(sig(h - 1 - s.index, s.exp));
  }
  return BraidWord::from_word(Word(std::move(out)));
}

BVDecision decide_bv(const Word& w, BVMode mode, const LmrOptions& opts) {
  BVDecision d;
  d.form = to_third_form(w, mode, opts);
  const BraidWord beta = m_to_sigma(d.form.M, d.form.k);
  std::vector<Symbol> lr;
  for (const auto& s : d.form.L * d.form.R) lr.push_back(lam(s.index, s.exp));
  const bool f_trivial = is_trivial_F(Word(std::move(lr)));
  if (mode == BVMode::V) {
    const Permutation p = permutation_image(beta);
    d.trivial = f_trivial && p.is_identity();
    d.beta = p;
    return d;
  }
  d.beta = beta;
  if (!f_trivial || exponent_sum(beta) != 0 || !permutation_image(beta).is_identity()) {
    return d;
  }
  auto red = reduce_handles(beta, opts.braid_steps);
  d.braid_steps = red.steps;
  d.trivial = red.reduced.empty();
  return d;
}

bool is_trivial_bv(const Word& w, BVMode mode, const LmrOptions& opts) {
  return decide_bv(w, mode, opts).trivial;
}

bool equal_bv(const Word& a, const Word& b, BVMode mode, const LmrOptions& opts) {
  return is_trivial_bv(a * invert(b), mode, opts);
}

}  // namespace tbv
