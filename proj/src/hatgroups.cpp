#include "tbv/hatgroups.hpp"

#include <algorithm>

namespace tbv {

const char* mode_name(GroupMode m) { return m == GroupMode::VHat ? "Vhat" : "BVhat"; }

Word push_sigma_past_lambda(Symbol s, Symbol l) {
  if (s.family != Family::Sigma || l.family != Family::Lambda || l.exp != 1) {
    throw AlphabetError("push_sigma_past_lambda expects (sigma, positive lambda)");
  }
  const Index q = s.index;
  const Index m = l.index;
  const int e = s.exp;
  if (m < q) return {lam(m), sig(add_index(q, 1), e)};
  if (m == q) return {lam(add_index(m, 1)), sig(m, e), sig(add_index(m, 1), e)};
  if (m == q + 1) return {lam(q), sig(m, e), sig(q, e)};
  return {lam(m), sig(q, e)};
}

Word push_lambda_inverse_right(Symbol l, Symbol x) {
  if (l.family != Family::Lambda || l.exp != -1) {
    throw AlphabetError("push_lambda_inverse_right expects a negative lambda first");
  }
  const Index m = l.index;
  const Index q = x.index;
  if (x.family == Family::Lambda && x.exp == 1) {
    if (m == q) return {};
    // l_m^-1 l_q = l_{q+1} l_m^-1 (m<q);  l_m^-1 l_q = l_q l_{m+1}^-1 (q<m)
    if (m < q) return {lam(add_index(q, 1)), lam(m, -1)};
    return {lam(q), lam(add_index(m, 1), -1)};
  }
  if (x.family != Family::Sigma) {
    throw AlphabetError("push_lambda_inverse_right expects lambda or sigma second");
  }
  const int e = x.exp;
  // Rearrangements of s_q l_m = l_m s_{q+1} (m<q), s_m l_m = l_{m+1} s_m s_{m+1},
  // s_m l_{m+1} = l_m s_{m+1} s_m and s_q l_m = l_m s_q (m>q+1).
  if (m < q) return {sig(add_index(q, 1), e), lam(m, -1)};
  if (m == q) return {sig(add_index(q, 1), e), sig(q, e), lam(add_index(q, 1), -1)};
  if (m == q + 1) return {sig(q, e), sig(m, e), lam(q, -1)};
  return {sig(q, e), lam(m, -1)};
}

const RuleTable& default_rule_table() {
  static const RuleTable table{&push_sigma_past_lambda, &push_lambda_inverse_right};
  return table;
}

namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t cap) : cap_(cap) {}
  void tick() {
    if (++used_ > cap_) {
      throw StepCapExceeded("hat canonicalization exceeded " + std::to_string(cap_) +
                            " steps");
    }
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

// Append a sigma letter to a sigma word, cancelling against its end.
void append_sigma(std::vector<Symbol>& s, Symbol x, GroupMode mode) {
  if (mode == GroupMode::VHat) x.exp = 1;
  if (!s.empty() && s.back().index == x.index && s.back().exp == -x.exp) {
    s.pop_back();
  } else if (mode == GroupMode::VHat && !s.empty() && s.back().index == x.index) {
    s.pop_back();
  } else {
    s.push_back(x);
  }
}

}  // namespace

HatFraction canonicalize_hat(const Word& w, GroupMode mode, const HatOptions& opts) {
  if (!uses_only(w, {Family::Lambda, Family::Sigma})) {
    throw AlphabetError("canonicalize_hat expects lambda/sigma letters only");
  }
  const RuleTable& rules = opts.rules ? *opts.rules : default_rule_table();
  Budget budget(opts.max_steps);

  // Phase 1: right to left, push every inverse lambda past all positive
  // lambdas and sigmas to its right. Result: pos * neg^{-1}.
  std::vector<Symbol> pos;  // positive lambdas and sigmas, left to right
  std::vector<Index> neg;   // l_{neg0}^-1 l_{neg1}^-1 ... left to right
  std::vector<Symbol> out;
  const Word reduced = free_reduce(w);
  for (auto it = reduced.vec().rbegin(); it != reduced.vec().rend(); ++it) {
    if (!(it->family == Family::Lambda && it->exp < 0)) {
      pos.insert(pos.begin(), *it);
      continue;
    }
    Symbol carry = *it;
    bool cancelled = false;
    out.clear();
    std::size_t j = 0;
    for (; j < pos.size(); ++j) {
      budget.tick();
      const Word r = rules.lambda_inverse_right(carry, pos[j]);
      if (r.empty()) {
        cancelled = true;
        break;
      }
      const Symbol last = r[r.size() - 1];
      if (last.family != Family::Lambda || last.exp != -1) {
        throw std::logic_error("rule table: lambda^-1 rule must end in lambda^-1");
      }
      out.insert(out.end(), r.begin(), r.end() - 1);
      carry = last;
    }
    if (cancelled) {
      out.insert(out.end(), pos.begin() + static_cast<long>(j) + 1, pos.end());
    } else {
      neg.insert(neg.begin(), carry.index);
    }
    pos.swap(out);
  }

  // Phase 2: left to right, move each positive lambda left past the sigma
  // block collected so far. Result: lambdas * sigmas.
  std::vector<Index> lambdas;
  std::vector<Symbol> sigmas;
  std::vector<Symbol> rebuilt;  // reversed
  for (const auto& x : pos) {
    if (x.family == Family::Sigma) {
      append_sigma(sigmas, x, mode);
      continue;
    }
    Symbol carry = x;
    rebuilt.clear();
    for (auto k = sigmas.size(); k-- > 0;) {
      budget.tick();
      const Word r = rules.sigma_past_lambda(sigmas[k], carry);
      if (r.empty() || r[0].family != Family::Lambda || r[0].exp != 1) {
        throw std::logic_error("rule table: sigma/lambda rule must start with lambda");
      }
      carry = r[0];
      for (std::size_t t = r.size(); t-- > 1;) rebuilt.push_back(r[t]);
    }
    lambdas.push_back(carry.index);
    sigmas.clear();
    for (auto t = rebuilt.rbegin(); t != rebuilt.rend(); ++t) append_sigma(sigmas, *t, mode);
  }

  HatFraction h;
  h.mode = mode;
  h.f_part = normalize_monoid(std::move(lambdas));
  std::vector<Index> g(neg.rbegin(), neg.rend());
  h.g_part = normalize_monoid(std::move(g));
  const Word sw(std::move(sigmas));
  if (mode == GroupMode::BVHat) {
    h.beta = BraidWord::from_word(sw);
  } else {
    h.beta = from_sigma_word(sw);
  }
  h.steps = budget.used();
  return h;
}

Word HatFraction::beta_word() const {
  if (const auto* b = std::get_if<BraidWord>(&beta)) return b->to_word();
  return to_sigma_word(std::get<Permutation>(beta));
}

Word HatFraction::to_word() const {
  return f_part.to_word() * beta_word() * invert(g_part.to_word());
}

HatDecision decide_hat(const Word& w, GroupMode mode, const HatOptions& opts) {
  HatDecision d;
  d.fraction = canonicalize_hat(w, mode, opts);
  if (!(d.fraction.f_part == d.fraction.g_part)) return d;
  if (const auto* b = std::get_if<BraidWord>(&d.fraction.beta)) {
    if (exponent_sum(*b) != 0 || !permutation_image(*b).is_identity()) return d;
    auto red = reduce_handles(*b, opts.braid_steps);
    d.braid_steps = red.steps;
    d.trivial = red.reduced.empty();
  } else {
    d.trivial = std::get<Permutation>(d.fraction.beta).is_identity();
  }
  return d;
}

bool is_trivial_hat(const Word& w, GroupMode mode, const HatOptions& opts) {
  return decide_hat(w, mode, opts).trivial;
}

bool equal_hat(const Word& a, const Word& b, GroupMode mode, const HatOptions& opts) {
  return is_trivial_hat(a * invert(b), mode, opts);
}

namespace {

std::string indices_text(const FNormal& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.indices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f.indices[i]);
  }
  return s + "]";
}

}  // namespace

std::string describe(const HatFraction& h) {
  return "F=" + indices_text(h.f_part) + " beta=\"" + to_string(h.beta_word()) +
         "\" G=" + indices_text(h.g_part);
}

}  // namespace tbv
