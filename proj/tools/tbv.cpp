// Command-line front end: normalize, lmr, trivial, equal, verify, selftest.
// Exit codes: 0 true/success, 1 false/failure, 2 usage or parse error,
// 3 step cap exceeded.

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "selftest.hpp"
#include "tbv/braid.hpp"
#include "tbv/bv_lmr.hpp"
#include "tbv/hatgroups.hpp"
#include "tbv/perms.hpp"
#include "tbv/presentations.hpp"
#include "tbv/syntax.hpp"
#include "tbv/thompson_f.hpp"

using json = nlohmann::json;
using namespace tbv;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

enum class Target { F, VHat, BVHat, V, BV, BInf, SInf };

std::optional<Target> target_from(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "f") return Target::F;
  if (s == "vhat") return Target::VHat;
  if (s == "bvhat") return Target::BVHat;
  if (s == "v") return Target::V;
  if (s == "bv") return Target::BV;
  if (s == "binf") return Target::BInf;
  if (s == "sinf") return Target::SInf;
  return std::nullopt;
}

const char* target_name(Target t) {
  switch (t) {
    case Target::F: return "F";
    case Target::VHat: return "Vhat";
    case Target::BVHat: return "BVhat";
    case Target::V: return "V";
    case Target::BV: return "BV";
    case Target::BInf: return "Binf";
    case Target::SInf: return "Sinf";
  }
  return "?";
}

struct Globals {
  bool json = false;
  std::optional<std::uint64_t> max_steps;
  std::optional<std::uint64_t> braid_steps;

  HatOptions hat() const {
    HatOptions o;
    if (max_steps) o.max_steps = *max_steps;
    if (braid_steps) o.braid_steps = *braid_steps;
    return o;
  }
  LmrOptions lmr() const {
    LmrOptions o;
    if (max_steps) o.max_steps = *max_steps;
    if (braid_steps) o.braid_steps = *braid_steps;
    return o;
  }
};

json indices_json(const FNormal& f) { return json(f.indices); }

void emit(const Globals& g, const json& record, const std::string& human) {
  if (g.json) {
    std::cout << record.dump() << "\n";
  } else {
    std::cout << human << "\n";
  }
}

std::string indices_text(const FNormal& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f.indices[i]);
  }
  return s + "]";
}

int cmd_normalize(const Globals& g, const std::string& group, const std::string& text) {
  const auto t = target_from(group);
  if (!t || (*t != Target::F && *t != Target::VHat && *t != Target::BVHat)) {
    std::cerr << "normalize: --group must be F, Vhat or BVhat\n";
    return kUsage;
  }
  const Word w = parse_word(text);
  json rec{{"command", "normalize"}, {"group", target_name(*t)}, {"input", text}};
  if (*t == Target::F) {
    const FFraction f = f_fraction(w);
    rec["positive"] = indices_json(f.positive);
    rec["negative"] = indices_json(f.negative);
    emit(g, rec, "P=" + indices_text(f.positive) + " N=" + indices_text(f.negative));
    return kTrue;
  }
  const auto h = canonicalize_hat(w, *t == Target::VHat ? GroupMode::VHat : GroupMode::BVHat,
                                  g.hat());
  rec["f_part"] = indices_json(h.f_part);
  rec["beta"] = to_string(h.beta_word());
  rec["g_part"] = indices_json(h.g_part);
  rec["steps"] = h.steps;
  emit(g, rec, describe(h));
  return kTrue;
}

int cmd_lmr(const Globals& g, const std::string& text) {
  const Word w = parse_word(text);
  const LMRForm f = to_third_form(w, BVMode::BV, g.lmr());
  json rec{{"command", "lmr"},
           {"input", text},
           {"L", to_string(f.L)},
           {"M", to_string(f.M)},
           {"R", to_string(f.R)},
           {"height_M", to_string(f.height_M)},
           {"k", f.k},
           {"steps", f.steps}};
  emit(g, rec,
       "L=\"" + to_string(f.L) + "\" M=\"" + to_string(f.M) + "\" R=\"" + to_string(f.R) +
           "\" height(M)=" + to_string(f.height_M) + " k=" + std::to_string(f.k));
  return kTrue;
}

// Decides w = 1 in the target group; fills step counts into rec.
bool decide(const Globals& g, Target t, const Word& w, json& rec) {
  switch (t) {
    case Target::F: {
      const auto f = f_fraction(w);
      rec["positive"] = indices_json(f.positive);
      rec["negative"] = indices_json(f.negative);
      return f.positive == f.negative;
    }
    case Target::VHat:
    case Target::BVHat: {
      const auto d =
          decide_hat(w, t == Target::VHat ? GroupMode::VHat : GroupMode::BVHat, g.hat());
      rec["fraction"] = describe(d.fraction);
      rec["steps"] = {{"rewrite", d.fraction.steps}, {"braid", d.braid_steps}};
      return d.trivial;
    }
    case Target::V:
    case Target::BV: {
      const auto d = decide_bv(w, t == Target::V ? BVMode::V : BVMode::BV, g.lmr());
      rec["L"] = to_string(d.form.L);
      rec["M"] = to_string(d.form.M);
      rec["R"] = to_string(d.form.R);
      rec["k"] = d.form.k;
      rec["steps"] = {{"rewrite", d.form.steps}, {"braid", d.braid_steps}};
      return d.trivial;
    }
    case Target::BInf: {
      const auto b = BraidWord::from_word(w);
      const bool quick = exponent_sum(b) == 0 && permutation_image(b).is_identity();
      if (!quick) return false;
      const auto red = reduce_handles(b, g.hat().braid_steps);
      rec["steps"] = {{"braid", red.steps}};
      return red.reduced.empty();
    }
    case Target::SInf:
      return from_sigma_word(w).is_identity();
  }
  return false;
}

int cmd_trivial(const Globals& g, const std::string& group, const std::string& text) {
  const auto t = target_from(group);
  if (!t) {
    std::cerr << "trivial: unknown --group " << group << "\n";
    return kUsage;
  }
  const Word w = parse_word(text);
  json rec{{"command", "trivial"}, {"group", target_name(*t)}, {"input", text}};
  const bool v = decide(g, *t, w, rec);
  rec["verdict"] = v;
  emit(g, rec, v ? "true" : "false");
  return v ? kTrue : kFalse;
}

int cmd_equal(const Globals& g, const std::string& group, const std::vector<std::string>& words) {
  const auto t = target_from(group);
  if (!t) {
    std::cerr << "equal: unknown --group " << group << "\n";
    return kUsage;
  }
  if (words.size() != 2) {
    std::cerr << "equal: expected two words separated by --\n";
    return kUsage;
  }
  const Word a = parse_word(words[0]);
  const Word b = parse_word(words[1]);
  json rec{{"command", "equal"}, {"group", target_name(*t)}, {"input", words}};
  const bool v = decide(g, *t, a * invert(b), rec);
  rec["verdict"] = v;
  emit(g, rec, v ? "true" : "false");
  return v ? kTrue : kFalse;
}

int cmd_verify(const Globals& g, Index bound, const std::optional<std::string>& family) {
  VerifyOptions opts{g.hat(), g.lmr()};
  const VerifyReport rep = verify_all(bound, family, opts);
  std::size_t holds = 0;
  bool capped = false;
  for (const auto& r : rep.results) {
    holds += r.verdict == Verdict::Holds;
    capped = capped || r.verdict == Verdict::ResourceCap;
    if (g.json) {
      std::cout << json{{"source", r.instance.source},
                        {"group", group_name(r.instance.group)},
                        {"verdict", verdict_name(r.verdict)},
                        {"decider", r.decider},
                        {"steps", r.steps},
                        {"transcript", r.transcript}}
                       .dump()
                << "\n";
    }
  }
  json fams = json::object();
  for (const auto& [id, c] : rep.per_family) fams[id] = {{"passed", c.passed}, {"total", c.total}};
  if (g.json) {
    std::cout << json{{"summary", true},         {"bound", bound},
                      {"instances", rep.results.size()}, {"holds", holds},
                      {"families", fams}}
                     .dump()
              << "\n";
  } else {
    for (const auto& [id, c] : rep.per_family) {
      std::cout << id << ": " << c.passed << "/" << c.total << "\n";
    }
    for (const auto* f : rep.failures()) {
      std::cout << verdict_name(f->verdict) << ": " << f->instance.source << " -- "
                << f->transcript << "\n";
    }
    std::cout << "verify: " << holds << "/" << rep.results.size() << " instances hold at bound "
              << bound << "\n";
  }
  if (holds == rep.results.size()) return kTrue;
  const bool any_fail = std::any_of(rep.results.begin(), rep.results.end(),
                                    [](const VerifyResult& r) { return r.verdict == Verdict::Fails; });
  return any_fail || !capped ? kFalse : kCap;
}

int cmd_selftest(const Globals& g, const SelftestConfig& cfg) {
  const SelftestResult r = run_selftest(cfg);
  auto tally = [](const ModeTally& t) {
    return json{{"agree", t.agree}, {"trivial", t.trivial}, {"capped", t.capped}};
  };
  json rec{{"command", "selftest"},  {"samples", r.samples},  {"seed", cfg.seed},
           {"max_index", cfg.max_index}, {"max_len", cfg.max_len}, {"BV", tally(r.bv)},
           {"V", tally(r.v)},       {"disagreements", r.disagreements}, {"ok", r.ok()}};
  std::string human = "selftest seed=" + std::to_string(cfg.seed) +
                      " samples=" + std::to_string(r.samples) +
                      " BV agree=" + std::to_string(r.bv.agree) +
                      " trivial=" + std::to_string(r.bv.trivial) +
                      " V agree=" + std::to_string(r.v.agree) +
                      " trivial=" + std::to_string(r.v.trivial);
  for (const auto& d : r.disagreements) human += "\ndisagree " + d;
  emit(g, rec, human);
  if (r.ok()) return kTrue;
  if (r.disagreements.empty()) return kCap;
  return kFalse;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("TBV_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problems in Thompson's group F, the hat groups, and V / BV"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit structured JSON records");
  app.add_option("--max-steps", g.max_steps, "Rewriting step cap");
  app.add_option("--braid-steps", g.braid_steps, "Braid handle-reduction step cap");

  std::string group;
  std::string word;

  auto* normalize = app.add_subcommand("normalize", "Canonical data of a word");
  normalize->add_option("--group", group, "F, Vhat or BVhat")->required();
  normalize->add_option("word", word, "Word")->required();

  auto* lmr = app.add_subcommand("lmr", "L*M*R form of a word in v, p, pb");
  lmr->add_option("word", word, "Word")->required();

  auto* trivial = app.add_subcommand("trivial", "Decide whether a word is trivial");
  trivial->add_option("--group", group, "F, Vhat, BVhat, V, BV, Binf or Sinf")->required();
  trivial->add_option("word", word, "Word")->required();

  auto* equal = app.add_subcommand("equal", "Decide whether two words are equal");
  equal->add_option("--group", group, "F, Vhat, BVhat, V, BV, Binf or Sinf")->required();
  std::string word2;
  equal->add_option("word1", word, "First word")->required();
  equal->add_option("word2", word2, "Second word (after --)")->required();

  Index bound = 8;
  std::optional<std::string> family;
  auto* verify = app.add_subcommand("verify", "Verify every presentation instance");
  verify->add_option("--bound", bound, "Index bound N")->capture_default_str();
  verify->add_option("--family", family, "Only this family id");

  SelftestConfig cfg;
  std::optional<std::uint64_t> seed;
  auto* selftest = app.add_subcommand("selftest", "Oracle agreement on random words");
  selftest->add_option("--samples", cfg.samples)->capture_default_str();
  selftest->add_option("--seed", seed, "Seed (default: $TBV_SEED, else 1)");
  selftest->add_option("--max-index", cfg.max_index)->capture_default_str();
  selftest->add_option("--max-len", cfg.max_len)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*normalize) return cmd_normalize(g, group, word);
    if (*lmr) return cmd_lmr(g, word);
    if (*trivial) return cmd_trivial(g, group, word);
    if (*equal) return cmd_equal(g, group, {word, word2});
    if (*verify) return cmd_verify(g, bound, family);
    if (*selftest) {
      cfg.seed = seed ? *seed : default_seed();
      cfg.hat = g.hat();
      cfg.lmr = g.lmr();
      return cmd_selftest(g, cfg);
    }
  } catch (const StepCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
