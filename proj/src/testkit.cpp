#include "lameps/testkit.hpp"

#include <algorithm>
#include <functional>

#include "lameps/erasure.hpp"
#include "lameps/subst.hpp"
#include "lameps/typing.hpp"

namespace lameps {

namespace {

size_t pick(std::mt19937_64& rng, size_t n) { return (size_t)(rng() % n); }

struct TermGen {
  std::mt19937_64 rng;
  const GenConfig& cfg;

  TermPtr leaf(int depth) {
    std::vector<TermPtr> choices;
    if (depth > 0) choices.push_back(bound_var((int)pick(rng, (size_t)depth)));
    if (!cfg.closed && !cfg.var_pool.empty())
      choices.push_back(free_var(cfg.var_pool[pick(rng, cfg.var_pool.size())]));
    choices.push_back(zero_term());
    return choices[pick(rng, choices.size())];
  }

  TermPtr gen(int budget, int depth) {
    if (budget <= 1) return leaf(depth);
    // weights: App 3, DApp 3, Lam 2, Sum 2, Eps 1, leaf 1
    int w = (int)pick(rng, 12);
    if (budget < 3 && w < 10) w = 10;  // binary nodes need room
    if (w < 3) {
      int left = 1 + (int)pick(rng, (size_t)(budget - 2));
      return app(gen(left, depth), gen(budget - 1 - left, depth));
    }
    if (w < 6) {
      int left = 1 + (int)pick(rng, (size_t)(budget - 2));
      return dapp(gen(left, depth), gen(budget - 1 - left, depth));
    }
    if (w < 8) {
      std::string hint = cfg.var_pool.empty() ? "x" : cfg.var_pool[pick(rng, cfg.var_pool.size())];
      return lam(hint, nullptr, gen(budget - 1, depth + 1));
    }
    if (w < 10) {
      int left = 1 + (int)pick(rng, (size_t)(budget - 2));
      return sum(gen(left, depth), gen(budget - 1 - left, depth));
    }
    if (w == 10) return eps(gen(budget - 1, depth));
    return leaf(depth);
  }
};

}  // namespace

TermPtr gen_term(const GenConfig& cfg) {
  TermGen g{std::mt19937_64(cfg.seed), cfg};
  return g.gen(std::max(cfg.max_size, 1), 0);
}

TypePtr gen_type(std::mt19937_64& rng, int depth, const std::vector<std::string>& bases) {
  if (depth <= 0 || pick(rng, 3) == 0)
    return base_type(bases[pick(rng, bases.size())]);
  TypePtr d = gen_type(rng, depth - 1, bases);
  TypePtr c = gen_type(rng, depth - 1, bases);
  return arrow_type(d, c);
}

namespace {

struct TypedGen {
  std::mt19937_64 rng;
  const GenConfig& cfg;
  const TypingContext& ctx;
  std::vector<TypePtr> bound;  // innermost last
  int attempts = 2000;

  std::vector<TypePtr> scope_types() {
    std::vector<TypePtr> out;
    for (const auto& e : ctx) out.push_back(e.second);
    for (const auto& t : bound) out.push_back(t);
    return out;
  }

  std::optional<TermPtr> variable_of(const TypePtr& goal) {
    std::vector<TermPtr> hits;
    for (size_t i = 0; i < bound.size(); i++)
      if (type_eq(bound[bound.size() - 1 - i], goal)) hits.push_back(bound_var((int)i));
    if (!cfg.closed)
      for (const auto& e : ctx)
        if (type_eq(e.second, goal)) hits.push_back(free_var(e.first));
    if (hits.empty()) return std::nullopt;
    return hits[pick(rng, hits.size())];
  }

  std::string binder_hint() {
    return cfg.var_pool.empty() ? "x" : cfg.var_pool[pick(rng, cfg.var_pool.size())];
  }

  std::optional<TermPtr> gen(const TypePtr& goal, int budget) {
    if (attempts-- <= 0) return std::nullopt;
    struct Move {
      int weight;
      int id;
    };
    std::vector<Move> moves;
    auto add = [&](int id, int weight) { moves.push_back(Move{weight, id}); };
    if (budget <= 1) {
      if (auto v = variable_of(goal)) return v;
      return zero_term();
    }
    add(0, 2);                              // variable
    add(1, 1);                              // zero
    if (budget >= 3) add(2, 2);             // sum
    add(3, 1);                              // eps
    if (goal->is_arrow()) {
      add(4, 4);                            // lambda
      if (budget >= 3) add(5, 2);           // differential application
    }
    if (budget >= 4) add(6, 3);             // application

    while (!moves.empty()) {
      int total = 0;
      for (const Move& m : moves) total += m.weight;
      int roll = (int)pick(rng, (size_t)total);
      size_t chosen = 0;
      for (size_t i = 0; i < moves.size(); i++) {
        roll -= moves[i].weight;
        if (roll < 0) {
          chosen = i;
          break;
        }
      }
      int id = moves[chosen].id;
      moves.erase(moves.begin() + (long)chosen);
      switch (id) {
        case 0:
          if (auto v = variable_of(goal)) return v;
          break;
        case 1:
          return zero_term();
        case 2: {
          int left = 1 + (int)pick(rng, (size_t)(budget - 2));
          auto l = gen(goal, left);
          auto r = gen(goal, budget - 1 - left);
          if (l && r) return sum(*l, *r);
          break;
        }
        case 3: {
          auto b = gen(goal, budget - 1);
          if (b) return eps(*b);
          break;
        }
        case 4: {
          bound.push_back(goal->dom);
          auto body = gen(goal->cod, budget - 1);
          bound.pop_back();
          if (body) return lam(binder_hint(), goal->dom, *body);
          break;
        }
        case 5: {
          int left = 1 + (int)pick(rng, (size_t)(budget - 2));
          auto fun = gen(goal, left);
          auto arg = gen(goal->dom, budget - 1 - left);
          if (fun && arg) return dapp(*fun, *arg);
          break;
        }
        case 6: {
          std::vector<TypePtr> pool = scope_types();
          pool.push_back(goal);
          if (goal->is_arrow()) pool.push_back(goal->dom);
          TypePtr side = pool[pick(rng, pool.size())];
          int left = 1 + (int)pick(rng, (size_t)(budget - 2));
          auto fun = gen(arrow_type(side, goal), left);
          auto arg = gen(side, budget - 1 - left);
          if (fun && arg) return app(*fun, *arg);
          break;
        }
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<TermPtr> gen_typed_term(const GenConfig& cfg, const TypingContext& ctx,
                                      const TypePtr& goal) {
  // Retry with derived seeds: a draw can land on a term whose application
  // heads do not synthesize (checkable only declaratively); those are
  // rejected by the post-check.
  for (uint64_t retry = 0; retry < 40; retry++) {
    TypedGen g{std::mt19937_64(cfg.seed + retry * 0x9e3779b97f4a7c15ull), cfg, ctx, {}, 4000};
    auto t = g.gen(goal, std::max(cfg.max_size, 1));
    if (t && check(ctx, *t, goal)) return t;
  }
  return std::nullopt;
}

namespace {

// One-level rewrites of the equivalence rules, both orientations. Rules that
// introduce an arbitrary subterm (0 ~ 0 s, 0 ~ D(0)*s, 0 ~ D(s)*0) draw a
// small locally-closed term from the generator.
std::vector<TermPtr> local_rewrites(const TermPtr& t, std::mt19937_64& rng,
                                    const GenConfig& cfg) {
  std::vector<TermPtr> out;
  auto small_term = [&] {
    GenConfig sub = cfg;
    sub.seed = rng();
    sub.max_size = 3;
    sub.closed = false;
    return gen_term(sub);
  };

  out.push_back(sum(t, zero_term()));  // s + 0 ~ s, backward, any position

  const TermPtr& a = t->a;
  const TermPtr& b = t->b;
  switch (t->tag) {
    case TermTag::Sum:
      // s + t ~ t + s
      out.push_back(sum(b, a));
      // (s + t) + e ~ s + (t + e)
      if (a->tag == TermTag::Sum) out.push_back(sum(a->a, sum(a->b, b)));
      if (b->tag == TermTag::Sum) out.push_back(sum(sum(a, b->a), b->b));
      // s + 0 ~ s
      if (b->tag == TermTag::Zero) out.push_back(a);
      // eps s + eps t ~ eps (s + t)
      if (a->tag == TermTag::Eps && b->tag == TermTag::Eps)
        out.push_back(eps(sum(a->a, b->a)));
      // (\x. s) + (\x. t) ~ \x. (s + t)
      if (a->tag == TermTag::Lam && b->tag == TermTag::Lam)
        out.push_back(lam(a->name, a->annotation, sum(a->a, b->a)));
      // (s e) + (t e) ~ (s + t) e
      if (a->tag == TermTag::App && b->tag == TermTag::App && alpha_eq(a->b, b->b))
        out.push_back(app(sum(a->a, b->a), a->b));
      // (D(s)*e) + (D(t)*e) ~ D(s + t)*e
      if (a->tag == TermTag::DApp && b->tag == TermTag::DApp && alpha_eq(a->b, b->b))
        out.push_back(dapp(sum(a->a, b->a), a->b));
      // D(s)*t + D(s)*e + eps(D(D(s)*t)*e) ~ D(s)*(t + e)
      if (a->tag == TermTag::Sum && a->a->tag == TermTag::DApp && a->b->tag == TermTag::DApp &&
          b->tag == TermTag::Eps && b->a->tag == TermTag::DApp &&
          b->a->a->tag == TermTag::DApp) {
        const TermPtr& d1 = a->a;
        const TermPtr& d2 = a->b;
        const TermPtr& corr = b->a;
        if (alpha_eq(d1->a, d2->a) && alpha_eq(corr->a->a, d1->a) &&
            alpha_eq(corr->a->b, d1->b) && alpha_eq(corr->b, d2->b))
          out.push_back(dapp(d1->a, sum(d1->b, d2->b)));
      }
      // (s t) + eps((D(s)*e) t) ~ s (t + eps e)
      if (a->tag == TermTag::App && b->tag == TermTag::Eps && b->a->tag == TermTag::App &&
          b->a->a->tag == TermTag::DApp && alpha_eq(b->a->a->a, a->a) &&
          alpha_eq(b->a->b, a->b))
        out.push_back(app(a->a, sum(a->b, eps(b->a->a->b))));
      break;
    case TermTag::Zero:
      out.push_back(eps(zero_term()));          // eps 0, backward
      out.push_back(lam("x", nullptr, zero_term()));
      out.push_back(app(zero_term(), small_term()));
      out.push_back(dapp(zero_term(), small_term()));
      out.push_back(dapp(small_term(), zero_term()));
      break;
    case TermTag::Eps:
      // eps 0 ~ 0
      if (a->tag == TermTag::Zero) out.push_back(zero_term());
      // eps (s + t) ~ eps s + eps t
      if (a->tag == TermTag::Sum) out.push_back(sum(eps(a->a), eps(a->b)));
      // eps (\x. t) ~ \x. eps t
      if (a->tag == TermTag::Lam) out.push_back(lam(a->name, a->annotation, eps(a->a)));
      // eps (s t) ~ (eps s) t
      if (a->tag == TermTag::App) out.push_back(app(eps(a->a), a->b));
      // eps (D(t)*e) ~ D(eps t)*e  and  ~ D(t)*(eps e)
      if (a->tag == TermTag::DApp) {
        out.push_back(dapp(eps(a->a), a->b));
        out.push_back(dapp(a->a, eps(a->b)));
      }
      // eps D(D(s)*t)*e ~ eps eps D(D(s)*t)*e
      if (a->tag == TermTag::DApp && a->a->tag == TermTag::DApp) out.push_back(eps(t));
      // eps eps D(D(s)*t)*e ~ eps D(D(s)*t)*e
      if (a->tag == TermTag::Eps && a->a->tag == TermTag::DApp &&
          a->a->a->tag == TermTag::DApp)
        out.push_back(a);
      break;
    case TermTag::Lam:
      // \x. 0 ~ 0 (binder cannot occur in 0)
      if (a->tag == TermTag::Zero) out.push_back(zero_term());
      // \x. (s + t) ~ (\x. s) + (\x. t)
      if (a->tag == TermTag::Sum)
        out.push_back(sum(lam(t->name, t->annotation, a->a), lam(t->name, t->annotation, a->b)));
      // \x. eps t ~ eps (\x. t)
      if (a->tag == TermTag::Eps) out.push_back(eps(lam(t->name, t->annotation, a->a)));
      break;
    case TermTag::App:
      // 0 s ~ 0
      if (a->tag == TermTag::Zero) out.push_back(zero_term());
      // (s + t) e ~ (s e) + (t e)
      if (a->tag == TermTag::Sum) out.push_back(sum(app(a->a, b), app(a->b, b)));
      // (eps s) t ~ eps (s t)
      if (a->tag == TermTag::Eps) out.push_back(eps(app(a->a, b)));
      // s (t + eps e) ~ (s t) + eps((D(s)*e) t)
      if (b->tag == TermTag::Sum && b->b->tag == TermTag::Eps)
        out.push_back(sum(app(a, b->a), eps(app(dapp(a, b->b->a), b->a))));
      break;
    case TermTag::DApp:
      // D(0)*e ~ 0
      if (a->tag == TermTag::Zero) out.push_back(zero_term());
      // D(s + t)*e ~ D(s)*e + D(t)*e
      if (a->tag == TermTag::Sum) out.push_back(sum(dapp(a->a, b), dapp(a->b, b)));
      // D(eps t)*e ~ eps (D(t)*e)
      if (a->tag == TermTag::Eps) out.push_back(eps(dapp(a->a, b)));
      // D(s)*0 ~ 0
      if (b->tag == TermTag::Zero) out.push_back(zero_term());
      // D(s)*(t + e) ~ D(s)*t + D(s)*e + eps(D(D(s)*t)*e)
      if (b->tag == TermTag::Sum)
        out.push_back(sum(sum(dapp(a, b->a), dapp(a, b->b)), eps(dapp(dapp(a, b->a), b->b))));
      // D(s)*(eps t) ~ eps (D(s)*t)
      if (b->tag == TermTag::Eps) out.push_back(eps(dapp(a, b->a)));
      // D(D(s)*t)*e ~ D(D(s)*e)*t
      if (a->tag == TermTag::DApp) out.push_back(dapp(dapp(a->a, b), a->b));
      break;
    default:
      break;
  }
  return out;
}

void all_rewrites(const TermPtr& t, std::mt19937_64& rng, const GenConfig& cfg,
                  const std::function<TermPtr(TermPtr)>& rebuild,
                  std::vector<TermPtr>& out) {
  for (const TermPtr& r : local_rewrites(t, rng, cfg)) out.push_back(rebuild(r));
  switch (t->tag) {
    case TermTag::Lam:
      all_rewrites(
          t->a, rng, cfg,
          [&](TermPtr r) { return rebuild(lam(t->name, t->annotation, r)); }, out);
      break;
    case TermTag::Eps:
      all_rewrites(t->a, rng, cfg, [&](TermPtr r) { return rebuild(eps(r)); }, out);
      break;
    case TermTag::App:
      all_rewrites(t->a, rng, cfg, [&](TermPtr r) { return rebuild(app(r, t->b)); }, out);
      all_rewrites(t->b, rng, cfg, [&](TermPtr r) { return rebuild(app(t->a, r)); }, out);
      break;
    case TermTag::DApp:
      all_rewrites(t->a, rng, cfg, [&](TermPtr r) { return rebuild(dapp(r, t->b)); }, out);
      all_rewrites(t->b, rng, cfg, [&](TermPtr r) { return rebuild(dapp(t->a, r)); }, out);
      break;
    case TermTag::Sum:
      all_rewrites(t->a, rng, cfg, [&](TermPtr r) { return rebuild(sum(r, t->b)); }, out);
      all_rewrites(t->b, rng, cfg, [&](TermPtr r) { return rebuild(sum(t->a, r)); }, out);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<TermPtr> equiv_rewrites(const TermPtr& t, std::mt19937_64& rng) {
  GenConfig cfg;
  std::vector<TermPtr> out;
  all_rewrites(t, rng, cfg, [](TermPtr r) { return r; }, out);
  return out;
}

std::pair<TermPtr, TermPtr> gen_equiv_pair(const GenConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
  GenConfig base = cfg;
  base.seed = rng();
  TermPtr t = gen_term(base);
  TermPtr current = t;
  size_t rewrites = pick(rng, 6);
  for (size_t i = 0; i < rewrites; i++) {
    std::vector<TermPtr> candidates;
    all_rewrites(current, rng, cfg, [](TermPtr r) { return r; }, candidates);
    if (candidates.empty()) break;
    current = candidates[pick(rng, candidates.size())];
  }
  return {t, current};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "canonicity", "taylor", "regularity", "confluence", "typing", "soundness", "erasure"};
  return names;
}

namespace {

void fail_note(SuiteResult& res, const std::string& note) {
  res.failures++;
  if (res.notes.size() < 10) res.notes.push_back(note);
}

std::string pool_var(std::mt19937_64& rng, const GenConfig& cfg) {
  static const std::string fallback = "x";
  return cfg.var_pool.empty() ? fallback : cfg.var_pool[pick(rng, cfg.var_pool.size())];
}

// A copy of t with every occurrence of the free variable x renamed away, so
// preconditions of the form "x not free in ..." hold by construction.
TermPtr without_var(const TermPtr& t, const std::string& x) {
  return subst(t, x, free_var(x + "_aside"));
}

// Drives `instance(seed)` until `count` of them complete; expansion and
// enumeration budget refusals are skipped and replaced by later seeds.
template <typename F>
void scan_instances(uint64_t base_seed, int count, F&& instance) {
  int done = 0;
  for (uint64_t i = 0; done < count && i < (uint64_t)count * 50 + 200; i++) {
    try {
      if (instance(base_seed + i)) done++;
    } catch (const canonical_budget_error&) {
    } catch (const enumeration_budget_error&) {
    }
  }
}

SuiteResult suite_canonicity(const GenConfig& cfg, int count) {
  SuiteResult res;
  res.suite = "canonicity";
  scan_instances(cfg.seed, count, [&](uint64_t seed) {
    GenConfig c = cfg;
    c.seed = seed;
    auto [s, t] = gen_equiv_pair(c);
    bool eq = diff_eq(s, t);
    res.total++;
    if (!eq)
      fail_note(res, "rewritten pair not equivalent: " + print(s) + "  vs  " + print(t));
    return true;
  });
  // independent random pairs: distinct normalized canonical forms must be
  // reported inequivalent
  scan_instances(cfg.seed + 0x1000000, count, [&](uint64_t seed) {
    GenConfig c1 = cfg, c2 = cfg;
    c1.seed = 2 * seed;
    c2.seed = 2 * seed + 1;
    TermPtr s = gen_term(c1), t = gen_term(c2);
    CanonicalTerm ns = perm_normalize(canonicalize(s));
    CanonicalTerm nt = perm_normalize(canonicalize(t));
    bool distinct = canonical_cmp(ns, nt) != 0;
    res.total++;
    if (diff_eq(s, t) == distinct)
      fail_note(res, "decision disagrees with normalized forms: " + print(s) + "  vs  " + print(t));
    return true;
  });
  return res;
}

SuiteResult suite_taylor(const GenConfig& cfg, int count) {
  SuiteResult res;
  res.suite = "taylor";
  scan_instances(cfg.seed, count, [&](uint64_t seed) {
    std::mt19937_64 rng(seed);
    GenConfig c = cfg;
    std::string x = pool_var(rng, cfg);
    c.seed = rng();
    TermPtr s = gen_term(c);
    c.seed = rng();
    c.max_size = std::max(2, cfg.max_size / 2);
    TermPtr t = gen_term(c);
    c.seed = rng();
    TermPtr e = without_var(gen_term(c), x);
    TermPtr lhs = subst(s, x, sum(t, eps(e)));
    TermPtr rhs = taylor_rhs(s, x, t, e);
    bool eq = diff_eq(lhs, rhs);
    res.total++;
    if (!eq)
      fail_note(res, "taylor failed on s=" + print(s) + " x=" + x + " t=" + print(t) +
                         " e=" + print(e));
    return true;
  });
  return res;
}

SuiteResult suite_regularity(const GenConfig& cfg, int count) {
  SuiteResult res;
  res.suite = "regularity";
  scan_instances(cfg.seed, count, [&](uint64_t seed) {
    std::mt19937_64 rng(seed);
    GenConfig c = cfg;
    std::string x = pool_var(rng, cfg);
    c.seed = rng();
    TermPtr s = gen_term(c);
    c.seed = rng();
    c.max_size = std::max(2, cfg.max_size / 2);
    TermPtr u = without_var(gen_term(c), x);
    c.seed = rng();
    TermPtr v = without_var(gen_term(c), x);
    bool zero_law = diff_eq(dsubst(s, x, zero_term()), zero_term());
    TermPtr lhs = dsubst(s, x, sum(u, v));
    TermPtr rhs = sum(dsubst(s, x, u), subst(dsubst(s, x, v), x, sum(free_var(x), eps(u))));
    bool add_law = diff_eq(lhs, rhs);
    res.total += 2;
    if (!zero_law) fail_note(res, "d s/d x (0) not ~ 0 on s=" + print(s));
    if (!add_law)
      fail_note(res, "additivity law failed on s=" + print(s) + " u=" + print(u) +
                         " v=" + print(v));
    return true;
  });
  return res;
}

// Diamond join point: the full parallel reduct of the canonical
// representative. Every one-step successor of any tower reordering
// parallel-reduces into its class; a successor's own fpr is not enough, since
// a redex created by one reduction order is still undeveloped in the other.
SuiteResult suite_confluence(const GenConfig& cfg, int count) {
  SuiteResult res;
  res.suite = "confluence";
  scan_instances(cfg.seed, count, [&](uint64_t seed) {
    GenConfig c = cfg;
    c.seed = seed;
    TermPtr t = gen_term(c);
    std::vector<CanonicalTerm> succ = wf_step(t);
    TermPtr target = fpr(embed(canonicalize(t)));
    bool joined = true;
    for (const CanonicalTerm& s : succ) {
      bool found = false;
      for (const TermPtr& w : parallel_reducts(embed(s)))
        if (diff_eq(w, target)) {
          found = true;
          break;
        }
      if (!found) {
        joined = false;
        break;
      }
    }
    res.total++;
    if (!joined) fail_note(res, "diamond failed on " + print(t));
    return true;
  });
  return res;
}

SuiteResult suite_typing(const GenConfig& cfg, int count) {
  SuiteResult res;
  res.suite = "typing";
  std::vector<std::string> bases = {"a", "b"};
  scan_instances(cfg.seed, count, [&](uint64_t seed) {
    std::mt19937_64 rng(seed);
    TypePtr goal = gen_type(rng, cfg.type_depth, bases);
    GenConfig c = cfg;
    c.closed = true;
    c.seed = rng();
    auto gen = gen_typed_term(c, {}, goal);
    if (!gen) return false;
    TermPtr t = *gen;
    if (!check({}, t, goal)) {
      res.total++;
      fail_note(res, "generated term fails to re-check: " + print(t));
      return true;
    }
    // walk the reduction graph for a few steps
    TermPtr current = t;
    bool bad = false;
    for (int d = 0; d < 6 && !bad; d++) {
      CanonicalTerm canon = canonicalize(current);
      if (!check_wf({}, current, goal)) {
        fail_note(res, "subject reduction failed at " + print(current));
        bad = true;
        break;
      }
      std::vector<Redex> succs = step(embed(canon)).successors;
      if (succs.empty()) {
        if (!is_canonical_value(canon))
          fail_note(res, "progress failed: closed normal non-value " + print(embed(canon)));
        break;
      }
      for (const Redex& r : succs)
        if (!check_wf({}, r.result, goal)) {
          fail_note(res, "subject reduction failed after step: " + print(r.result));
          bad = true;
          break;
        }
      current = fpr(embed(canon));
    }
    NormalizeResult norm = normalize(t, 10000);
    if (norm.fuel_exhausted) fail_note(res, "typed term failed to normalize: " + print(t));
    res.total++;
    return true;
  });
  return res;
}

SuiteResult suite_soundness(const GenConfig& cfg, int count) {
  SuiteResult res;
  res.suite = "soundness";
  int per_modulus = std::max(count / 2, 1);
  for (int modulus : {3, 2}) {
    ModelConfig mc;
    mc.base_assignment["a"] = modulus;
    mc.size_limit = 1u << 16;
    TypePtr a = base_type("a");
    TypePtr aa = arrow_type(a, a);
    TypingContext ctx = {{"p", a}, {"q", a}};
    std::vector<TypePtr> goals = {a, aa, arrow_type(a, aa)};
    int checked = 0;
    for (uint64_t i = 0; checked < per_modulus && i < (uint64_t)per_modulus * 40; i++) {
      std::mt19937_64 rng(cfg.seed + i + (uint64_t)modulus * 77777);
      TypePtr goal = goals[pick(rng, goals.size())];
      GenConfig c = cfg;
      c.seed = rng();
      c.max_size = std::min(cfg.max_size, 10);
      auto gen = gen_typed_term(c, ctx, goal);
      if (!gen || !check(ctx, *gen, goal)) continue;
      TermPtr t = *gen;
      checked++;
      res.total++;

      // 0 = mismatch, 1 = agree, 2 = size-limit refusal somewhere inside
      auto agree = [&](const TermPtr& lhs, const TermPtr& rhs) -> int {
        bool same = true;
        try {
          for_each_env(ctx, mc, [&](const Env& env) {
            if (!same) return;
            if (!val_eq(eval(ctx, env, lhs, goal, mc), eval(ctx, env, rhs, goal, mc)))
              same = false;
          });
        } catch (const model_error&) {
          return 2;
        }
        return same ? 1 : 0;
      };

      // equivalence-related pair, kept only when still typable as written
      std::vector<TermPtr> rewrites;
      all_rewrites(t, rng, c, [](TermPtr r) { return r; }, rewrites);
      for (size_t k = 0; k < rewrites.size() && k < 4; k++) {
        TermPtr other = rewrites[pick(rng, rewrites.size())];
        if (!check(ctx, other, goal)) continue;
        if (agree(t, other) == 0) {
          fail_note(res, "equivalent terms denote differently: " + print(t) + "  vs  " +
                             print(other));
          break;
        }
      }
      // reduction-related pairs
      for (const Redex& r : step(t).successors) {
        if (!check(ctx, r.result, goal)) continue;
        if (agree(t, r.result) == 0) {
          fail_note(res, "reduct denotes differently: " + print(t) + " => " + print(r.result));
          break;
        }
      }
    }
  }
  return res;
}

SuiteResult suite_erasure(const GenConfig& cfg, int count) {
  SuiteResult res;
  res.suite = "erasure";
  scan_instances(cfg.seed, count, [&](uint64_t seed) {
    GenConfig c = cfg;
    c.seed = seed;
    TermPtr t = gen_term(c);
    std::vector<Redex> succ = step(t).successors;
    if (succ.empty()) return false;
    std::mt19937_64 rng(c.seed);
    const Redex& r = succ[pick(rng, succ.size())];
    bool clean = eps_free(erase(t)) && eps_free(erase(r.result));
    bool confirmed = clean && erase_simulates(t, r.result, 8) == SimulateResult::Confirmed;
    res.total++;
    if (!clean)
      fail_note(res, "erasure left an eps in " + print(erase(t)));
    else if (!confirmed)
      fail_note(res, "simulation not confirmed for " + print(t) + " => " + print(r.result));
    return true;
  });
  return res;
}

}  // namespace

SuiteResult run_commute(const GenConfig& cfg, int count) {
  SuiteResult res;
  res.suite = "commute";
  scan_instances(cfg.seed, count, [&](uint64_t seed) {
    std::mt19937_64 rng(seed);
    GenConfig c = cfg;
    std::string x = pool_var(rng, cfg);
    c.seed = rng();
    TermPtr t = gen_term(c);
    c.seed = rng();
    c.max_size = std::max(2, cfg.max_size / 2);
    TermPtr u = without_var(gen_term(c), x);
    c.seed = rng();
    TermPtr v = without_var(gen_term(c), x);
    TermPtr uv = dsubst_seq(t, {x, x}, {u, v});
    TermPtr vu = dsubst_seq(t, {x, x}, {v, u});
    bool eq = diff_eq(uv, vu);
    res.total++;
    if (!eq)
      fail_note(res, "commutation failed on t=" + print(t) + " u=" + print(u) + " v=" + print(v));
    return true;
  });
  return res;
}

SuiteResult run_suite(const std::string& name, const GenConfig& cfg, int count) {
  if (name == "canonicity") return suite_canonicity(cfg, count);
  if (name == "taylor") return suite_taylor(cfg, count);
  if (name == "regularity") return suite_regularity(cfg, count);
  if (name == "confluence") return suite_confluence(cfg, count);
  if (name == "typing") return suite_typing(cfg, count);
  if (name == "soundness") return suite_soundness(cfg, count);
  if (name == "erasure") return suite_erasure(cfg, count);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace lameps
