#include "lameps/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace lameps {

namespace {

using detail::close_free;
using detail::fresh_name;
using detail::open_bound;

// D(\x. body) * s fires to \x. d body / d x (s). The body is opened with a
// fresh name so the user-level differential substitution applies.
TermPtr fire_diff(const TermPtr& lam_fun, const TermPtr& arg) {
  VarSet used = free_vars(lam_fun->a);
  for (const auto& v : free_vars(arg)) used.insert(v);
  std::string x = fresh_name(lam_fun->name, used);
  TermPtr opened = open_bound(lam_fun->a, free_var(x));
  TermPtr derived = dsubst(opened, x, arg);
  return lam(lam_fun->name, lam_fun->annotation, close_free(derived, x));
}

void collect_steps(const TermPtr& t, std::vector<int>& path, std::vector<Redex>& out) {
  auto child = [&](const TermPtr& sub, int idx, auto rebuild) {
    path.push_back(idx);
    size_t before = out.size();
    collect_steps(sub, path, out);
    for (size_t i = before; i < out.size(); i++) out[i].result = rebuild(out[i].result);
    path.pop_back();
  };
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::FreeVar:
    case TermTag::BoundVar:
      return;
    case TermTag::Lam:
      child(t->a, 0, [&](TermPtr r) { return lam(t->name, t->annotation, r); });
      return;
    case TermTag::Eps:
      child(t->a, 0, [&](TermPtr r) { return eps(r); });
      return;
    case TermTag::Sum:
      child(t->a, 0, [&](TermPtr r) { return sum(r, t->b); });
      child(t->b, 1, [&](TermPtr r) { return sum(t->a, r); });
      return;
    case TermTag::App:
      if (t->a->tag == TermTag::Lam)
        out.push_back(Redex{RedexKind::Beta, path, open_bound(t->a->a, t->b)});
      child(t->a, 0, [&](TermPtr r) { return app(r, t->b); });
      child(t->b, 1, [&](TermPtr r) { return app(t->a, r); });
      return;
    case TermTag::DApp:
      if (t->a->tag == TermTag::Lam)
        out.push_back(Redex{RedexKind::Diff, path, fire_diff(t->a, t->b)});
      child(t->a, 0, [&](TermPtr r) { return dapp(r, t->b); });
      child(t->b, 1, [&](TermPtr r) { return dapp(t->a, r); });
      return;
  }
}

constexpr size_t kVariantLimit = 100000;

void check_variant_budget(size_t n) {
  if (n > kVariantLimit)
    throw enumeration_budget_error("differential-tower reordering: variant budget exceeded");
}

std::vector<TermPtr> tower_variants(const TermPtr& t);

std::vector<TermPtr> combine2(const TermPtr& t, TermPtr (*mk)(TermPtr, TermPtr)) {
  std::vector<TermPtr> as = tower_variants(t->a);
  std::vector<TermPtr> bs = tower_variants(t->b);
  check_variant_budget(as.size() * bs.size());
  std::vector<TermPtr> out;
  for (const TermPtr& x : as)
    for (const TermPtr& y : bs) out.push_back(mk(x, y));
  return out;
}

// Every reordering of the argument lists of maximal differential towers, at
// every position in the term. Sum order is irrelevant to redex shape and is
// left alone.
std::vector<TermPtr> tower_variants(const TermPtr& t) {
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::FreeVar:
    case TermTag::BoundVar:
      return {t};
    case TermTag::Lam: {
      std::vector<TermPtr> out;
      for (const TermPtr& b : tower_variants(t->a)) out.push_back(lam(t->name, t->annotation, b));
      return out;
    }
    case TermTag::Eps: {
      std::vector<TermPtr> out;
      for (const TermPtr& b : tower_variants(t->a)) out.push_back(eps(b));
      return out;
    }
    case TermTag::Sum:
      return combine2(t, sum);
    case TermTag::App:
      return combine2(t, app);
    case TermTag::DApp: {
      std::vector<TermPtr> args;  // innermost first
      TermPtr head = t;
      while (head->tag == TermTag::DApp) {
        args.push_back(head->b);
        head = head->a;
      }
      std::reverse(args.begin(), args.end());
      std::vector<std::vector<TermPtr>> arg_variants;
      size_t combos = 1;
      for (const TermPtr& a : args) {
        arg_variants.push_back(tower_variants(a));
        combos *= arg_variants.back().size();
        check_variant_budget(combos);
      }
      std::vector<TermPtr> heads = tower_variants(head);
      std::vector<size_t> order(args.size());
      for (size_t i = 0; i < order.size(); i++) order[i] = i;
      std::vector<TermPtr> out;
      do {
        std::vector<size_t> pick(args.size(), 0);
        for (;;) {
          for (const TermPtr& h : heads) {
            TermPtr built = h;
            for (size_t i = 0; i < order.size(); i++)
              built = dapp(built, arg_variants[order[i]][pick[order[i]]]);
            out.push_back(built);
            check_variant_budget(out.size());
          }
          size_t i = 0;
          while (i < pick.size() && ++pick[i] == arg_variants[i].size()) pick[i++] = 0;
          if (i == pick.size()) break;
          if (pick.empty()) break;
        }
        if (args.empty()) break;
      } while (std::next_permutation(order.begin(), order.end()));
      return out;
    }
  }
  return {t};
}

}  // namespace

StepResult step(const TermPtr& t) {
  StepResult r;
  std::vector<int> path;
  collect_steps(t, path, r.successors);
  return r;
}

std::vector<CanonicalTerm> wf_step(const TermPtr& t) {
  TermPtr canon = embed(canonicalize(t));
  std::vector<CanonicalTerm> out;
  for (const TermPtr& variant : tower_variants(canon)) {
    for (const Redex& r : step(variant).successors) {
      CanonicalTerm c = perm_normalize(canonicalize(r.result));
      bool seen = false;
      for (const CanonicalTerm& prev : out)
        if (canonical_cmp(prev, c) == 0) {
          seen = true;
          break;
        }
      if (!seen) out.push_back(std::move(c));
    }
  }
  return out;
}

TermPtr fpr(const TermPtr& t) {
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::FreeVar:
    case TermTag::BoundVar:
      return t;
    case TermTag::Lam:
      return lam(t->name, t->annotation, fpr(t->a));
    case TermTag::Eps:
      return eps(fpr(t->a));
    case TermTag::Sum:
      return sum(fpr(t->a), fpr(t->b));
    case TermTag::App: {
      TermPtr fun = fpr(t->a);
      TermPtr arg = fpr(t->b);
      if (fun->tag == TermTag::Lam) return detail::open_bound(fun->a, arg);
      return app(fun, arg);
    }
    case TermTag::DApp: {
      TermPtr fun = fpr(t->a);
      TermPtr arg = fpr(t->b);
      if (fun->tag == TermTag::Lam) return fire_diff(fun, arg);
      return dapp(fun, arg);
    }
  }
  return t;
}

namespace {

constexpr size_t kParallelLimit = 200000;

void dedupe(std::vector<TermPtr>& v) {
  std::sort(v.begin(), v.end(), [](const TermPtr& a, const TermPtr& b) { return term_cmp(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const TermPtr& a, const TermPtr& b) { return term_cmp(a, b) == 0; }),
          v.end());
}

std::vector<TermPtr> par_set(const TermPtr& t) {
  std::vector<TermPtr> out;
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::FreeVar:
    case TermTag::BoundVar:
      return {t};
    case TermTag::Lam:
      for (const TermPtr& b : par_set(t->a)) out.push_back(lam(t->name, t->annotation, b));
      break;
    case TermTag::Eps:
      for (const TermPtr& b : par_set(t->a)) out.push_back(eps(b));
      break;
    case TermTag::Sum:
      for (const TermPtr& a : par_set(t->a))
        for (const TermPtr& b : par_set(t->b)) out.push_back(sum(a, b));
      break;
    case TermTag::App:
      for (const TermPtr& a : par_set(t->a))
        for (const TermPtr& b : par_set(t->b)) {
          out.push_back(app(a, b));
          if (a->tag == TermTag::Lam) out.push_back(detail::open_bound(a->a, b));
        }
      break;
    case TermTag::DApp:
      for (const TermPtr& a : par_set(t->a))
        for (const TermPtr& b : par_set(t->b)) {
          out.push_back(dapp(a, b));
          if (a->tag == TermTag::Lam) out.push_back(fire_diff(a, b));
        }
      break;
  }
  if (out.size() > kParallelLimit)
    throw enumeration_budget_error("parallel reduct enumeration: budget exceeded");
  dedupe(out);
  return out;
}

}  // namespace

std::vector<TermPtr> parallel_reducts(const TermPtr& t) { return par_set(t); }

bool par_step_check(const TermPtr& s, const TermPtr& t) {
  for (const TermPtr& r : par_set(s))
    if (alpha_eq(r, t)) return true;
  return false;
}

NormalizeResult normalize(const TermPtr& t, unsigned fuel) {
  NormalizeResult res;
  TermPtr current = t;
  for (;;) {
    CanonicalTerm canon = canonicalize(current);
    TermPtr rep = embed(canon);
    // A tower reordering never creates a redex absent as written, so the
    // class is normal iff its canonical representative is.
    if (step(rep).normal_form()) {
      res.normal_form = perm_normalize(canon);
      return res;
    }
    if (res.steps >= fuel) {
      res.fuel_exhausted = true;
      return res;
    }
    current = fpr(rep);
    res.steps++;
  }
}

bool is_canonical_value(const CanonicalTerm& t) {
  for (const Summand& s : t)
    if (s.body->tag != TermTag::Lam) return false;
  return true;
}

}  // namespace lameps
