#include "lameps/canonical.hpp"

#include <algorithm>
#include <cassert>

namespace lameps {

BasicPtr basic_free_var(std::string name) {
  auto b = std::make_shared<BasicTerm>();
  b->tag = TermTag::FreeVar;
  b->name = std::move(name);
  return b;
}

BasicPtr basic_bound_var(int index) {
  auto b = std::make_shared<BasicTerm>();
  b->tag = TermTag::BoundVar;
  b->index = index;
  return b;
}

BasicPtr basic_lam(std::string hint, TypePtr annotation, BasicPtr body) {
  auto b = std::make_shared<BasicTerm>();
  b->tag = TermTag::Lam;
  b->name = std::move(hint);
  b->annotation = std::move(annotation);
  b->f = std::move(body);
  return b;
}

BasicPtr basic_app(BasicPtr fun, AdditiveTerm arg) {
  auto b = std::make_shared<BasicTerm>();
  b->tag = TermTag::App;
  b->f = std::move(fun);
  b->arg = std::move(arg);
  return b;
}

BasicPtr basic_dapp(BasicPtr fun, BasicPtr arg) {
  auto b = std::make_shared<BasicTerm>();
  b->tag = TermTag::DApp;
  b->f = std::move(fun);
  b->g = std::move(arg);
  return b;
}

bool is_second_differential(const BasicPtr& b) {
  return b->tag == TermTag::DApp && b->f->tag == TermTag::DApp;
}

bool absorbs_eps(const BasicPtr& b) {
  switch (b->tag) {
    case TermTag::Lam:
      return absorbs_eps(b->f);
    case TermTag::App:
      return absorbs_eps(b->f);
    case TermTag::DApp:
      // an eps moves through both components of a differential application:
      // D(eps s)*t ~ eps (D(s)*t) and D(s)*(eps t) ~ eps (D(s)*t)
      return b->f->tag == TermTag::DApp || absorbs_eps(b->f) || absorbs_eps(b->g);
    default:
      return false;
  }
}

namespace {

// Expansion budget, active only inside canonicalize. Counts summand
// constructions, which dominate both the work and the memory.
constexpr size_t kCanonicalBudget = 4'000'000;
thread_local size_t g_summands_left = 0;
thread_local bool g_budget_active = false;

struct BudgetScope {
  bool outermost;
  BudgetScope() : outermost(!g_budget_active) {
    if (outermost) {
      g_budget_active = true;
      g_summands_left = kCanonicalBudget;
    }
  }
  ~BudgetScope() {
    if (outermost) g_budget_active = false;
  }
};

}  // namespace

Summand make_summand(unsigned exponent, BasicPtr body) {
  if (g_budget_active && g_summands_left-- == 0) throw canonical_budget_error();
  if (exponent > 1 && absorbs_eps(body)) exponent = 1;
  return Summand{exponent, std::move(body)};
}

CanonicalTerm cansum(const CanonicalTerm& s, const CanonicalTerm& t) {
  CanonicalTerm out = s;
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

CanonicalTerm eps_star(const CanonicalTerm& t) {
  CanonicalTerm out;
  out.reserve(t.size());
  for (const Summand& s : t) out.push_back(make_summand(s.exponent + 1, s.body));
  return out;
}

CanonicalTerm eps_star_n(CanonicalTerm t, unsigned n) {
  for (unsigned i = 0; i < n; i++) t = eps_star(t);
  return t;
}

CanonicalTerm d_star(const CanonicalTerm& s, const BasicPtr& t) {
  CanonicalTerm out;
  out.reserve(s.size());
  for (const Summand& m : s) out.push_back(make_summand(m.exponent, basic_dapp(m.body, t)));
  return out;
}

AdditiveTerm pri(const CanonicalTerm& t) {
  AdditiveTerm out;
  for (const Summand& s : t)
    if (s.exponent == 0) out.push_back(s.body);
  return out;
}

CanonicalTerm tan(const CanonicalTerm& t) {
  CanonicalTerm out;
  for (const Summand& s : t)
    if (s.exponent > 0) out.push_back(make_summand(s.exponent - 1, s.body));
  return out;
}

CanonicalTerm ap(const CanonicalTerm& s, const AdditiveTerm& t) {
  CanonicalTerm out;
  out.reserve(s.size());
  for (const Summand& m : s) out.push_back(make_summand(m.exponent, basic_app(m.body, t)));
  return out;
}

CanonicalTerm reg(const BasicPtr& s, const CanonicalTerm& t) {
  if (t.empty()) return {};
  const Summand& head = t.front();
  CanonicalTerm rest(t.begin() + 1, t.end());
  CanonicalTerm tail_reg = reg(s, rest);
  CanonicalTerm first = eps_star_n({make_summand(0, basic_dapp(s, head.body))}, head.exponent);
  CanonicalTerm correction = eps_star_n(d_star(tail_reg, head.body), head.exponent + 1);
  return cansum(first, cansum(tail_reg, correction));
}

namespace {

CanonicalTerm canonicalize_impl(const TermPtr& t) {
  switch (t->tag) {
    case TermTag::Zero:
      return {};
    case TermTag::FreeVar:
      return {make_summand(0, basic_free_var(t->name))};
    case TermTag::BoundVar:
      return {make_summand(0, basic_bound_var(t->index))};
    case TermTag::Sum:
      return cansum(canonicalize_impl(t->a), canonicalize_impl(t->b));
    case TermTag::Eps:
      return eps_star(canonicalize_impl(t->a));
    case TermTag::Lam: {
      CanonicalTerm body = canonicalize_impl(t->a);
      CanonicalTerm out;
      out.reserve(body.size());
      for (const Summand& s : body)
        out.push_back(make_summand(s.exponent, basic_lam(t->name, t->annotation, s.body)));
      return out;
    }
    case TermTag::DApp: {
      CanonicalTerm fun = canonicalize_impl(t->a);
      CanonicalTerm arg = canonicalize_impl(t->b);
      CanonicalTerm out;
      for (const Summand& s : fun)
        out = cansum(out, eps_star_n(reg(s.body, arg), s.exponent));
      return out;
    }
    case TermTag::App: {
      CanonicalTerm fun = canonicalize_impl(t->a);
      CanonicalTerm arg = canonicalize_impl(t->b);
      AdditiveTerm primal = pri(arg);
      CanonicalTerm tangent = tan(arg);
      CanonicalTerm direct, derivative;
      for (const Summand& s : fun) {
        direct.push_back(make_summand(s.exponent, basic_app(s.body, primal)));
        derivative =
            cansum(derivative, eps_star_n(ap(reg(s.body, tangent), primal), s.exponent));
      }
      return cansum(direct, eps_star(derivative));
    }
  }
  return {};
}

}  // namespace

CanonicalTerm canonicalize(const TermPtr& t) {
  BudgetScope scope;
  return canonicalize_impl(t);
}

int basic_cmp(const BasicPtr& a, const BasicPtr& b) {
  if (a == b) return 0;
  if (a->tag != b->tag) return (int)a->tag < (int)b->tag ? -1 : 1;
  switch (a->tag) {
    case TermTag::FreeVar:
      return a->name.compare(b->name);
    case TermTag::BoundVar:
      return a->index < b->index ? -1 : a->index > b->index ? 1 : 0;
    case TermTag::Lam:
      return basic_cmp(a->f, b->f);
    case TermTag::App: {
      if (int c = basic_cmp(a->f, b->f)) return c;
      size_t n = std::min(a->arg.size(), b->arg.size());
      for (size_t i = 0; i < n; i++)
        if (int c = basic_cmp(a->arg[i], b->arg[i])) return c;
      return a->arg.size() < b->arg.size() ? -1 : a->arg.size() > b->arg.size() ? 1 : 0;
    }
    case TermTag::DApp:
      if (int c = basic_cmp(a->f, b->f)) return c;
      return basic_cmp(a->g, b->g);
    default:
      assert(false);
      return 0;
  }
}

int canonical_cmp(const CanonicalTerm& a, const CanonicalTerm& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; i++) {
    if (a[i].exponent != b[i].exponent) return a[i].exponent < b[i].exponent ? -1 : 1;
    if (int c = basic_cmp(a[i].body, b[i].body)) return c;
  }
  return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
}

namespace {

BasicPtr norm_basic(const BasicPtr& b);

// Maximal differential tower: peel D(D(..D(head)*t1..)*tl with a non-DApp
// head; adjacent argument swaps generate every permutation, so sorting the
// argument list picks the class representative.
BasicPtr norm_tower(const BasicPtr& b) {
  std::vector<BasicPtr> args;
  BasicPtr head = b;
  while (head->tag == TermTag::DApp) {
    args.push_back(norm_basic(head->g));
    head = head->f;
  }
  head = norm_basic(head);
  std::stable_sort(args.begin(), args.end(),
                   [](const BasicPtr& x, const BasicPtr& y) { return basic_cmp(x, y) < 0; });
  BasicPtr out = head;
  for (const BasicPtr& a : args) out = basic_dapp(out, a);
  return out;
}

BasicPtr norm_basic(const BasicPtr& b) {
  switch (b->tag) {
    case TermTag::FreeVar:
    case TermTag::BoundVar:
      return b;
    case TermTag::Lam:
      return basic_lam(b->name, b->annotation, norm_basic(b->f));
    case TermTag::App: {
      AdditiveTerm arg;
      arg.reserve(b->arg.size());
      for (const BasicPtr& x : b->arg) arg.push_back(norm_basic(x));
      std::stable_sort(arg.begin(), arg.end(),
                       [](const BasicPtr& x, const BasicPtr& y) { return basic_cmp(x, y) < 0; });
      return basic_app(norm_basic(b->f), std::move(arg));
    }
    case TermTag::DApp:
      return norm_tower(b);
    default:
      assert(false);
      return b;
  }
}

}  // namespace

CanonicalTerm perm_normalize(const CanonicalTerm& t) {
  CanonicalTerm out;
  out.reserve(t.size());
  for (const Summand& s : t) out.push_back(Summand{s.exponent, norm_basic(s.body)});
  std::stable_sort(out.begin(), out.end(), [](const Summand& x, const Summand& y) {
    if (x.exponent != y.exponent) return x.exponent < y.exponent;
    return basic_cmp(x.body, y.body) < 0;
  });
  return out;
}

bool perm_eq(const CanonicalTerm& s, const CanonicalTerm& t) {
  return canonical_cmp(perm_normalize(s), perm_normalize(t)) == 0;
}

bool diff_eq(const TermPtr& s, const TermPtr& t) {
  return perm_eq(canonicalize(s), canonicalize(t));
}

TermPtr embed_basic(const BasicPtr& b) {
  switch (b->tag) {
    case TermTag::FreeVar:
      return free_var(b->name);
    case TermTag::BoundVar:
      return bound_var(b->index);
    case TermTag::Lam:
      return lam(b->name, b->annotation, embed_basic(b->f));
    case TermTag::App:
      return app(embed_basic(b->f), embed_additive(b->arg));
    case TermTag::DApp:
      return dapp(embed_basic(b->f), embed_basic(b->g));
    default:
      assert(false);
      return zero_term();
  }
}

TermPtr embed_additive(const AdditiveTerm& t) {
  if (t.empty()) return zero_term();
  TermPtr out = embed_basic(t.back());
  for (size_t i = t.size() - 1; i-- > 0;) out = sum(embed_basic(t[i]), out);
  return out;
}

TermPtr embed(const CanonicalTerm& t) {
  if (t.empty()) return zero_term();
  auto one = [](const Summand& s) {
    TermPtr e = embed_basic(s.body);
    for (unsigned i = 0; i < s.exponent; i++) e = eps(e);
    return e;
  };
  TermPtr out = one(t.back());
  for (size_t i = t.size() - 1; i-- > 0;) out = sum(one(t[i]), out);
  return out;
}

namespace {

bool valid_basic(const BasicPtr& b) {
  switch (b->tag) {
    case TermTag::FreeVar:
      return !b->name.empty();
    case TermTag::BoundVar:
      return b->index >= 0;
    case TermTag::Lam:
      return valid_basic(b->f);
    case TermTag::App:
      if (!valid_basic(b->f)) return false;
      for (const BasicPtr& x : b->arg)
        if (!valid_basic(x)) return false;
      return true;
    case TermTag::DApp:
      return valid_basic(b->f) && valid_basic(b->g);
    default:
      return false;
  }
}

}  // namespace

bool valid_canonical(const CanonicalTerm& t) {
  for (const Summand& s : t) {
    if (!valid_basic(s.body)) return false;
    if (s.exponent > 1 && absorbs_eps(s.body)) return false;
  }
  return true;
}

}  // namespace lameps
