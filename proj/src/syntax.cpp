#include "lameps/syntax.hpp"

#include <cassert>

namespace lameps {

TermPtr zero_term() {
  static const TermPtr z = [] {
    auto t = std::make_shared<Term>();
    t->tag = TermTag::Zero;
    return t;
  }();
  return z;
}

TermPtr free_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->tag = TermTag::FreeVar;
  t->name = std::move(name);
  return t;
}

TermPtr bound_var(int index) {
  auto t = std::make_shared<Term>();
  t->tag = TermTag::BoundVar;
  t->index = index;
  return t;
}

TermPtr lam(std::string hint, TypePtr annotation, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->tag = TermTag::Lam;
  t->name = std::move(hint);
  t->annotation = std::move(annotation);
  t->a = std::move(body);
  return t;
}

static TermPtr binary(TermTag tag, TermPtr x, TermPtr y) {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  t->a = std::move(x);
  t->b = std::move(y);
  return t;
}

TermPtr app(TermPtr fun, TermPtr arg) { return binary(TermTag::App, std::move(fun), std::move(arg)); }
TermPtr dapp(TermPtr fun, TermPtr arg) { return binary(TermTag::DApp, std::move(fun), std::move(arg)); }
TermPtr sum(TermPtr left, TermPtr right) { return binary(TermTag::Sum, std::move(left), std::move(right)); }

TermPtr eps(TermPtr body) {
  auto t = std::make_shared<Term>();
  t->tag = TermTag::Eps;
  t->a = std::move(body);
  return t;
}

static void collect_free(const TermPtr& t, VarSet& out) {
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::BoundVar:
      return;
    case TermTag::FreeVar:
      out.insert(t->name);
      return;
    case TermTag::Lam:
    case TermTag::Eps:
      collect_free(t->a, out);
      return;
    case TermTag::App:
    case TermTag::DApp:
    case TermTag::Sum:
      collect_free(t->a, out);
      collect_free(t->b, out);
      return;
  }
}

VarSet free_vars(const TermPtr& t) {
  VarSet out;
  collect_free(t, out);
  return out;
}

int term_cmp(const TermPtr& s, const TermPtr& t) {
  if (s == t) return 0;
  if (s->tag != t->tag) return (int)s->tag < (int)t->tag ? -1 : 1;
  switch (s->tag) {
    case TermTag::Zero:
      return 0;
    case TermTag::FreeVar:
      return s->name.compare(t->name);
    case TermTag::BoundVar:
      return s->index < t->index ? -1 : s->index > t->index ? 1 : 0;
    case TermTag::Lam:
    case TermTag::Eps:
      return term_cmp(s->a, t->a);
    case TermTag::App:
    case TermTag::DApp:
    case TermTag::Sum:
      if (int c = term_cmp(s->a, t->a)) return c;
      return term_cmp(s->b, t->b);
  }
  return 0;
}

bool alpha_eq(const TermPtr& s, const TermPtr& t) { return term_cmp(s, t) == 0; }

size_t term_size(const TermPtr& t) {
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::FreeVar:
    case TermTag::BoundVar:
      return 1;
    case TermTag::Lam:
    case TermTag::Eps:
      return 1 + term_size(t->a);
    default:
      return 1 + term_size(t->a) + term_size(t->b);
  }
}

static bool closed_at(const TermPtr& t, int depth) {
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::FreeVar:
      return true;
    case TermTag::BoundVar:
      return t->index >= 0 && t->index < depth;
    case TermTag::Lam:
      return closed_at(t->a, depth + 1);
    case TermTag::Eps:
      return closed_at(t->a, depth);
    default:
      return closed_at(t->a, depth) && closed_at(t->b, depth);
  }
}

bool locally_closed(const TermPtr& t) { return closed_at(t, 0); }

}  // namespace lameps
