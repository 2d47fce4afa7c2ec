#include "lameps/subst.hpp"

namespace lameps {

namespace detail {

// Indices >= cutoff are dangling relative to t; move them up by `by` so the
// term can be planted under `by` extra binders.
static TermPtr shift_dangling(const TermPtr& t, int by, int cutoff) {
  if (by == 0) return t;
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::FreeVar:
      return t;
    case TermTag::BoundVar:
      return t->index >= cutoff ? bound_var(t->index + by) : t;
    case TermTag::Lam:
      return lam(t->name, t->annotation, shift_dangling(t->a, by, cutoff + 1));
    case TermTag::Eps:
      return eps(shift_dangling(t->a, by, cutoff));
    case TermTag::App:
      return app(shift_dangling(t->a, by, cutoff), shift_dangling(t->b, by, cutoff));
    case TermTag::DApp:
      return dapp(shift_dangling(t->a, by, cutoff), shift_dangling(t->b, by, cutoff));
    case TermTag::Sum:
      return sum(shift_dangling(t->a, by, cutoff), shift_dangling(t->b, by, cutoff));
  }
  return t;
}

static TermPtr open_at(const TermPtr& t, int depth, const TermPtr& s) {
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::FreeVar:
      return t;
    case TermTag::BoundVar:
      if (t->index == depth) return shift_dangling(s, depth, 0);
      if (t->index > depth) return bound_var(t->index - 1);
      return t;
    case TermTag::Lam:
      return lam(t->name, t->annotation, open_at(t->a, depth + 1, s));
    case TermTag::Eps:
      return eps(open_at(t->a, depth, s));
    case TermTag::App:
      return app(open_at(t->a, depth, s), open_at(t->b, depth, s));
    case TermTag::DApp:
      return dapp(open_at(t->a, depth, s), open_at(t->b, depth, s));
    case TermTag::Sum:
      return sum(open_at(t->a, depth, s), open_at(t->b, depth, s));
  }
  return t;
}

TermPtr open_bound(const TermPtr& body, const TermPtr& s) { return open_at(body, 0, s); }

static TermPtr close_at(const TermPtr& t, int depth, const std::string& x) {
  switch (t->tag) {
    case TermTag::Zero:
      return t;
    case TermTag::FreeVar:
      return t->name == x ? bound_var(depth) : t;
    case TermTag::BoundVar:
      return t->index >= depth ? bound_var(t->index + 1) : t;
    case TermTag::Lam:
      return lam(t->name, t->annotation, close_at(t->a, depth + 1, x));
    case TermTag::Eps:
      return eps(close_at(t->a, depth, x));
    case TermTag::App:
      return app(close_at(t->a, depth, x), close_at(t->b, depth, x));
    case TermTag::DApp:
      return dapp(close_at(t->a, depth, x), close_at(t->b, depth, x));
    case TermTag::Sum:
      return sum(close_at(t->a, depth, x), close_at(t->b, depth, x));
  }
  return t;
}

TermPtr close_free(const TermPtr& t, const std::string& x) { return close_at(t, 0, x); }

std::string fresh_name(const std::string& base, const VarSet& used) {
  std::string name = base.empty() ? "x" : base;
  while (used.count(name)) name += '\'';
  return name;
}

}  // namespace detail

TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& s) {
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::BoundVar:
      return t;
    case TermTag::FreeVar:
      return t->name == x ? s : t;
    case TermTag::Lam:
      // s may carry indices pointing past this binder; keep them pointing out
      return lam(t->name, t->annotation, subst(t->a, x, detail::shift_dangling(s, 1, 0)));
    case TermTag::Eps:
      return eps(subst(t->a, x, s));
    case TermTag::App:
      return app(subst(t->a, x, s), subst(t->b, x, s));
    case TermTag::DApp:
      return dapp(subst(t->a, x, s), subst(t->b, x, s));
    case TermTag::Sum:
      return sum(subst(t->a, x, s), subst(t->b, x, s));
  }
  return t;
}

namespace {

// d t / d x (s), precondition already checked.
TermPtr dsubst_unchecked(const TermPtr& t, const std::string& x, const TermPtr& s) {
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::BoundVar:
      return zero_term();
    case TermTag::FreeVar:
      return t->name == x ? s : zero_term();
    case TermTag::Lam:
      return lam(t->name, t->annotation,
                 dsubst_unchecked(t->a, x, detail::shift_dangling(s, 1, 0)));
    case TermTag::Eps:
      return eps(dsubst_unchecked(t->a, x, s));
    case TermTag::Sum:
      return sum(dsubst_unchecked(t->a, x, s), dsubst_unchecked(t->b, x, s));
    case TermTag::App: {
      // [D(t) * (de/dx(s))] e  +  [dt/dx(s)] (e[x := x + eps s])
      const TermPtr& fun = t->a;
      const TermPtr& arg = t->b;
      TermPtr darg = dsubst_unchecked(arg, x, s);
      TermPtr shifted = subst(arg, x, sum(free_var(x), eps(s)));
      return sum(app(dapp(fun, darg), arg), app(dsubst_unchecked(fun, x, s), shifted));
    }
    case TermTag::DApp: {
      // D(t) * (de/dx(s)) + D(dt/dx(s)) * (e[x := x + eps s])
      //   + eps (D(D(t) * e) * (de/dx(s)))
      const TermPtr& fun = t->a;
      const TermPtr& arg = t->b;
      TermPtr darg = dsubst_unchecked(arg, x, s);
      TermPtr shifted = subst(arg, x, sum(free_var(x), eps(s)));
      return sum(sum(dapp(fun, darg), dapp(dsubst_unchecked(fun, x, s), shifted)),
                 eps(dapp(dapp(fun, arg), darg)));
    }
  }
  return zero_term();
}

}  // namespace

TermPtr dsubst(const TermPtr& t, const std::string& x, const TermPtr& s) {
  if (free_vars(s).count(x))
    throw dsubst_precondition_error("differential substitution: variable '" + x +
                                    "' occurs free in the substituted term");
  return dsubst_unchecked(t, x, s);
}

TermPtr dsubst_seq(const TermPtr& t, const std::vector<std::string>& binders,
                   const std::vector<TermPtr>& args) {
  if (binders.size() != args.size())
    throw dsubst_precondition_error("differential substitution sequence: length mismatch");
  TermPtr out = t;
  for (size_t i = 0; i < binders.size(); i++) out = dsubst(out, binders[i], args[i]);
  return out;
}

TermPtr taylor_rhs(const TermPtr& t, const std::string& x, const TermPtr& s, const TermPtr& e) {
  TermPtr dt = dsubst(t, x, e);
  return sum(subst(t, x, s), eps(subst(dt, x, s)));
}

}  // namespace lameps
