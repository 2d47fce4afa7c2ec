#include "lameps/model.hpp"

#include <cassert>
#include <functional>

namespace lameps {

SemTypePtr denote_type(const TypePtr& ty, const ModelConfig& cfg) {
  auto st = std::make_shared<SemType>();
  if (ty->is_base()) {
    auto it = cfg.base_assignment.find(ty->base);
    if (it == cfg.base_assignment.end())
      throw model_error("base type '" + ty->base + "' has no carrier assignment");
    if (it->second < 1) throw model_error("modulus must be >= 1");
    st->modulus = it->second;
    st->card = (size_t)it->second;
  } else {
    st->dom = denote_type(ty->dom, cfg);
    st->cod = denote_type(ty->cod, cfg);
    size_t card = 1;
    for (size_t i = 0; i < st->dom->card; i++) {
      if (st->cod->card != 0 && card > cfg.size_limit / st->cod->card)
        throw model_error("carrier for " + print_type(ty) + " exceeds the size limit");
      card *= st->cod->card;
    }
    st->card = card;
  }
  if (st->card > cfg.size_limit)
    throw model_error("carrier for " + print_type(ty) + " exceeds the size limit");
  return st;
}

SemValuePtr value_at(const SemTypePtr& ty, size_t rank) {
  assert(rank < ty->card);
  auto v = std::make_shared<SemValue>();
  v->type = ty;
  if (ty->is_group()) {
    v->residue = (int)(rank % (size_t)ty->modulus);
    return v;
  }
  // mixed radix, little-endian in the domain rank
  v->table.reserve(ty->dom->card);
  for (size_t i = 0; i < ty->dom->card; i++) {
    v->table.push_back(value_at(ty->cod, rank % ty->cod->card));
    rank /= ty->cod->card;
  }
  return v;
}

size_t rank_of(const SemValuePtr& v) {
  const SemTypePtr& ty = v->type;
  if (ty->is_group()) return (size_t)v->residue;
  size_t rank = 0;
  for (size_t i = v->table.size(); i-- > 0;) rank = rank * ty->cod->card + rank_of(v->table[i]);
  return rank;
}

SemValuePtr val_zero(const SemTypePtr& ty) {
  auto v = std::make_shared<SemValue>();
  v->type = ty;
  if (!ty->is_group()) {
    SemValuePtr z = val_zero(ty->cod);
    v->table.assign(ty->dom->card, z);
  }
  return v;
}

SemValuePtr val_add(const SemValuePtr& u, const SemValuePtr& v) {
  assert(u->type->card == v->type->card);
  auto out = std::make_shared<SemValue>();
  out->type = u->type;
  if (u->type->is_group()) {
    out->residue = (u->residue + v->residue) % u->type->modulus;
    return out;
  }
  out->table.reserve(u->table.size());
  for (size_t i = 0; i < u->table.size(); i++)
    out->table.push_back(val_add(u->table[i], v->table[i]));
  return out;
}

SemValuePtr val_neg(const SemValuePtr& u) {
  auto out = std::make_shared<SemValue>();
  out->type = u->type;
  if (u->type->is_group()) {
    out->residue = (u->type->modulus - u->residue) % u->type->modulus;
    return out;
  }
  out->table.reserve(u->table.size());
  for (const auto& e : u->table) out->table.push_back(val_neg(e));
  return out;
}

SemValuePtr val_sub(const SemValuePtr& u, const SemValuePtr& v) { return val_add(u, val_neg(v)); }

SemValuePtr val_eps(const SemValuePtr& u) { return u; }

SemValuePtr val_apply(const SemValuePtr& fun, const SemValuePtr& arg) {
  assert(!fun->type->is_group());
  return fun->table[rank_of(arg)];
}

bool val_eq(const SemValuePtr& u, const SemValuePtr& v) {
  if (u->type->is_group() != v->type->is_group()) return false;
  if (u->type->is_group()) return u->type->modulus == v->type->modulus && u->residue == v->residue;
  if (u->table.size() != v->table.size()) return false;
  for (size_t i = 0; i < u->table.size(); i++)
    if (!val_eq(u->table[i], v->table[i])) return false;
  return true;
}

std::string print_value(const SemValuePtr& v) {
  if (v->type->is_group()) return std::to_string(v->residue);
  std::string out = "{";
  for (size_t i = 0; i < v->table.size(); i++) {
    if (i) out += ", ";
    out += print_value(value_at(v->type->dom, i));
    out += "↦";
    out += print_value(v->table[i]);
  }
  out += "}";
  return out;
}

namespace {

struct Evaluator {
  const TypingContext& ctx;
  const Env& env;
  const ModelConfig& cfg;
  std::vector<std::pair<TypePtr, SemValuePtr>> bound;  // innermost last

  [[noreturn]] void fail(const std::string& msg) const { throw model_error("eval: " + msg); }

  SemTypePtr denote(const TypePtr& ty) { return denote_type(ty, cfg); }

  std::pair<TypePtr, SemValuePtr> lookup(const TermPtr& t) {
    if (t->tag == TermTag::BoundVar) {
      assert(t->index >= 0 && t->index < (int)bound.size());
      return bound[bound.size() - 1 - (size_t)t->index];
    }
    for (size_t i = ctx.size(); i-- > 0;)
      if (ctx[i].first == t->name) return {ctx[i].second, env[i]};
    fail("unbound variable '" + t->name + "'");
  }

  // Type routing only: mirrors the checker's synthesis direction.
  TypePtr synth_type(const TermPtr& t) {
    switch (t->tag) {
      case TermTag::Zero:
        return nullptr;
      case TermTag::FreeVar:
      case TermTag::BoundVar:
        return lookup(t).first;
      case TermTag::Eps:
        return synth_type(t->a);
      case TermTag::Sum:
        if (TypePtr l = synth_type(t->a)) return l;
        return synth_type(t->b);
      case TermTag::Lam: {
        if (!t->annotation) return nullptr;
        bound.emplace_back(t->annotation, nullptr);
        TypePtr body = synth_type(t->a);
        bound.pop_back();
        return body ? arrow_type(t->annotation, body) : nullptr;
      }
      case TermTag::App: {
        TypePtr fun = synth_type(t->a);
        return fun && fun->is_arrow() ? fun->cod : nullptr;
      }
      case TermTag::DApp: {
        TypePtr fun = synth_type(t->a);
        return fun && fun->is_arrow() ? fun : nullptr;
      }
    }
    return nullptr;
  }

  // D(s)*t at arrow type: y |-> s(y + t) - s(y)
  SemValuePtr difference(const SemValuePtr& fun, const SemValuePtr& arg, const SemTypePtr& dsem) {
    auto out = std::make_shared<SemValue>();
    out->type = fun->type;
    out->table.reserve(dsem->card);
    for (size_t y = 0; y < dsem->card; y++) {
      SemValuePtr yv = value_at(dsem, y);
      out->table.push_back(val_sub(val_apply(fun, val_add(yv, arg)), val_apply(fun, yv)));
    }
    return out;
  }

  SemValuePtr eval_at(const TermPtr& t, const TypePtr& ty) {
    switch (t->tag) {
      case TermTag::Zero:
        return val_zero(denote(ty));
      case TermTag::FreeVar:
      case TermTag::BoundVar: {
        SemValuePtr vv = lookup(t).second;
        if (!vv) fail("no value bound for a variable");
        return vv;
      }
      case TermTag::Eps:
        return val_eps(eval_at(t->a, ty));
      case TermTag::Sum:
        return val_add(eval_at(t->a, ty), eval_at(t->b, ty));
      case TermTag::Lam: {
        if (!ty->is_arrow()) fail("lambda at non-arrow type");
        SemTypePtr sem = denote(ty);
        auto v = std::make_shared<SemValue>();
        v->type = sem;
        v->table.reserve(sem->dom->card);
        for (size_t r = 0; r < sem->dom->card; r++) {
          bound.emplace_back(ty->dom, value_at(sem->dom, r));
          v->table.push_back(eval_at(t->a, ty->cod));
          bound.pop_back();
        }
        return v;
      }
      case TermTag::App: {
        TypePtr fun_ty = synth_type(t->a);
        if (fun_ty && fun_ty->is_arrow()) {
          SemValuePtr fv = eval_at(t->a, fun_ty);
          return val_apply(fv, eval_at(t->b, fun_ty->dom));
        }
        TypePtr arg_ty = synth_type(t->b);
        if (!arg_ty) fail("cannot determine the argument type of an application");
        SemValuePtr fv = eval_at(t->a, arrow_type(arg_ty, ty));
        return val_apply(fv, eval_at(t->b, arg_ty));
      }
      case TermTag::DApp: {
        if (!ty->is_arrow()) fail("differential application at non-arrow type");
        SemValuePtr fv = eval_at(t->a, ty);
        SemValuePtr av = eval_at(t->b, ty->dom);
        return difference(fv, av, denote(ty->dom));
      }
    }
    fail("unreachable");
  }
};

}  // namespace

SemValuePtr eval(const TypingContext& ctx, const Env& env, const TermPtr& t, const TypePtr& ty,
                 const ModelConfig& cfg) {
  if (env.size() != ctx.size()) throw model_error("environment does not match the context");
  Evaluator ev{ctx, env, cfg, {}};
  return ev.eval_at(t, ty);
}

void for_each_env(const TypingContext& ctx, const ModelConfig& cfg,
                  const std::function<void(const Env&)>& fn) {
  std::vector<SemTypePtr> sems;
  sems.reserve(ctx.size());
  for (const auto& entry : ctx) sems.push_back(denote_type(entry.second, cfg));
  Env env(ctx.size());
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == ctx.size()) {
      fn(env);
      return;
    }
    for (size_t r = 0; r < sems[i]->card; r++) {
      env[i] = value_at(sems[i], r);
      go(i + 1);
    }
  };
  go(0);
}

}  // namespace lameps
