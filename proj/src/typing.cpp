#include "lameps/typing.hpp"

namespace lameps {

namespace {

struct Checker {
  const TypingContext& ctx;
  std::vector<TypePtr> bound;  // innermost last
  std::string* diag;

  void note(const std::string& msg) {
    if (diag && diag->empty()) *diag = msg;
  }

  TypePtr lookup(const TermPtr& t) {
    if (t->tag == TermTag::BoundVar) {
      int i = t->index;
      if (i < 0 || i >= (int)bound.size()) return nullptr;
      return bound[bound.size() - 1 - (size_t)i];
    }
    for (size_t i = ctx.size(); i-- > 0;)
      if (ctx[i].first == t->name) return ctx[i].second;
    note("unbound variable '" + t->name + "'");
    return nullptr;
  }

  TypePtr synth(const TermPtr& t) {
    switch (t->tag) {
      case TermTag::Zero:
        return nullptr;  // 0 admits any type: checking mode only
      case TermTag::FreeVar:
      case TermTag::BoundVar:
        return lookup(t);
      case TermTag::Eps:
        return synth(t->a);
      case TermTag::Sum: {
        if (TypePtr l = synth(t->a)) return verify(t->b, l) ? l : nullptr;
        if (TypePtr r = synth(t->b)) return verify(t->a, r) ? r : nullptr;
        return nullptr;
      }
      case TermTag::Lam: {
        if (!t->annotation) return nullptr;
        bound.push_back(t->annotation);
        TypePtr body = synth(t->a);
        bound.pop_back();
        return body ? arrow_type(t->annotation, body) : nullptr;
      }
      case TermTag::App: {
        TypePtr fun = synth(t->a);
        if (!fun || !fun->is_arrow()) return nullptr;
        return verify(t->b, fun->dom) ? fun->cod : nullptr;
      }
      case TermTag::DApp: {
        TypePtr fun = synth(t->a);
        if (!fun || !fun->is_arrow()) return nullptr;
        return verify(t->b, fun->dom) ? fun : nullptr;
      }
    }
    return nullptr;
  }

  bool verify(const TermPtr& t, const TypePtr& ty) {
    switch (t->tag) {
      case TermTag::Zero:
        return true;
      case TermTag::FreeVar:
      case TermTag::BoundVar: {
        TypePtr found = lookup(t);
        if (!found) return false;
        if (!type_eq(found, ty)) {
          note("variable has type " + print_type(found) + ", expected " + print_type(ty));
          return false;
        }
        return true;
      }
      case TermTag::Eps:
        return verify(t->a, ty);
      case TermTag::Sum:
        return verify(t->a, ty) && verify(t->b, ty);
      case TermTag::Lam: {
        if (!ty->is_arrow()) {
          note("lambda checked against non-arrow type " + print_type(ty));
          return false;
        }
        if (t->annotation && !type_eq(t->annotation, ty->dom)) {
          note("binder annotation " + print_type(t->annotation) +
               " does not match expected domain " + print_type(ty->dom));
          return false;
        }
        bound.push_back(ty->dom);
        bool ok = verify(t->a, ty->cod);
        bound.pop_back();
        return ok;
      }
      case TermTag::App: {
        if (TypePtr fun = synth(t->a)) {
          if (!fun->is_arrow()) {
            note("application of a non-function of type " + print_type(fun));
            return false;
          }
          if (!type_eq(fun->cod, ty)) {
            note("application produces " + print_type(fun->cod) + ", expected " + print_type(ty));
            return false;
          }
          return verify(t->b, fun->dom);
        }
        if (TypePtr arg = synth(t->b)) return verify(t->a, arrow_type(arg, ty));
        note("cannot determine the argument type of an application");
        return false;
      }
      case TermTag::DApp: {
        if (!ty->is_arrow()) {
          note("differential application checked against non-arrow type " + print_type(ty));
          return false;
        }
        return verify(t->a, ty) && verify(t->b, ty->dom);
      }
    }
    return false;
  }
};

}  // namespace

bool check(const TypingContext& ctx, const TermPtr& t, const TypePtr& ty, std::string* diagnostic) {
  Checker c{ctx, {}, diagnostic};
  return c.verify(t, ty);
}

TypePtr infer(const TypingContext& ctx, const TermPtr& t) {
  Checker c{ctx, {}, nullptr};
  return c.synth(t);
}

bool check_wf(const TypingContext& ctx, const TermPtr& t, const TypePtr& ty,
              std::string* diagnostic) {
  return check(ctx, embed(canonicalize(t)), ty, diagnostic);
}

TypingContext parse_context(std::string_view text) {
  TypingContext ctx;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) pos++;
  };
  skip_ws();
  while (pos < text.size()) {
    size_t colon = text.find(':', pos);
    if (colon == std::string_view::npos)
      throw type_parse_error("context entry missing ':'");
    std::string name(text.substr(pos, colon - pos));
    while (!name.empty() && std::isspace((unsigned char)name.back())) name.pop_back();
    if (name.empty()) throw type_parse_error("context entry missing variable name");
    size_t comma = text.find(',', colon);
    std::string_view tytext = comma == std::string_view::npos
                                  ? text.substr(colon + 1)
                                  : text.substr(colon + 1, comma - colon - 1);
    ctx.emplace_back(std::move(name), parse_type(tytext));
    pos = comma == std::string_view::npos ? text.size() : comma + 1;
    skip_ws();
  }
  return ctx;
}

}  // namespace lameps
