#include "lameps/type.hpp"

#include <cctype>

namespace lameps {

TypePtr base_type(std::string name) {
  auto t = std::make_shared<Type>();
  t->base = std::move(name);
  return t;
}

TypePtr arrow_type(TypePtr dom, TypePtr cod) {
  auto t = std::make_shared<Type>();
  t->dom = std::move(dom);
  t->cod = std::move(cod);
  return t;
}

bool type_eq(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->is_base() != b->is_base()) return false;
  if (a->is_base()) return a->base == b->base;
  return type_eq(a->dom, b->dom) && type_eq(a->cod, b->cod);
}

int type_cmp(const TypePtr& a, const TypePtr& b) {
  if (a == b) return 0;
  if (a->is_base() != b->is_base()) return a->is_base() ? -1 : 1;
  if (a->is_base()) return a->base.compare(b->base);
  if (int c = type_cmp(a->dom, b->dom)) return c;
  return type_cmp(a->cod, b->cod);
}

std::string print_type(const TypePtr& ty) {
  if (ty->is_base()) return ty->base;
  std::string dom = print_type(ty->dom);
  if (ty->dom->is_arrow()) dom = "(" + dom + ")";
  return dom + " -> " + print_type(ty->cod);
}

namespace {

struct TypeParser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) pos++;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw type_parse_error("type syntax error at offset " + std::to_string(pos) + ": " + msg);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      pos++;
      return true;
    }
    return false;
  }

  bool eat_arrow() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size()) fail("expected type identifier");
    char c = text[pos];
    if (!std::isalpha((unsigned char)c) && c != '_') fail("expected type identifier");
    size_t start = pos;
    while (pos < text.size()) {
      char d = text[pos];
      if (std::isalnum((unsigned char)d) || d == '_' || d == '\'')
        pos++;
      else
        break;
    }
    return std::string(text.substr(start, pos - start));
  }

  TypePtr btype() {
    if (eat('(')) {
      TypePtr inner = type();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    return base_type(ident());
  }

  TypePtr type() {
    TypePtr lhs = btype();
    if (eat_arrow()) return arrow_type(lhs, type());
    return lhs;
  }
};

}  // namespace

TypePtr parse_type(std::string_view text) {
  TypeParser p{text};
  TypePtr ty = p.type();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input after type");
  return ty;
}

}  // namespace lameps
