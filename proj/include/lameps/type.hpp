#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lameps {

// Simple types: named base types and right-nested arrows.
struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  std::string base;   // non-empty iff this is a base type
  TypePtr dom, cod;   // both set iff this is an arrow

  bool is_base() const { return dom == nullptr; }
  bool is_arrow() const { return dom != nullptr; }
};

TypePtr base_type(std::string name);
TypePtr arrow_type(TypePtr dom, TypePtr cod);

bool type_eq(const TypePtr& a, const TypePtr& b);

// base < arrow; arrows lexicographic on (dom, cod). Total order.
int type_cmp(const TypePtr& a, const TypePtr& b);

// Concrete syntax: `a`, `a -> b`, `(a -> b) -> c`. Arrow is right-assoc.
std::string print_type(const TypePtr& ty);

struct type_parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TypePtr parse_type(std::string_view text);

}  // namespace lameps
