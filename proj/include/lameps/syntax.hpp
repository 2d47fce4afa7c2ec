#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lameps/type.hpp"

namespace lameps {

// Terms are locally nameless: bound variables are de Bruijn indices, free
// variables carry names. Alpha-equivalent terms are structurally equal.
// Binder name hints and type annotations are kept for printing/typing only
// and are ignored by alpha_eq and every untyped operation.
enum class TermTag { Zero, FreeVar, BoundVar, Lam, App, DApp, Eps, Sum };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermTag tag;
  int index = -1;       // BoundVar
  std::string name;     // FreeVar name, or Lam binder hint
  TypePtr annotation;   // Lam only, may be null
  TermPtr a, b;         // Lam body / Eps body in a; App, DApp, Sum use a and b
};

TermPtr zero_term();
TermPtr free_var(std::string name);
TermPtr bound_var(int index);
TermPtr lam(std::string hint, TypePtr annotation, TermPtr body);
TermPtr app(TermPtr fun, TermPtr arg);
TermPtr dapp(TermPtr fun, TermPtr arg);
TermPtr eps(TermPtr body);
TermPtr sum(TermPtr left, TermPtr right);

using VarSet = std::set<std::string>;

VarSet free_vars(const TermPtr& t);
bool alpha_eq(const TermPtr& s, const TermPtr& t);

// Total order extending alpha_eq: cmp == 0 iff alpha_eq. Used for canonical
// form sorting; ignores binder hints and annotations.
int term_cmp(const TermPtr& s, const TermPtr& t);

size_t term_size(const TermPtr& t);  // node count

// `t` must be locally closed (no dangling indices); all public constructors
// and parse() only build such terms.
bool locally_closed(const TermPtr& t);

struct parse_error : std::runtime_error {
  int line, column;
  parse_error(int line, int column, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
};

// Surface grammar (see docs/grammar.md):
//   term  := sum
//   sum   := app ("+" app)*
//   app   := prefix+
//   prefix:= "eps" prefix | "D(" term ")" "*" prefix | atom
//   atom  := "0" | ident | "(" term ")" | "\" ident (":" type)? "." term
TermPtr parse(std::string_view text);

// Minimal parentheses; output re-parses to an alpha-equivalent term. Binder
// hints are primed when they would shadow a visible name.
std::string print(const TermPtr& t);

}  // namespace lameps
