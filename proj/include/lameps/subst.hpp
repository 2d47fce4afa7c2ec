#pragma once

#include <stdexcept>

#include "lameps/syntax.hpp"

namespace lameps {

// Capture-avoiding substitution of s for the free variable x in t. Terms are
// locally nameless, so no renaming is ever needed; binder hints that would
// shadow are primed at print time.
TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& s);

struct dsubst_precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Differential substitution d t / d x (s). Requires x not free in s; violations
// are rejected with dsubst_precondition_error.
TermPtr dsubst(const TermPtr& t, const std::string& x, const TermPtr& s);

// Left-to-right nesting d^k t / d(x1..xk) (u1..uk).
TermPtr dsubst_seq(const TermPtr& t, const std::vector<std::string>& binders,
                   const std::vector<TermPtr>& args);

// t[x := s] + eps((dt/dx (e))[x := s]); requires x not free in e.
TermPtr taylor_rhs(const TermPtr& t, const std::string& x, const TermPtr& s, const TermPtr& e);

namespace detail {

// Replace bound index 0 with s, shifting s's dangling indices past the
// binders it lands under.
TermPtr open_bound(const TermPtr& body, const TermPtr& s);
// Abstract the free variable x back into bound index 0.
TermPtr close_free(const TermPtr& t, const std::string& x);
// Deterministic fresh name: base primed until it avoids `used`.
std::string fresh_name(const std::string& base, const VarSet& used);

}  // namespace detail

}  // namespace lameps
