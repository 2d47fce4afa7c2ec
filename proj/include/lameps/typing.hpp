#pragma once

#include <optional>
#include <utility>

#include "lameps/canonical.hpp"
#include "lameps/syntax.hpp"

namespace lameps {

// Ordered context; later entries shadow earlier ones.
using TypingContext = std::vector<std::pair<std::string, TypePtr>>;

// Bidirectional checking against the declarative rules: 0 checks against any
// type, Sum/Eps check the children at the same type, Lam checks the body
// under the extended context (an annotation must match the arrow's domain),
// App synthesizes the function's arrow (or, failing that, synthesizes the
// argument and checks the function), D(s)*t checks s against the goal arrow
// and t against its domain.
bool check(const TypingContext& ctx, const TermPtr& t, const TypePtr& ty,
           std::string* diagnostic = nullptr);

// Synthesis; returns null when only checking mode can decide (0, unannotated
// lambdas, and anything built solely from them).
TypePtr infer(const TypingContext& ctx, const TermPtr& t);

// Typing judgment of the well-formed term: check applied to the canonical
// representative. Robust to spurious subterms such as (0 t).
bool check_wf(const TypingContext& ctx, const TermPtr& t, const TypePtr& ty,
              std::string* diagnostic = nullptr);

// "x:a,y:a->b"
TypingContext parse_context(std::string_view text);

}  // namespace lameps
