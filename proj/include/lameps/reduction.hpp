#pragma once

#include "lameps/canonical.hpp"
#include "lameps/subst.hpp"

namespace lameps {

// Tower reorderings and parallel-reduct sets are finite but can be
// combinatorially large; enumeration refuses past a fixed budget.
struct enumeration_budget_error : std::runtime_error {
  explicit enumeration_budget_error(const char* what) : std::runtime_error(what) {}
};

enum class RedexKind { Beta, Diff };

struct Redex {
  RedexKind kind;
  std::vector<int> path;  // child indices from the root
  TermPtr result;
};

struct StepResult {
  std::vector<Redex> successors;
  bool normal_form() const { return successors.empty(); }
};

// All contextual one-step reducts: beta ((\x. t) s => t[x:=s]) and
// differential (D(\x. t) * s => \x. dt/dx(s)) redexes.
StepResult step(const TermPtr& t);

// One-step reduction of the well-formed term (its ~eps class): reducts of
// every canonical representative whose redex shape differs, i.e. of every
// reordering of differential-tower arguments. Results are canonicalized,
// perm-normalized and deduplicated.
std::vector<CanonicalTerm> wf_step(const TermPtr& t);

// Full parallel reduct: fire every visible redex simultaneously, including
// the collapsing cases for App-over-lambda and DApp-over-lambda.
TermPtr fpr(const TermPtr& t);

// True iff s parallel-reduces to t in one step.
bool par_step_check(const TermPtr& s, const TermPtr& t);

// The full set of one-step parallel reducts (deduplicated up to alpha).
std::vector<TermPtr> parallel_reducts(const TermPtr& t);

struct NormalizeResult {
  CanonicalTerm normal_form;  // perm-normalized; meaningful when !fuel_exhausted
  unsigned steps = 0;
  bool fuel_exhausted = false;
};

// Iterates canonicalize-then-full-parallel-reduct until the class has no
// one-step successor.
NormalizeResult normalize(const TermPtr& t, unsigned fuel);

// True iff every summand body is a lambda (0 qualifies as the empty sum).
bool is_canonical_value(const CanonicalTerm& t);

}  // namespace lameps
