#pragma once

#include <vector>

#include "lameps/syntax.hpp"

namespace lameps {

// Canonical forms: a canonical term is a flat sum of eps-weighted basic
// terms, Sum_i eps^{k_i} t_i, the decidable representative of a term's
// differential-equivalence class.
//
// Basic term grammar: x | \x. t_basic | (t_basic t_additive) |
// D(t_basic) * t_basic. An additive term is a plain sum of basics (possibly
// empty, denoting 0).

struct BasicTerm;
using BasicPtr = std::shared_ptr<const BasicTerm>;
using AdditiveTerm = std::vector<BasicPtr>;  // empty list is 0

struct BasicTerm {
  TermTag tag;          // FreeVar, BoundVar, Lam, App, DApp
  int index = -1;       // BoundVar
  std::string name;     // FreeVar name / Lam binder hint
  TypePtr annotation;   // Lam only
  BasicPtr f, g;        // Lam body in f; App fun in f; DApp fun f, arg g
  AdditiveTerm arg;     // App argument
};

BasicPtr basic_free_var(std::string name);
BasicPtr basic_bound_var(int index);
BasicPtr basic_lam(std::string hint, TypePtr annotation, BasicPtr body);
BasicPtr basic_app(BasicPtr fun, AdditiveTerm arg);
BasicPtr basic_dapp(BasicPtr fun, BasicPtr arg);

struct Summand {
  unsigned exponent;
  BasicPtr body;
};
using CanonicalTerm = std::vector<Summand>;  // empty list is 0

// A second differential: D(D(s) * t) * e, i.e. a differential application
// whose function is itself a differential application.
bool is_second_differential(const BasicPtr& b);

// True when eps^2 b ~ eps b: an eps travels down lambda bodies, application
// functions and both components of differential applications, and a second
// differential anywhere along those paths absorbs it.
bool absorbs_eps(const BasicPtr& b);

// Summand constructor. Enforces the saturation invariant: a body that
// absorbs eps never carries more than one.
Summand make_summand(unsigned exponent, BasicPtr body);

// Canonical sum: list concatenation. Associative, identity 0.
CanonicalTerm cansum(const CanonicalTerm& s, const CanonicalTerm& t);

// One application of eps, summand-wise: exponent + 1, saturating on second
// differentials.
CanonicalTerm eps_star(const CanonicalTerm& t);
CanonicalTerm eps_star_n(CanonicalTerm t, unsigned n);

// Extension of D(-)*t by additivity in the first argument.
CanonicalTerm d_star(const CanonicalTerm& s, const BasicPtr& t);

// Exponent-zero summands of a canonical term.
AdditiveTerm pri(const CanonicalTerm& t);
// Positive-exponent summands, exponent decremented by one, so that
// T ~eps pri(T) + eps tan(T).
CanonicalTerm tan(const CanonicalTerm& t);

// Additive extension of application.
CanonicalTerm ap(const CanonicalTerm& s, const AdditiveTerm& t);

// Regularization of D(s) * T over a sum T, inserting the higher-derivative
// eps-correction terms:
//   reg(s, 0) = 0
//   reg(s, eps^k t + T') = (eps*)^k D(s)*t  ++  reg(s, T')
//                          ++  (eps*)^{k+1} D*(reg(s, T')) * t
CanonicalTerm reg(const BasicPtr& s, const CanonicalTerm& t);

// Canonical forms expand like polynomials: regularization over an n-summand
// argument yields 2^n - 1 summands. canonicalize refuses pathological inputs
// with canonical_budget_error instead of exhausting memory.
struct canonical_budget_error : std::runtime_error {
  canonical_budget_error() : std::runtime_error("canonical form exceeds the expansion budget") {}
};

CanonicalTerm canonicalize(const TermPtr& t);

// Unique representative of the permutative-equivalence class: sub-sums are
// sorted under a fixed total term order and the argument multiset of every
// maximal differential tower D(D(..D(b)*t1..)*tl is sorted likewise.
CanonicalTerm perm_normalize(const CanonicalTerm& t);

// Total order on basic/canonical terms; ignores hints and annotations.
int basic_cmp(const BasicPtr& a, const BasicPtr& b);
int canonical_cmp(const CanonicalTerm& a, const CanonicalTerm& b);

bool perm_eq(const CanonicalTerm& s, const CanonicalTerm& t);

// Decides differential equivalence.
bool diff_eq(const TermPtr& s, const TermPtr& t);

// Forgets canonicity: exponent k becomes k nested eps, the summand list a
// right-nested sum.
TermPtr embed(const CanonicalTerm& t);
TermPtr embed_basic(const BasicPtr& b);
TermPtr embed_additive(const AdditiveTerm& t);

// Grammar + saturation check, for tests.
bool valid_canonical(const CanonicalTerm& t);

}  // namespace lameps
