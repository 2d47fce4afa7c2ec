#pragma once

#include <functional>
#include <map>
#include <stdexcept>

#include "lameps/typing.hpp"

namespace lameps {

// The concrete finite Abelian-group model: base types denote cyclic groups
// Z_n, arrows denote full set-theoretic function spaces with pointwise group
// structure, eps is the identity, and D(s)*t denotes the finite difference
// y |-> s(y + t) - s(y).

struct ModelConfig {
  std::map<std::string, int> base_assignment;  // base type name -> modulus
  size_t size_limit = 1u << 16;                // max carrier cardinality
};

struct model_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SemType;
using SemTypePtr = std::shared_ptr<const SemType>;

struct SemType {
  int modulus = 0;     // > 0 iff group carrier Z_modulus
  SemTypePtr dom, cod; // set iff function carrier
  size_t card = 0;
  bool is_group() const { return modulus > 0; }
};

// |Z_n| = n, |A => B| = |B|^|A|; refuses carriers above cfg.size_limit.
SemTypePtr denote_type(const TypePtr& ty, const ModelConfig& cfg);

struct SemValue;
using SemValuePtr = std::shared_ptr<const SemValue>;

struct SemValue {
  SemTypePtr type;
  int residue = 0;                   // group element
  std::vector<SemValuePtr> table;    // function: entry per domain carrier rank
};

// Carriers are enumerable: every value has a rank < type->card.
SemValuePtr value_at(const SemTypePtr& ty, size_t rank);
size_t rank_of(const SemValuePtr& v);

SemValuePtr val_zero(const SemTypePtr& ty);
SemValuePtr val_add(const SemValuePtr& u, const SemValuePtr& v);
SemValuePtr val_neg(const SemValuePtr& u);
SemValuePtr val_sub(const SemValuePtr& u, const SemValuePtr& v);
SemValuePtr val_eps(const SemValuePtr& u);  // identity in this model
SemValuePtr val_apply(const SemValuePtr& fun, const SemValuePtr& arg);
bool val_eq(const SemValuePtr& u, const SemValuePtr& v);

// Group elements print as residues, tables as explicit graphs {0↦1, 1↦0}.
std::string print_value(const SemValuePtr& v);

using Env = std::vector<SemValuePtr>;  // aligned with the typing context

// Compositional evaluation; requires check(ctx, t, ty) and a matching env.
SemValuePtr eval(const TypingContext& ctx, const Env& env, const TermPtr& t, const TypePtr& ty,
                 const ModelConfig& cfg);

// Calls fn with every environment for ctx (product of the carriers).
void for_each_env(const TypingContext& ctx, const ModelConfig& cfg,
                  const std::function<void(const Env&)>& fn);

}  // namespace lameps
