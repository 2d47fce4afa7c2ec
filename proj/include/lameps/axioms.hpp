#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lameps {

// Brute-force verification of the difference-category coherence laws in the
// finite Abelian-group model: morphisms are arbitrary function tables between
// finite carriers, eps is the identity and Df(x, u) = f(x + u) - f(x).

namespace fin {

// A finite Abelian group with an enumerable carrier; elements are ranks.
struct Group;
using GroupPtr = std::shared_ptr<const Group>;

struct Group {
  enum class Kind { Cyclic, Product, Power } kind;
  int modulus = 0;           // Cyclic
  GroupPtr left, right;      // Product
  GroupPtr dom, cod;         // Power: functions dom -> cod, pointwise structure
  size_t card = 0;
};

GroupPtr cyclic(int n);
GroupPtr product(GroupPtr a, GroupPtr b);
GroupPtr power(GroupPtr dom, GroupPtr cod);

size_t add(const GroupPtr& g, size_t a, size_t b);
size_t neg(const GroupPtr& g, size_t a);
size_t sub(const GroupPtr& g, size_t a, size_t b);
size_t pair_rank(const GroupPtr& prod, size_t l, size_t r);
size_t fst(const GroupPtr& prod, size_t p);
size_t snd(const GroupPtr& prod, size_t p);
size_t apply(const GroupPtr& pow, size_t f, size_t x);

struct Morphism {
  GroupPtr dom, cod;
  std::vector<size_t> table;  // table[x] = f(x), on ranks

  size_t operator()(size_t x) const { return table[x]; }
};

Morphism identity(const GroupPtr& a);
Morphism zero_morphism(const GroupPtr& a, const GroupPtr& b);
Morphism compose(const Morphism& g, const Morphism& f);
Morphism add_m(const Morphism& f, const Morphism& g);
Morphism eps_m(const Morphism& f);  // identity extension
Morphism pair_m(const Morphism& f, const Morphism& g);
Morphism proj1(const GroupPtr& a, const GroupPtr& b);
Morphism proj2(const GroupPtr& a, const GroupPtr& b);
Morphism cross(const Morphism& f, const Morphism& g);
Morphism bang(const GroupPtr& a);  // into the terminal group Z_1

// Df : A x A -> B for f : A -> B.
Morphism diff(const Morphism& f);

Morphism lambda(const Morphism& f);    // (A x B) -> C  to  A -> (B => C)
Morphism unlambda(const Morphism& f);  // inverse
Morphism ev(const GroupPtr& b, const GroupPtr& c);  // (B => C) x B -> C

// s * u = Ds . <Id, <0, u . pi1>> for s : A x B -> C, u : A -> B.
Morphism star(const Morphism& s, const Morphism& u);

bool morphism_eq(const Morphism& f, const Morphism& g);

// All |B|^|A| tables when that count is within budget, otherwise `budget`
// seeded samples.
std::vector<Morphism> morphisms(const GroupPtr& a, const GroupPtr& b, size_t budget,
                                uint64_t seed);

}  // namespace fin

struct AxiomCheck {
  std::string name;
  size_t cases = 0;
  size_t violations = 0;
  std::string detail;  // first violating instance, when any

  bool ok() const { return violations == 0; }
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool ok() const;
  size_t total_cases() const;
  std::string to_string() const;
};

struct AxiomConfig {
  int modulus = 2;        // base cyclic carrier
  size_t budget = 4096;   // per-family enumeration budget before sampling
  uint64_t seed = 1;
};

// CdC0..CdC7 plus the two derivative/eps interaction identities, checked over
// unary maps on Z_n and on Z_n x Z_n (and mixed shapes for the structural
// axioms).
AxiomReport check_cdc_axioms(const AxiomConfig& cfg);

// The closed-structure laws: L1, L2, both differential-evaluation identities,
// the three star-composition identities, and the two-route definition of star
// itself.
AxiomReport check_lambda_axioms(const AxiomConfig& cfg);

}  // namespace lameps
