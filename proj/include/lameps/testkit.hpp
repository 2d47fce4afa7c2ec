#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "lameps/model.hpp"
#include "lameps/reduction.hpp"

namespace lameps {

struct GenConfig {
  uint64_t seed = 0;
  int max_size = 12;  // node-count bound
  std::vector<std::string> var_pool = {"x", "y", "z", "u", "v", "w"};
  int type_depth = 2;
  bool closed = false;  // no free variables when set
};

// Seeded, deterministic sized generation over all constructors; weights tilt
// toward applications.
TermPtr gen_term(const GenConfig& cfg);

TypePtr gen_type(std::mt19937_64& rng, int depth, const std::vector<std::string>& bases);

// Goal-directed generation against the typing rules; every binder is
// annotated so the result re-checks. Backtracking exhaustion yields nothing.
std::optional<TermPtr> gen_typed_term(const GenConfig& cfg, const TypingContext& ctx,
                                      const TypePtr& goal);

// (t, t') with t' reached from t by at most five random equivalence-rule
// applications, either direction, any position. diff_eq(t, t') is the ground
// truth.
std::pair<TermPtr, TermPtr> gen_equiv_pair(const GenConfig& cfg);

// All single-rule rewrites available anywhere in t (both orientations).
std::vector<TermPtr> equiv_rewrites(const TermPtr& t, std::mt19937_64& rng);

struct SuiteResult {
  std::string suite;
  int total = 0;
  int failures = 0;
  std::vector<std::string> notes;  // one per failure, capped

  bool ok() const { return failures == 0; }
};

const std::vector<std::string>& suite_names();

// Suites: canonicity, taylor, regularity, confluence, typing, soundness,
// erasure.
SuiteResult run_suite(const std::string& name, const GenConfig& cfg, int count);

// Second-derivative commutation law, exercised separately from the
// regularity suite.
SuiteResult run_commute(const GenConfig& cfg, int count);

}  // namespace lameps
