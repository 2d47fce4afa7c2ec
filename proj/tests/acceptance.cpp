// Acceptance suite: one line per criterion, every threshold pinned here.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lameps/axioms.hpp"
#include "lameps/erasure.hpp"
#include "lameps/testkit.hpp"
#include "lameps/typing.hpp"

using namespace lameps;

namespace {

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 = unlimited
  std::function<bool(std::string&)> run;
};

std::string golden_path(const char* file) {
  return std::string(LAMEPS_GOLDEN_DIR) + "/" + file;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool golden_canonicalization(std::string& detail) {
  TermPtr input = parse("D(u) * (x + y + eps z)");
  TermPtr golden = parse(read_file(golden_path("worked_example.txt")));
  CanonicalTerm got = canonicalize(input);
  if (got.size() != 7) {
    detail = "expected 7 summands, got " + std::to_string(got.size());
    return false;
  }
  if (!perm_eq(got, canonicalize(golden))) {
    detail = "canonical form differs from the committed expansion: " +
             print(embed(perm_normalize(got)));
    return false;
  }
  return true;
}

bool canonicity_decidability(std::string& detail) {
  GenConfig cfg;
  cfg.seed = 20260810;
  cfg.max_size = 12;
  for (int i = 0; i < 1000; i++) {
    GenConfig c = cfg;
    c.seed = cfg.seed + (uint64_t)i;
    auto [s, t] = gen_equiv_pair(c);
    if (!diff_eq(s, t)) {
      detail = "rewritten pair inequivalent: " + print(s) + "  vs  " + print(t);
      return false;
    }
  }
  int distinct = 0;
  for (uint64_t i = 0; distinct < 1000 && i < 40000; i++) {
    GenConfig c1 = cfg, c2 = cfg;
    c1.seed = cfg.seed + 0x5000000 + 2 * i;
    c2.seed = cfg.seed + 0x5000000 + 2 * i + 1;
    TermPtr s = gen_term(c1), t = gen_term(c2);
    if (canonical_cmp(perm_normalize(canonicalize(s)), perm_normalize(canonicalize(t))) == 0)
      continue;
    distinct++;
    if (diff_eq(s, t)) {
      detail = "distinct canonical forms reported equivalent: " + print(s) + "  vs  " + print(t);
      return false;
    }
  }
  if (distinct < 1000) {
    detail = "could not assemble 1000 distinct pairs";
    return false;
  }
  return true;
}

bool suite_clean(const std::string& suite, int count, int size, std::string& detail) {
  GenConfig cfg;
  cfg.seed = 4207;
  cfg.max_size = size;
  SuiteResult r = run_suite(suite, cfg, count);
  if (r.total < count) {
    detail = "only " + std::to_string(r.total) + " instances exercised";
    return false;
  }
  if (!r.ok()) {
    detail = std::to_string(r.failures) + " failures; first: " +
             (r.notes.empty() ? "?" : r.notes.front());
    return false;
  }
  return true;
}

bool taylor(std::string& detail) { return suite_clean("taylor", 500, 10, detail); }

bool regularity(std::string& detail) {
  // the suite checks both laws per instance (total counts two per seed)
  return suite_clean("regularity", 2 * 500, 10, detail);
}

bool commutation(std::string& detail) {
  GenConfig cfg;
  cfg.seed = 515;
  cfg.max_size = 10;
  SuiteResult r = run_commute(cfg, 300);
  if (r.total < 300 || !r.ok()) {
    detail = std::to_string(r.failures) + " failures of " + std::to_string(r.total);
    if (!r.notes.empty()) detail += "; first: " + r.notes.front();
    return false;
  }
  return true;
}

bool confluence(std::string& detail) { return suite_clean("confluence", 300, 10, detail); }

bool typing_suite(std::string& detail) {
  int exercised = 0;
  for (uint64_t seed = 0; exercised < 500 && seed < 20000; seed++) {
    std::mt19937_64 rng(seed * 3 + 1);
    TypePtr goal = gen_type(rng, 3, {"a", "b"});
    GenConfig cfg;
    cfg.seed = seed + 660000;
    cfg.max_size = 12;
    cfg.closed = true;
    auto gen = gen_typed_term(cfg, {}, goal);
    if (!gen) continue;
    TermPtr t = *gen;
    exercised++;
    if (!check({}, t, goal)) {
      detail = "generated term fails to check: " + print(t);
      return false;
    }
    TermPtr current = t;
    for (int d = 0; d < 100; d++) {
      CanonicalTerm canon = canonicalize(current);
      if (!check_wf({}, current, goal)) {
        detail = "subject reduction (wf) failed at " + print(current);
        return false;
      }
      std::vector<Redex> succs = step(embed(canon)).successors;
      if (succs.empty()) {
        if (!is_canonical_value(canon)) {
          detail = "progress failed: normal non-value " + print(embed(canon));
          return false;
        }
        break;
      }
      for (const Redex& r : succs)
        if (!check_wf({}, r.result, goal)) {
          detail = "subject reduction failed on successor " + print(r.result);
          return false;
        }
      current = fpr(embed(canon));
    }
    NormalizeResult norm = normalize(t, 10000);
    if (norm.fuel_exhausted) {
      detail = "typed term exhausted fuel: " + print(t);
      return false;
    }
  }
  if (exercised < 500) {
    detail = "only " + std::to_string(exercised) + " typed terms generated";
    return false;
  }
  return true;
}

bool model_soundness(std::string& detail) {
  GenConfig cfg;
  cfg.seed = 808;
  cfg.max_size = 10;
  SuiteResult r = run_suite("soundness", cfg, 200);
  if (r.total < 200) {
    detail = "only " + std::to_string(r.total) + " typed terms checked";
    return false;
  }
  if (!r.ok()) {
    detail = std::to_string(r.failures) + " mismatches; first: " +
             (r.notes.empty() ? "?" : r.notes.front());
    return false;
  }
  return true;
}

bool axiom_reports(std::string& detail) {
  AxiomConfig cfg;
  cfg.modulus = 2;
  cfg.budget = 4096;  // exhaustive for every Z2 family used
  AxiomReport cdc = check_cdc_axioms(cfg);
  AxiomReport lam = check_lambda_axioms(cfg);
  if (!cdc.ok() || !lam.ok()) {
    for (const auto& c : cdc.checks)
      if (!c.ok()) detail += c.name + " (" + c.detail + ") ";
    for (const auto& c : lam.checks)
      if (!c.ok()) detail += c.name + " (" + c.detail + ") ";
    return false;
  }
  bool l1 = false;
  for (const auto& c : lam.checks)
    if (c.name.rfind("L1", 0) == 0 && c.cases >= 16) l1 = true;
  if (!l1) {
    detail = "L1 was not exhaustive over the 16 maps Z2xZ2 -> Z2";
    return false;
  }
  return true;
}

bool erasure_simulation(std::string& detail) {
  int made = 0;
  for (uint64_t seed = 0; made < 300 && seed < 30000; seed++) {
    GenConfig cfg;
    cfg.seed = seed + 90000;
    cfg.max_size = 12;
    TermPtr t = gen_term(cfg);
    auto succ = step(t).successors;
    if (succ.empty()) continue;
    made++;
    if (!eps_free(erase(t)) || !eps_free(erase(succ[0].result))) {
      detail = "erasure left an eps behind on " + print(t);
      return false;
    }
    SimulateResult r = erase_simulates(t, succ[0].result, 8);
    if (r != SimulateResult::Confirmed) {
      detail = std::string(r == SimulateResult::Inconclusive ? "inconclusive" : "refuted") +
               " on " + print(t) + " => " + print(succ[0].result);
      return false;
    }
  }
  if (made < 300) {
    detail = "only " + std::to_string(made) + " one-step reductions found";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "golden canonicalization of D(u) * (x + y + eps z)", 1.0, golden_canonicalization},
      {2, "canonicity and decidability (1000 + 1000 pairs)", 60.0, canonicity_decidability},
      {3, "syntactic Taylor expansion (500 instances)", 60.0, taylor},
      {4, "regularity of differential substitution (500 instances)", 0.0, regularity},
      {5, "second-derivative commutation (300 instances)", 0.0, commutation},
      {6, "confluence diamond on canonical successors (300 terms)", 0.0, confluence},
      {7, "typing: subject reduction, progress, normalization (500 terms)", 120.0, typing_suite},
      {8, "model soundness over Z3 and Z2 (200 typed terms)", 0.0, model_soundness},
      {9, "exhaustive Z2 axiom reports", 60.0, axiom_reports},
      {10, "erasure simulation (300 one-step reductions)", 0.0, erasure_simulation},
  };

  int failures = 0;
  for (Criterion& c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.time_limit_s > 0 && elapsed > c.time_limit_s) {
      ok = false;
      detail = "exceeded the " + std::to_string(c.time_limit_s) + "s budget";
    }
    std::printf("[%s] %2d  %s  (%.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), elapsed);
    if (!ok) {
      failures++;
      if (!detail.empty()) std::printf("       %s\n", detail.c_str());
    }
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
