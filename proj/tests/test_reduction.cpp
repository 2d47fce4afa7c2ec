#include <doctest.h>

#include <random>

#include "lameps/erasure.hpp"
#include "lameps/reduction.hpp"
#include "lameps/testkit.hpp"

using namespace lameps;

namespace {

bool wf_contains(const std::vector<CanonicalTerm>& set, const TermPtr& t) {
  CanonicalTerm c = perm_normalize(canonicalize(t));
  for (const CanonicalTerm& s : set)
    if (canonical_cmp(s, c) == 0) return true;
  return false;
}

// bounded breadth-first reachability under one-step reduction, up to alpha
bool reachable(const TermPtr& from, const TermPtr& to, int bound) {
  std::vector<TermPtr> frontier = {from};
  for (int d = 0; d <= bound; d++) {
    std::vector<TermPtr> next;
    for (const TermPtr& t : frontier) {
      if (alpha_eq(t, to)) return true;
      for (const Redex& r : step(t).successors) next.push_back(r.result);
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace

TEST_CASE("one-step reduction finds beta and diff redexes with paths") {
  StepResult r = step(parse("(\\x. x) 0"));
  REQUIRE(r.successors.size() == 1);
  CHECK(r.successors[0].kind == RedexKind::Beta);
  CHECK(r.successors[0].path.empty());
  CHECK(alpha_eq(r.successors[0].result, parse("0")));

  StepResult d = step(parse("D(\\x. x) * u"));
  REQUIRE(d.successors.size() == 1);
  CHECK(d.successors[0].kind == RedexKind::Diff);
  CHECK(alpha_eq(d.successors[0].result, parse("\\x. u")));

  CHECK(step(parse("x")).normal_form());

  // nested redex paths
  StepResult n = step(parse("y ((\\x. x) z)"));
  REQUIRE(n.successors.size() == 1);
  CHECK(n.successors[0].path == std::vector<int>{1});
}

TEST_CASE("wf_step reduces through the canonical representative") {
  auto s = wf_step(parse("(\\x. x + 0) 0"));
  REQUIRE(s.size() == 1);
  CHECK(wf_contains(s, parse("0")));

  // spurious zero representations are normal forms
  CHECK(wf_step(parse("0 (x x)")).empty());
  CHECK(wf_step(parse("0")).empty());

  // one class per differential-tower argument order
  auto two = wf_step(parse("D(D(\\x. x y) * u) * v"));
  CHECK(two.size() == 2);
  CHECK(wf_contains(two, parse("D(\\x. u y) * v")));
  CHECK(wf_contains(two, parse("D(\\x. v y) * u")));
}

TEST_CASE("substituted arguments keep referring outward past new binders") {
  // beta under an enclosing binder: the planted argument's reference to the
  // outer binder must not be captured by the inner one
  TermPtr t = parse("\\z:a. (\\u:a. \\y:a. q + u) z");
  StepResult r = step(t);
  REQUIRE(r.successors.size() == 1);
  CHECK(alpha_eq(r.successors[0].result, parse("\\z:a. \\y:a. q + z")));
  CHECK(alpha_eq(fpr(t), parse("\\z:a. \\y:a. q + z")));

  // same through a differential redex argument
  TermPtr d = parse("\\z. D(\\u. \\y. u) * z");
  TermPtr fired = step(d).successors.at(0).result;
  CHECK(alpha_eq(fired, parse("\\z. \\u. \\y. z")));
}

TEST_CASE("full parallel reduct collapses stacked redexes") {
  CHECK(alpha_eq(fpr(parse("(\\x. x) y")), parse("y")));
  CHECK(alpha_eq(fpr(parse("D(\\x. x) * u")), parse("\\x. u")));
  // (D(\x. t) * u) s fires both layers in one pass
  TermPtr t = parse("(D(\\x. x) * u) s");
  CHECK(alpha_eq(fpr(t), parse("u")));
  TermPtr deep = parse("(\\x. x x) ((\\y. y) z)");
  CHECK(alpha_eq(fpr(deep), parse("z z")));
}

TEST_CASE("parallel reduction membership") {
  CHECK(par_step_check(parse("x + (\\y. y) z"), parse("x + (\\y. y) z")));
  CHECK(par_step_check(parse("(\\x. x) y"), parse("y")));
  CHECK(!par_step_check(parse("x"), parse("y")));
  // every one-step successor is a parallel reduct
  for (uint64_t seed = 0; seed < 150; seed++) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_size = 10;
    TermPtr t = gen_term(cfg);
    for (const Redex& r : step(t).successors) {
      CAPTURE(print(t));
      CAPTURE(print(r.result));
      CHECK(par_step_check(t, r.result));
    }
  }
}

TEST_CASE("fpr is itself a parallel reduct and reachable by plain steps") {
  for (uint64_t seed = 0; seed < 120; seed++) {
    GenConfig cfg;
    cfg.seed = seed + 1000;
    cfg.max_size = 8;
    TermPtr t = gen_term(cfg);
    TermPtr full = fpr(t);
    CAPTURE(print(t));
    CAPTURE(print(full));
    CHECK(par_step_check(t, full));
    CHECK(reachable(t, full, 6));
  }
}

TEST_CASE("parallel reduction cannot introduce free variables") {
  for (uint64_t seed = 0; seed < 150; seed++) {
    GenConfig cfg;
    cfg.seed = seed + 2000;
    cfg.max_size = 10;
    TermPtr t = gen_term(cfg);
    VarSet before = free_vars(t);
    for (const TermPtr& r : parallel_reducts(t)) {
      for (const std::string& v : free_vars(r)) {
        CAPTURE(print(t));
        CAPTURE(print(r));
        CHECK(before.count(v) == 1);
      }
    }
  }
}

TEST_CASE("reduction is compatible with canonicalization") {
  // s => s' implies can(s) parallel-steps to something equivalent to s'
  for (uint64_t seed = 0; seed < 120; seed++) {
    GenConfig cfg;
    cfg.seed = seed + 3000;
    cfg.max_size = 9;
    TermPtr s = gen_term(cfg);
    for (const Redex& r : step(s).successors) {
      TermPtr canon = embed(canonicalize(s));
      bool joined = false;
      for (const TermPtr& pr : parallel_reducts(canon))
        if (diff_eq(pr, r.result)) {
          joined = true;
          break;
        }
      CAPTURE(print(s));
      CAPTURE(print(r.result));
      CHECK(joined);
    }
  }
}

TEST_CASE("diamond property of the canonical successors") {
  // every one-step successor parallel-reduces into the class of the canonical
  // representative's full parallel reduct, joining all pairs there
  for (uint64_t seed = 0; seed < 100; seed++) {
    GenConfig cfg;
    cfg.seed = seed + 4000;
    cfg.max_size = 9;
    TermPtr t = gen_term(cfg);
    TermPtr target = fpr(embed(canonicalize(t)));
    for (const CanonicalTerm& s : wf_step(t)) {
      bool joined = false;
      for (const TermPtr& w : parallel_reducts(embed(s)))
        if (diff_eq(w, target)) {
          joined = true;
          break;
        }
      CAPTURE(print(t));
      CAPTURE(print(embed(s)));
      CHECK(joined);
    }
  }
}

TEST_CASE("a created redex can defeat per-successor fpr joining") {
  // the counterexample that forces the join point above: the beta successor
  // still holds an undeveloped redex created by the diff reduction
  TermPtr t = parse("(\\v. eps (v (0 0))) \\u. eps u z");
  std::vector<CanonicalTerm> succ = wf_step(t);
  REQUIRE(succ.size() == 2);
  CHECK(!diff_eq(fpr(embed(succ[0])), fpr(embed(succ[1]))));
  TermPtr target = fpr(embed(canonicalize(t)));
  for (const CanonicalTerm& s : succ) {
    bool joined = false;
    for (const TermPtr& w : parallel_reducts(embed(s)))
      if (diff_eq(w, target)) joined = true;
    CHECK(joined);
  }
}

TEST_CASE("wf reduction congruence with sum, application, and D") {
  TermPtr s = parse("(\\x. x) y");
  TermPtr s2 = parse("y");
  // s + t
  CHECK(wf_contains(wf_step(sum(s, parse("t"))), sum(s2, parse("t"))));
  // s t* for an additive t
  TermPtr applied = app(s, parse("w"));
  bool found = false;
  std::vector<TermPtr> frontier = {embed(canonicalize(applied))};
  for (int d = 0; d < 3 && !found; d++) {
    std::vector<TermPtr> next;
    for (const TermPtr& f : frontier)
      for (const Redex& r : step(f).successors) {
        if (diff_eq(r.result, app(s2, parse("w")))) found = true;
        next.push_back(embed(canonicalize(r.result)));
      }
    frontier = std::move(next);
  }
  CHECK(found);
  // D(s) * t for a basic t
  CHECK(wf_contains(wf_step(dapp(s, parse("w"))), dapp(s2, parse("w"))));
}

TEST_CASE("normalize returns canonical normal forms with step counts") {
  NormalizeResult r = normalize(parse("(\\x. x) 0"), 10);
  CHECK(!r.fuel_exhausted);
  CHECK(r.steps == 1);
  CHECK(r.normal_form.empty());  // 0

  NormalizeResult omega = normalize(parse("(\\x. x x) (\\x. x x)"), 50);
  CHECK(omega.fuel_exhausted);

  NormalizeResult canon_only = normalize(parse("D(u) * (x + y + eps z)"), 10);
  CHECK(!canon_only.fuel_exhausted);
  CHECK(canon_only.steps == 0);
  CHECK(perm_eq(canon_only.normal_form, canonicalize(parse(
      "D(u) * y + D(u) * x + eps (D(u) * z + D(D(u) * y) * x + eps (D(D(u) * z) * y"
      " + D(D(u) * z) * x + eps (D(D(D(u) * z) * y) * x)))"))));
}

TEST_CASE("a normal canonical representative means no wf successor") {
  for (uint64_t seed = 0; seed < 150; seed++) {
    GenConfig cfg;
    cfg.seed = seed + 5000;
    cfg.max_size = 9;
    TermPtr t = gen_term(cfg);
    bool plain = step(embed(canonicalize(t))).normal_form();
    CAPTURE(print(t));
    CHECK(plain == wf_step(t).empty());
  }
}

TEST_CASE("canonical values") {
  CHECK(is_canonical_value({}));
  CHECK(is_canonical_value(canonicalize(parse("eps (\\x. x)"))));
  CHECK(!is_canonical_value(canonicalize(parse("x"))));
  CHECK(is_canonical_value(canonicalize(parse("(\\x. x) + eps (\\y. y y)"))));
  CHECK(!is_canonical_value(canonicalize(parse("(\\x. x) + u"))));
}
