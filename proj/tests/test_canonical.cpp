#include <doctest.h>

#include <algorithm>
#include <random>

#include "lameps/canonical.hpp"
#include "lameps/testkit.hpp"

using namespace lameps;

namespace {

CanonicalTerm can(const std::string& text) { return canonicalize(parse(text)); }

bool structurally_equal(const CanonicalTerm& a, const CanonicalTerm& b) {
  return canonical_cmp(a, b) == 0;
}

const char* kGoldenInput = "D(u) * (x + y + eps z)";
// the worked canonical expansion of kGoldenInput, written with nested eps
// groups; canonicalizing it recovers the flat form
const char* kGoldenResult =
    "D(u) * y + D(u) * x + eps (D(u) * z + D(D(u) * y) * x"
    " + eps (D(D(u) * z) * y + D(D(u) * z) * x + eps (D(D(D(u) * z) * y) * x)))";

}  // namespace

TEST_CASE("canonical sum is concatenation with identity 0") {
  CanonicalTerm t = can("x + eps y");
  CHECK(structurally_equal(cansum({}, t), t));
  CHECK(structurally_equal(cansum(t, {}), t));
  // (x + y) ++ z produces the summands in order x, y, z
  CanonicalTerm xyz = cansum(can("x + y"), can("z"));
  REQUIRE(xyz.size() == 3);
  CHECK(structurally_equal(xyz, can("x + y + z")));
  // associativity
  CanonicalTerm l = cansum(cansum(can("x"), can("y")), can("z"));
  CanonicalTerm r = cansum(can("x"), cansum(can("y"), can("z")));
  CHECK(structurally_equal(l, r));
}

TEST_CASE("eps_star increments exponents and saturates second differentials") {
  CanonicalTerm x = can("x");
  CanonicalTerm ex = eps_star(x);
  REQUIRE(ex.size() == 1);
  CHECK(ex[0].exponent == 1);

  CanonicalTerm dd = can("eps (D(D(u) * v) * w)");
  REQUIRE(dd.size() == 1);
  CHECK(dd[0].exponent == 1);
  CanonicalTerm same = eps_star(dd);
  CHECK(structurally_equal(same, dd));

  // summand-wise: x + eps y -> eps x + eps^2 y
  CanonicalTerm mixed = eps_star(can("x + eps y"));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].exponent == 1);
  CHECK(mixed[1].exponent == 2);
}

TEST_CASE("d_star maps summand-wise") {
  BasicPtr v = basic_free_var("v");
  CHECK(d_star({}, v).empty());

  CanonicalTerm eu = can("eps u");
  CanonicalTerm d = d_star(eu, v);
  REQUIRE(d.size() == 1);
  CHECK(d[0].exponent == 1);
  CHECK(structurally_equal(d, can("eps (D(u) * v)")));

  CanonicalTerm two = d_star(can("u + w"), v);
  CHECK(structurally_equal(two, can("D(u) * v + D(w) * v")));
}

TEST_CASE("pri keeps exponent zero, tan decrements the rest") {
  CHECK(pri({}).empty());
  CHECK(lameps::tan(CanonicalTerm{}).empty());

  CanonicalTerm t = can("x + eps y");
  AdditiveTerm p = pri(t);
  REQUIRE(p.size() == 1);
  CHECK(alpha_eq(embed_additive(p), parse("x")));

  CanonicalTerm tn = lameps::tan(t);
  REQUIRE(tn.size() == 1);
  CHECK(tn[0].exponent == 0);
  CHECK(alpha_eq(embed(tn), parse("y")));

  CHECK(pri(can("eps y")).empty());
  CHECK(lameps::tan(can("x")).empty());
}

TEST_CASE("tan's decrement is forced by T ~ pri(T) + eps tan(T)") {
  CanonicalTerm t = can("x + eps y");
  TermPtr decomposed = sum(embed_additive(pri(t)), eps(embed(lameps::tan(t))));
  CHECK(diff_eq(embed(t), decomposed));
  // the undecremented alternative fails on the same input
  TermPtr undecremented = sum(parse("x"), eps(parse("eps y")));
  CHECK(!diff_eq(embed(t), undecremented));

  for (uint64_t seed = 0; seed < 150; seed++) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_size = 10;
    CanonicalTerm c = canonicalize(gen_term(cfg));
    CAPTURE(print(embed(c)));
    CHECK(diff_eq(embed(c), sum(embed_additive(pri(c)), eps(embed(lameps::tan(c))))));
  }
}

TEST_CASE("ap extends application additively") {
  AdditiveTerm v = {basic_free_var("v")};
  CHECK(ap({}, v).empty());
  CHECK(structurally_equal(ap(can("eps u"), v), can("eps (u v)")));
  CHECK(structurally_equal(ap(can("u + w"), v), can("u v + w v")));
}

TEST_CASE("reg base cases") {
  BasicPtr u = basic_free_var("u");
  CHECK(reg(u, {}).empty());
  CHECK(structurally_equal(reg(u, can("x")), can("D(u) * x")));
}

TEST_CASE("reg on the three-summand worked example") {
  BasicPtr u = basic_free_var("u");
  CanonicalTerm arg = can("x + y + eps z");
  CanonicalTerm result = reg(u, arg);
  CHECK(valid_canonical(result));
  REQUIRE(result.size() == 7);
  CHECK(perm_eq(result, can(kGoldenResult)));
}

TEST_CASE("canonicalize clause examples") {
  CHECK(structurally_equal(can("x + 0"), can("x")));
  CHECK(perm_eq(can(kGoldenInput), can(kGoldenResult)));
  CHECK(structurally_equal(can("(eps u) v"), can("eps (u v)")));
  // function position canonicalizing to 0 wipes the whole application
  CHECK(can("0 (x x)").empty());
  CHECK(can("D(s) * 0").empty());
  // lambda distributes over the body's summands
  CanonicalTerm lam_sum = can("\\x. x + eps y");
  REQUIRE(lam_sum.size() == 2);
  CHECK(lam_sum[0].exponent == 0);
  CHECK(lam_sum[1].exponent == 1);
}

TEST_CASE("canonicalize outputs satisfy the canonical grammar with saturation") {
  // the regression that forces the global exponent clamp: an eps^2 first
  // derivative lifted by d_star into a second differential
  CanonicalTerm tricky = can("D(u) * (y + eps eps x)");
  CHECK(valid_canonical(tricky));
  TermPtr spelled =
      parse("D(u) * y + eps eps (D(u) * x) + eps (D(D(u) * x) * y)");
  CHECK(diff_eq(parse("D(u) * (y + eps eps x)"), spelled));

  for (uint64_t seed = 0; seed < 400; seed++) {
    GenConfig cfg;
    cfg.seed = seed + 5000;
    cfg.max_size = 12;
    TermPtr t = gen_term(cfg);
    CAPTURE(print(t));
    CHECK(valid_canonical(canonicalize(t)));
  }
}

TEST_CASE("perm_normalize sorts sums and differential-tower arguments") {
  CHECK(alpha_eq(embed(perm_normalize(can("y + x"))), parse("x + y")));
  CHECK(alpha_eq(embed(perm_normalize(can("D(D(u) * y) * x"))), parse("D(D(u) * x) * y")));
  CHECK(perm_normalize({}).empty());
  // idempotent
  for (uint64_t seed = 0; seed < 150; seed++) {
    GenConfig cfg;
    cfg.seed = seed + 900;
    CanonicalTerm c = perm_normalize(canonicalize(gen_term(cfg)));
    CHECK(structurally_equal(perm_normalize(c), c));
  }
}

TEST_CASE("perm_normalize is invariant under summand reordering") {
  std::mt19937_64 shuffler(42);
  for (uint64_t seed = 0; seed < 100; seed++) {
    GenConfig cfg;
    cfg.seed = seed + 2222;
    cfg.max_size = 10;
    CanonicalTerm c = canonicalize(gen_term(cfg));
    CanonicalTerm shuffled = c;
    std::shuffle(shuffled.begin(), shuffled.end(), shuffler);
    CHECK(structurally_equal(perm_normalize(shuffled), perm_normalize(c)));
  }
}

TEST_CASE("perm_eq examples") {
  CHECK(perm_eq(can("x + (y + z)"), can("y + (x + z)")));
  CHECK(!perm_eq(can("x"), can("y")));
  CHECK(perm_eq(can("D(D(u) * v) * w"), can("D(D(u) * w) * v")));
}

TEST_CASE("diff_eq rule examples") {
  CHECK(diff_eq(parse("s + t"), parse("t + s")));
  CHECK(diff_eq(parse("\\x. 0"), parse("0")));
  CHECK(!diff_eq(parse("x"), parse("y")));
  CHECK(diff_eq(parse("s (t + eps e)"), parse("(s t) + eps ((D(s) * e) t)")));
  CHECK(diff_eq(parse("eps eps D(D(s) * t) * e"), parse("eps D(D(s) * t) * e")));
  CHECK(diff_eq(parse("D(s) * (t + e)"),
                parse("D(s) * t + D(s) * e + eps (D(D(s) * t) * e)")));
}

TEST_CASE("embed forgets canonicity") {
  CHECK(embed({}) // 0
            ->tag == TermTag::Zero);
  CHECK(alpha_eq(embed(can("eps x")), parse("eps x")));
  TermPtr two = embed(can("x + eps eps y"));
  CHECK(two->tag == TermTag::Sum);
  CHECK(alpha_eq(two, sum(free_var("x"), eps(eps(free_var("y"))))));
}

TEST_CASE("roundtrip: every term is equivalent to its canonical form") {
  for (uint64_t seed = 0; seed < 300; seed++) {
    GenConfig cfg;
    cfg.seed = seed + 31337;
    cfg.max_size = 12;
    TermPtr t = gen_term(cfg);
    CAPTURE(print(t));
    CHECK(diff_eq(embed(canonicalize(t)), t));
  }
}

TEST_CASE("canonicalization is structurally idempotent") {
  for (uint64_t seed = 0; seed < 200; seed++) {
    GenConfig cfg;
    cfg.seed = seed + 777;
    TermPtr t = gen_term(cfg);
    CanonicalTerm c = canonicalize(t);
    CAPTURE(print(t));
    CHECK(structurally_equal(canonicalize(embed(c)), c));
  }
}

TEST_CASE("canonicalization commutes with subterm canonicalization") {
  for (uint64_t seed = 0; seed < 200; seed++) {
    GenConfig cfg;
    cfg.seed = seed + 1234;
    cfg.max_size = 8;
    TermPtr s = gen_term(cfg);
    cfg.seed = seed + 999999;
    TermPtr t = gen_term(cfg);
    TermPtr cs = embed(canonicalize(s));
    TermPtr ct = embed(canonicalize(t));
    CAPTURE(print(s));
    CAPTURE(print(t));
    CHECK(structurally_equal(canonicalize(sum(cs, ct)), canonicalize(sum(s, t))));
    CHECK(structurally_equal(canonicalize(eps(ct)), canonicalize(eps(t))));
    CHECK(structurally_equal(canonicalize(app(cs, ct)), canonicalize(app(s, t))));
    CHECK(structurally_equal(canonicalize(dapp(cs, ct)), canonicalize(dapp(s, t))));
  }
}

TEST_CASE("diff_eq is an equivalence relation and contextual") {
  for (uint64_t seed = 0; seed < 120; seed++) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_size = 9;
    auto [s, t] = gen_equiv_pair(cfg);
    CAPTURE(print(s));
    CAPTURE(print(t));
    CHECK(diff_eq(s, s));
    CHECK(diff_eq(s, t));
    CHECK(diff_eq(t, s));
    // transitivity through a further rewrite
    GenConfig cfg2 = cfg;
    cfg2.seed = seed + 500000;
    std::mt19937_64 rng(seed);
    std::vector<TermPtr> more = equiv_rewrites(t, rng);
    if (!more.empty()) {
      TermPtr u = more[rng() % more.size()];
      CHECK(diff_eq(s, u));
    }
    // contextuality: the five term contexts preserve equivalence
    TermPtr w = free_var("ctxvar");
    CHECK(diff_eq(lam("x", nullptr, s), lam("x", nullptr, t)));
    CHECK(diff_eq(eps(s), eps(t)));
    CHECK(diff_eq(app(s, w), app(t, w)));
    CHECK(diff_eq(app(w, s), app(w, t)));
    CHECK(diff_eq(dapp(s, w), dapp(t, w)));
    CHECK(diff_eq(dapp(w, s), dapp(w, t)));
    CHECK(diff_eq(sum(s, w), sum(t, w)));
  }
}
