#include "lameps/axioms.hpp"

#include <cassert>
#include <random>
#include <sstream>

namespace lameps {

namespace fin {

GroupPtr cyclic(int n) {
  assert(n >= 1);
  auto g = std::make_shared<Group>();
  g->kind = Group::Kind::Cyclic;
  g->modulus = n;
  g->card = (size_t)n;
  return g;
}

GroupPtr product(GroupPtr a, GroupPtr b) {
  auto g = std::make_shared<Group>();
  g->kind = Group::Kind::Product;
  g->card = a->card * b->card;
  g->left = std::move(a);
  g->right = std::move(b);
  return g;
}

GroupPtr power(GroupPtr dom, GroupPtr cod) {
  auto g = std::make_shared<Group>();
  g->kind = Group::Kind::Power;
  size_t card = 1;
  for (size_t i = 0; i < dom->card; i++) card *= cod->card;
  g->card = card;
  g->dom = std::move(dom);
  g->cod = std::move(cod);
  return g;
}

size_t add(const GroupPtr& g, size_t a, size_t b) {
  switch (g->kind) {
    case Group::Kind::Cyclic:
      return (a + b) % g->card;
    case Group::Kind::Product:
      return pair_rank(g, add(g->left, fst(g, a), fst(g, b)), add(g->right, snd(g, a), snd(g, b)));
    case Group::Kind::Power: {
      size_t out = 0, scale = 1;
      for (size_t i = 0; i < g->dom->card; i++) {
        size_t da = a % g->cod->card, db = b % g->cod->card;
        a /= g->cod->card;
        b /= g->cod->card;
        out += add(g->cod, da, db) * scale;
        scale *= g->cod->card;
      }
      return out;
    }
  }
  return 0;
}

size_t neg(const GroupPtr& g, size_t a) {
  switch (g->kind) {
    case Group::Kind::Cyclic:
      return (g->card - a) % g->card;
    case Group::Kind::Product:
      return pair_rank(g, neg(g->left, fst(g, a)), neg(g->right, snd(g, a)));
    case Group::Kind::Power: {
      size_t out = 0, scale = 1;
      for (size_t i = 0; i < g->dom->card; i++) {
        out += neg(g->cod, a % g->cod->card) * scale;
        a /= g->cod->card;
        scale *= g->cod->card;
      }
      return out;
    }
  }
  return 0;
}

size_t sub(const GroupPtr& g, size_t a, size_t b) { return add(g, a, neg(g, b)); }

size_t pair_rank(const GroupPtr& prod, size_t l, size_t r) { return l + prod->left->card * r; }
size_t fst(const GroupPtr& prod, size_t p) { return p % prod->left->card; }
size_t snd(const GroupPtr& prod, size_t p) { return p / prod->left->card; }

size_t apply(const GroupPtr& pow, size_t f, size_t x) {
  for (size_t i = 0; i < x; i++) f /= pow->cod->card;
  return f % pow->cod->card;
}

Morphism identity(const GroupPtr& a) {
  Morphism m{a, a, {}};
  m.table.resize(a->card);
  for (size_t i = 0; i < a->card; i++) m.table[i] = i;
  return m;
}

Morphism zero_morphism(const GroupPtr& a, const GroupPtr& b) {
  return Morphism{a, b, std::vector<size_t>(a->card, 0)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  assert(f.cod->card == g.dom->card);
  Morphism m{f.dom, g.cod, {}};
  m.table.reserve(f.table.size());
  for (size_t x : f.table) m.table.push_back(g.table[x]);
  return m;
}

Morphism add_m(const Morphism& f, const Morphism& g) {
  Morphism m{f.dom, f.cod, {}};
  m.table.reserve(f.table.size());
  for (size_t i = 0; i < f.table.size(); i++)
    m.table.push_back(add(f.cod, f.table[i], g.table[i]));
  return m;
}

Morphism eps_m(const Morphism& f) { return f; }

Morphism pair_m(const Morphism& f, const Morphism& g) {
  GroupPtr cod = product(f.cod, g.cod);
  Morphism m{f.dom, cod, {}};
  m.table.reserve(f.table.size());
  for (size_t i = 0; i < f.table.size(); i++)
    m.table.push_back(pair_rank(cod, f.table[i], g.table[i]));
  return m;
}

Morphism proj1(const GroupPtr& a, const GroupPtr& b) {
  GroupPtr dom = product(a, b);
  Morphism m{dom, a, {}};
  m.table.resize(dom->card);
  for (size_t i = 0; i < dom->card; i++) m.table[i] = fst(dom, i);
  return m;
}

Morphism proj2(const GroupPtr& a, const GroupPtr& b) {
  GroupPtr dom = product(a, b);
  Morphism m{dom, b, {}};
  m.table.resize(dom->card);
  for (size_t i = 0; i < dom->card; i++) m.table[i] = snd(dom, i);
  return m;
}

Morphism cross(const Morphism& f, const Morphism& g) {
  return pair_m(compose(f, proj1(f.dom, g.dom)), compose(g, proj2(f.dom, g.dom)));
}

Morphism bang(const GroupPtr& a) { return zero_morphism(a, cyclic(1)); }

Morphism diff(const Morphism& f) {
  GroupPtr dom = product(f.dom, f.dom);
  Morphism m{dom, f.cod, {}};
  m.table.resize(dom->card);
  for (size_t p = 0; p < dom->card; p++) {
    size_t x = fst(dom, p), u = snd(dom, p);
    m.table[p] = sub(f.cod, f.table[add(f.dom, x, u)], f.table[x]);
  }
  return m;
}

Morphism lambda(const Morphism& f) {
  assert(f.dom->kind == Group::Kind::Product);
  GroupPtr a = f.dom->left, b = f.dom->right;
  GroupPtr pow = power(b, f.cod);
  Morphism m{a, pow, {}};
  m.table.resize(a->card);
  for (size_t x = 0; x < a->card; x++) {
    size_t rank = 0, scale = 1;
    for (size_t y = 0; y < b->card; y++) {
      rank += f.table[pair_rank(f.dom, x, y)] * scale;
      scale *= f.cod->card;
    }
    m.table[x] = rank;
  }
  return m;
}

Morphism unlambda(const Morphism& f) {
  assert(f.cod->kind == Group::Kind::Power);
  GroupPtr b = f.cod->dom, c = f.cod->cod;
  GroupPtr dom = product(f.dom, b);
  Morphism m{dom, c, {}};
  m.table.resize(dom->card);
  for (size_t p = 0; p < dom->card; p++)
    m.table[p] = apply(f.cod, f.table[fst(dom, p)], snd(dom, p));
  return m;
}

Morphism ev(const GroupPtr& b, const GroupPtr& c) {
  GroupPtr pow = power(b, c);
  GroupPtr dom = product(pow, b);
  Morphism m{dom, c, {}};
  m.table.resize(dom->card);
  for (size_t p = 0; p < dom->card; p++) m.table[p] = apply(pow, fst(dom, p), snd(dom, p));
  return m;
}

Morphism star(const Morphism& s, const Morphism& u) {
  assert(s.dom->kind == Group::Kind::Product);
  GroupPtr a = s.dom->left, b = s.dom->right;
  Morphism zero_a = zero_morphism(s.dom, a);
  Morphism u_pi1 = compose(u, proj1(a, b));
  return compose(diff(s), pair_m(identity(s.dom), pair_m(zero_a, u_pi1)));
}

bool morphism_eq(const Morphism& f, const Morphism& g) {
  return f.dom->card == g.dom->card && f.cod->card == g.cod->card && f.table == g.table;
}

std::vector<Morphism> morphisms(const GroupPtr& a, const GroupPtr& b, size_t budget,
                                uint64_t seed) {
  double total = 1;
  for (size_t i = 0; i < a->card; i++) total *= (double)b->card;
  std::vector<Morphism> out;
  if (total <= (double)budget) {
    std::vector<size_t> table(a->card, 0);
    for (;;) {
      out.push_back(Morphism{a, b, table});
      size_t i = 0;
      while (i < table.size() && ++table[i] == b->card) table[i++] = 0;
      if (i == table.size()) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    for (size_t n = 0; n < budget; n++) {
      Morphism m{a, b, {}};
      m.table.resize(a->card);
      for (size_t i = 0; i < a->card; i++) m.table[i] = rng() % b->card;
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace fin

bool AxiomReport::ok() const {
  for (const AxiomCheck& c : checks)
    if (!c.ok()) return false;
  return true;
}

size_t AxiomReport::total_cases() const {
  size_t n = 0;
  for (const AxiomCheck& c : checks) n += c.cases;
  return n;
}

std::string AxiomReport::to_string() const {
  std::ostringstream os;
  for (const AxiomCheck& c : checks) {
    os << (c.ok() ? "ok  " : "FAIL") << "  " << c.name << "  (" << c.cases << " instances";
    if (!c.ok()) os << ", " << c.violations << " violations; first: " << c.detail;
    os << ")\n";
  }
  return os.str();
}

namespace {

using namespace fin;

struct Recorder {
  AxiomReport& report;
  AxiomCheck* current = nullptr;

  void begin(const std::string& name) {
    for (AxiomCheck& c : report.checks)
      if (c.name == name) {
        current = &c;
        return;
      }
    report.checks.push_back(AxiomCheck{});
    report.checks.back().name = name;
    current = &report.checks.back();
  }

  void instance(bool holds, const std::string& describe) {
    current->cases++;
    if (!holds) {
      current->violations++;
      if (current->detail.empty()) current->detail = describe;
    }
  }

  void require_eq(const Morphism& lhs, const Morphism& rhs, const std::string& describe) {
    instance(morphism_eq(lhs, rhs), describe);
  }
};

std::string tag(const Morphism& f, size_t index) {
  return "f#" + std::to_string(index) + " on |dom|=" + std::to_string(f.dom->card);
}

// CdC laws for one f : A -> B.
void cdc_unary(Recorder& rec, size_t fi, const Morphism& f) {
  const GroupPtr& A = f.dom;
  const GroupPtr& B = f.cod;
  Morphism df = diff(f);
  GroupPtr AA = df.dom;
  Morphism d2f = diff(df);
  GroupPtr A4 = d2f.dom;

  // CdC0: f(x + eps u) = f(x) + eps(Df(x, u))
  rec.begin("CdC0 derivative condition");
  bool ok = true;
  for (size_t x = 0; ok && x < A->card; x++)
    for (size_t u = 0; ok && u < A->card; u++)
      ok = f.table[add(A, x, u)] ==
           add(B, f.table[x], df.table[pair_rank(AA, x, u)]);
  rec.instance(ok, tag(f, fi));

  // CdC2: Df(x, u + v) = Df(x, u) + Df(x + eps u, v), Df(x, 0) = 0
  rec.begin("CdC2 regularity");
  ok = true;
  for (size_t x = 0; ok && x < A->card; x++) {
    if (df.table[pair_rank(AA, x, 0)] != 0) ok = false;
    for (size_t u = 0; ok && u < A->card; u++)
      for (size_t v = 0; ok && v < A->card; v++)
        ok = df.table[pair_rank(AA, x, add(A, u, v))] ==
             add(B, df.table[pair_rank(AA, x, u)],
                 df.table[pair_rank(AA, add(A, x, u), v)]);
  }
  rec.instance(ok, tag(f, fi));

  // CdC1 (eps part): D(eps f) = eps(Df); D0 = 0 is covered per carrier below.
  rec.begin("CdC1 derivative of eps(f)");
  rec.require_eq(diff(eps_m(f)), eps_m(df), tag(f, fi));

  // CdC6: D2f(<x,u>,<0,v>) = Df(x + eps u, v)
  rec.begin("CdC6 second derivative at zero base step");
  ok = true;
  for (size_t x = 0; ok && x < A->card; x++)
    for (size_t u = 0; ok && u < A->card; u++)
      for (size_t v = 0; ok && v < A->card; v++) {
        size_t lhs = d2f.table[pair_rank(A4, pair_rank(AA, x, u), pair_rank(AA, 0, v))];
        size_t rhs = df.table[pair_rank(AA, add(A, x, u), v)];
        ok = lhs == rhs;
      }
  rec.instance(ok, tag(f, fi));

  // CdC7: D2f(<x,u>,<v,0>) symmetric in u, v
  rec.begin("CdC7 second derivative symmetry");
  ok = true;
  for (size_t x = 0; ok && x < A->card; x++)
    for (size_t u = 0; ok && u < A->card; u++)
      for (size_t v = 0; ok && v < A->card; v++)
        ok = d2f.table[pair_rank(A4, pair_rank(AA, x, u), pair_rank(AA, v, 0))] ==
             d2f.table[pair_rank(A4, pair_rank(AA, x, v), pair_rank(AA, u, 0))];
  rec.instance(ok, tag(f, fi));

  // Df(x, eps u) = eps(Df)(x, u)
  rec.begin("derivative/eps exchange");
  ok = true;
  for (size_t x = 0; ok && x < A->card; x++)
    for (size_t u = 0; ok && u < A->card; u++)
      ok = df.table[pair_rank(AA, x, u)] == eps_m(df).table[pair_rank(AA, x, u)];
  rec.instance(ok, tag(f, fi));

  // eps(D2f)(<x,u>,<v,0>) = eps^2(D2f)(<x,u>,<v,0>)
  rec.begin("second derivative eps collapse");
  ok = true;
  for (size_t x = 0; ok && x < A->card; x++)
    for (size_t u = 0; ok && u < A->card; u++)
      for (size_t v = 0; ok && v < A->card; v++) {
        size_t p = pair_rank(A4, pair_rank(AA, x, u), pair_rank(AA, v, 0));
        ok = eps_m(d2f).table[p] == eps_m(eps_m(d2f)).table[p];
      }
  rec.instance(ok, tag(f, fi));
}

}  // namespace

AxiomReport check_cdc_axioms(const AxiomConfig& cfg) {
  AxiomReport report;
  Recorder rec{report};
  GroupPtr Z = cyclic(cfg.modulus);
  GroupPtr ZZ = product(Z, Z);

  std::vector<std::pair<GroupPtr, GroupPtr>> shapes = {{Z, Z}, {ZZ, Z}, {Z, ZZ}};
  size_t fi = 0;
  for (const auto& [A, B] : shapes) {
    for (const Morphism& f : morphisms(A, B, cfg.budget, cfg.seed)) cdc_unary(rec, fi++, f);
  }

  // CdC1 additive part: D(f + g) = Df + Dg, D0 = 0.
  rec.begin("CdC1 derivative additivity");
  for (const auto& [A, B] : shapes) {
    auto fs = morphisms(A, B, 64, cfg.seed + 1);
    for (size_t i = 0; i < fs.size(); i++)
      for (size_t j = 0; j < fs.size(); j++)
        rec.require_eq(diff(add_m(fs[i], fs[j])), add_m(diff(fs[i]), diff(fs[j])),
                       "pair " + std::to_string(i) + "," + std::to_string(j));
    rec.require_eq(diff(zero_morphism(A, B)),
                   zero_morphism(product(A, A), B), "zero morphism");
  }

  // CdC3: DId = pi2, Dpi1 = pi1 . pi2, Dpi2 = pi2 . pi2.
  rec.begin("CdC3 structural derivatives");
  rec.require_eq(diff(identity(Z)), proj2(Z, Z), "identity");
  {
    Morphism p1 = proj1(Z, Z), p2 = proj2(Z, Z);
    Morphism pp2 = proj2(ZZ, ZZ);
    rec.require_eq(diff(p1), compose(p1, pp2), "pi1");
    rec.require_eq(diff(p2), compose(p2, pp2), "pi2");
  }

  // CdC4: D<f,g> = <Df, Dg> and D(!) = !.
  rec.begin("CdC4 derivative of pairing");
  {
    auto fs = morphisms(Z, Z, 64, cfg.seed + 2);
    for (size_t i = 0; i < fs.size(); i++)
      for (size_t j = 0; j < fs.size(); j++)
        rec.require_eq(diff(pair_m(fs[i], fs[j])), pair_m(diff(fs[i]), diff(fs[j])),
                       "pair " + std::to_string(i) + "," + std::to_string(j));
    rec.require_eq(diff(bang(Z)), bang(ZZ), "terminal");
  }

  // CdC5: D(g . f) = Dg . <f . pi1, Df>.
  rec.begin("CdC5 chain rule");
  for (const auto& [A, B] : shapes) {
    auto fs = morphisms(A, B, 48, cfg.seed + 3);
    auto gs = morphisms(B, Z, 48, cfg.seed + 4);
    for (size_t i = 0; i < fs.size(); i++)
      for (size_t j = 0; j < gs.size(); j++)
        rec.require_eq(diff(compose(gs[j], fs[i])),
                       compose(diff(gs[j]), pair_m(compose(fs[i], proj1(A, A)), diff(fs[i]))),
                       "pair " + std::to_string(i) + "," + std::to_string(j));
  }

  return report;
}

AxiomReport check_lambda_axioms(const AxiomConfig& cfg) {
  AxiomReport report;
  Recorder rec{report};
  GroupPtr Z = cyclic(cfg.modulus);
  GroupPtr A = Z, B = Z, C = Z, D = Z;
  GroupPtr AB = product(A, B);

  auto fs = morphisms(AB, C, cfg.budget, cfg.seed);

  // L1: D(Lambda f) = Lambda(Df . <pi1 x Id, pi2 x 0>)
  rec.begin("L1 derivative of currying");
  for (size_t i = 0; i < fs.size(); i++) {
    const Morphism& f = fs[i];
    Morphism lhs = diff(lambda(f));
    GroupPtr AA = product(A, A);
    Morphism p1 = proj1(A, A), p2 = proj2(A, A);
    Morphism route = pair_m(cross(p1, identity(B)), cross(p2, zero_morphism(B, B)));
    Morphism rhs = lambda(compose(diff(f), route));
    rec.require_eq(lhs, rhs, tag(f, i));
  }

  // L2: Lambda(eps f) = eps(Lambda f)
  rec.begin("L2 currying respects eps");
  for (size_t i = 0; i < fs.size(); i++)
    rec.require_eq(lambda(eps_m(fs[i])), eps_m(lambda(fs[i])), tag(fs[i], i));

  auto es = morphisms(A, B, cfg.budget, cfg.seed + 1);
  Morphism evBC = ev(B, C);

  // d-ev identity (i):
  // D(ev . <Lambda f, e>) = ev . <D Lambda f, e . pi1>
  //   + Df . <<pi1 + eps pi2, e . pi1>, <0, De>>
  rec.begin("differential-evaluation identity (i)");
  for (size_t i = 0; i < fs.size(); i++)
    for (size_t j = 0; j < es.size(); j++) {
      const Morphism& f = fs[i];
      const Morphism& e = es[j];
      Morphism lhs = diff(compose(evBC, pair_m(lambda(f), e)));
      GroupPtr AA = product(A, A);
      Morphism p1 = proj1(A, A), p2 = proj2(A, A);
      Morphism t1 = compose(evBC, pair_m(diff(lambda(f)), compose(e, p1)));
      Morphism left_pair = pair_m(add_m(p1, eps_m(p2)), compose(e, p1));
      Morphism right_pair = pair_m(zero_morphism(AA, A), diff(e));
      Morphism t2 = compose(diff(f), pair_m(left_pair, right_pair));
      rec.require_eq(lhs, add_m(t1, t2), tag(f, i) + " e#" + std::to_string(j));
    }

  // d-ev identity (ii):
  // D(ev . <Lambda f, e>) = ev . <D Lambda f, e . pi1 + eps De>
  //   + Df . <<pi1, e . pi1>, <0, De>>
  rec.begin("differential-evaluation identity (ii)");
  for (size_t i = 0; i < fs.size(); i++)
    for (size_t j = 0; j < es.size(); j++) {
      const Morphism& f = fs[i];
      const Morphism& e = es[j];
      Morphism lhs = diff(compose(evBC, pair_m(lambda(f), e)));
      GroupPtr AA = product(A, A);
      Morphism p1 = proj1(A, A);
      Morphism t1 = compose(evBC, pair_m(diff(lambda(f)), add_m(compose(e, p1), eps_m(diff(e)))));
      Morphism t2 = compose(diff(f), pair_m(pair_m(p1, compose(e, p1)),
                                            pair_m(zero_morphism(AA, A), diff(e))));
      rec.require_eq(lhs, add_m(t1, t2), tag(f, i) + " e#" + std::to_string(j));
    }

  // star on (A x B) x C shapes
  GroupPtr ABC = product(AB, C);
  auto f3s = morphisms(ABC, D, cfg.budget, cfg.seed + 2);
  auto e2s = morphisms(AB, C, 16, cfg.seed + 3);
  auto gs = morphisms(A, B, 16, cfg.seed + 4);
  auto gps = morphisms(AB, B, 16, cfg.seed + 5);
  Morphism evCD = ev(C, D);

  // Dual-route definition: (s*u)(a,b) = s(a, b + u(a)) - s(a, b)
  rec.begin("star-composition two-route agreement");
  for (size_t i = 0; i < e2s.size(); i++)
    for (size_t j = 0; j < gs.size(); j++) {
      const Morphism& s = e2s[i];
      const Morphism& u = gs[j];
      Morphism by_diff = star(s, u);
      Morphism direct{AB, s.cod, {}};
      direct.table.resize(AB->card);
      for (size_t p = 0; p < AB->card; p++) {
        size_t a = fst(AB, p), b = snd(AB, p);
        size_t shifted = pair_rank(AB, a, add(B, b, u.table[a]));
        direct.table[p] = sub(s.cod, s.table[shifted], s.table[p]);
      }
      rec.require_eq(by_diff, direct, "s#" + std::to_string(i) + " u#" + std::to_string(j));
    }

  // star identity (i):
  // (ev . <Lambda f, e>) * g = ev . <Lambda(f * (e * g)), e>
  //   + ev . <Lambda(f) * g, e . <pi1, pi2 + eps(g) . pi1>>
  rec.begin("star-evaluation identity (i)");
  for (size_t i = 0; i < f3s.size(); i++)
    for (size_t j = 0; j < e2s.size(); j++)
      for (size_t k = 0; k < gs.size(); k++) {
        const Morphism& f = f3s[i];
        const Morphism& e = e2s[j];
        const Morphism& g = gs[k];
        Morphism lhs = star(compose(evCD, pair_m(lambda(f), e)), g);
        Morphism t1 = compose(evCD, pair_m(lambda(star(f, star(e, g))), e));
        Morphism p1 = proj1(A, B), p2 = proj2(A, B);
        Morphism shift = pair_m(p1, add_m(p2, compose(eps_m(g), p1)));
        Morphism t2 = compose(evCD, pair_m(star(lambda(f), g), compose(e, shift)));
        rec.require_eq(lhs, add_m(t1, t2), "f#" + std::to_string(i) + " e#" + std::to_string(j) +
                                               " g#" + std::to_string(k));
      }

  // star identity (ii):
  // Lambda(f * e) * g = Lambda[ Lambda^-(Lambda(f) * g) * (e . (Id + <0, eps g . pi1>))
  //   + eps(f * e) * (e * g) + f * (e * g) ]
  rec.begin("star-evaluation identity (ii)");
  for (size_t i = 0; i < f3s.size(); i++)
    for (size_t j = 0; j < e2s.size(); j++)
      for (size_t k = 0; k < gs.size(); k++) {
        const Morphism& f = f3s[i];
        const Morphism& e = e2s[j];
        const Morphism& g = gs[k];
        Morphism lhs = star(lambda(star(f, e)), g);
        Morphism p1 = proj1(A, B);
        Morphism shift = add_m(identity(AB),
                               pair_m(zero_morphism(AB, A), compose(eps_m(g), p1)));
        Morphism t1 = star(unlambda(star(lambda(f), g)), compose(e, shift));
        Morphism t2 = star(eps_m(star(f, e)), star(e, g));
        Morphism t3 = star(f, star(e, g));
        Morphism rhs = lambda(add_m(add_m(t1, t2), t3));
        rec.require_eq(lhs, rhs, "f#" + std::to_string(i) + " e#" + std::to_string(j) + " g#" +
                                     std::to_string(k));
      }

  // star identity (iii):
  // Lambda(f * e) . <pi1, g'> = Lambda(Lambda^-(Lambda(f) . <pi1, g'>) * (e . <pi1, g'>))
  rec.begin("star-evaluation identity (iii)");
  for (size_t i = 0; i < f3s.size(); i++)
    for (size_t j = 0; j < e2s.size(); j++)
      for (size_t k = 0; k < gps.size(); k++) {
        const Morphism& f = f3s[i];
        const Morphism& e = e2s[j];
        const Morphism& gp = gps[k];
        Morphism p1 = proj1(A, B);
        Morphism reindex = pair_m(p1, gp);
        Morphism lhs = compose(lambda(star(f, e)), reindex);
        Morphism rhs = lambda(star(unlambda(compose(lambda(f), reindex)), compose(e, reindex)));
        rec.require_eq(lhs, rhs, "f#" + std::to_string(i) + " e#" + std::to_string(j) + " g'#" +
                                     std::to_string(k));
      }

  return report;
}

}  // namespace lameps
