#include "lameps/erasure.hpp"

#include <stdexcept>

#include "lameps/canonical.hpp"
#include "lameps/reduction.hpp"

namespace lameps {

TermPtr erase(const TermPtr& t) {
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::FreeVar:
    case TermTag::BoundVar:
      return t;
    case TermTag::Eps:
      return zero_term();
    case TermTag::Lam:
      return lam(t->name, t->annotation, erase(t->a));
    case TermTag::App:
      return app(erase(t->a), erase(t->b));
    case TermTag::DApp:
      return dapp(erase(t->a), erase(t->b));
    case TermTag::Sum:
      return sum(erase(t->a), erase(t->b));
  }
  return t;
}

bool eps_free(const TermPtr& t) {
  switch (t->tag) {
    case TermTag::Zero:
    case TermTag::FreeVar:
    case TermTag::BoundVar:
      return true;
    case TermTag::Eps:
      return false;
    case TermTag::Lam:
      return eps_free(t->a);
    default:
      return eps_free(t->a) && eps_free(t->b);
  }
}

SimulateResult erase_simulates(const TermPtr& s, const TermPtr& s_next, unsigned bound) {
  bool is_step = false;
  for (const Redex& r : step(s).successors)
    if (alpha_eq(r.result, s_next)) {
      is_step = true;
      break;
    }
  if (!is_step)
    throw std::invalid_argument("erase_simulates: second term is not a one-step reduct");

  TermPtr target = erase(s_next);
  std::vector<TermPtr> frontier = {erase(s)};
  std::vector<TermPtr> visited;
  auto seen = [&](const TermPtr& t) {
    for (const TermPtr& v : visited)
      if (alpha_eq(v, t)) return true;
    return false;
  };
  for (unsigned depth = 0; depth <= bound; depth++) {
    std::vector<TermPtr> next;
    for (const TermPtr& t : frontier) {
      if (seen(t)) continue;
      visited.push_back(t);
      if (diff_eq(t, target)) return SimulateResult::Confirmed;
      // the eps-free fragment reduces by step-then-erase: a diff redex grows
      // eps corrections that the fragment's own substitution lacks
      for (const Redex& r : step(t).successors) {
        TermPtr e = erase(r.result);
        if (!seen(e)) next.push_back(e);
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) return SimulateResult::Refuted;
  }
  return SimulateResult::Inconclusive;
}

}  // namespace lameps
