#include <cctype>
#include <vector>

#include "lameps/syntax.hpp"

namespace lameps {

namespace {

// Grammar levels: 0 = sum position, 1 = application element, 2 = prefix
// argument. A lambda is an atom but its body extends to the end of the
// enclosing unit, so it prints bare only in tail position.
int term_level(const TermPtr& t) {
  switch (t->tag) {
    case TermTag::Sum: return 0;
    case TermTag::App: return 1;
    case TermTag::Eps:
    case TermTag::DApp: return 2;
    default: return 3;
  }
}

struct Printer {
  std::string out;
  std::vector<std::string> scope;  // display names, innermost last

  static bool valid_ident(const std::string& s) {
    if (s.empty() || s == "eps" || s == "D") return false;
    if (!std::isalpha((unsigned char)s[0]) && s[0] != '_') return false;
    for (char c : s)
      if (!std::isalnum((unsigned char)c) && c != '_' && c != '\'') return false;
    return true;
  }

  std::string pick_binder_name(const std::string& hint, const TermPtr& body) {
    std::string candidate = valid_ident(hint) ? hint : "x";
    VarSet forbidden = free_vars(body);
    for (const auto& n : scope) forbidden.insert(n);
    while (forbidden.count(candidate)) candidate += '\'';
    return candidate;
  }

  void emit(const TermPtr& t, int level, bool tail) {
    bool parens = term_level(t) < level || (t->tag == TermTag::Lam && !tail);
    if (parens) out += '(';
    switch (t->tag) {
      case TermTag::Zero:
        out += '0';
        break;
      case TermTag::FreeVar:
        out += t->name;
        break;
      case TermTag::BoundVar:
        out += scope[scope.size() - 1 - (size_t)t->index];
        break;
      case TermTag::Lam: {
        std::string name = pick_binder_name(t->name, t->a);
        out += '\\';
        out += name;
        if (t->annotation) {
          out += ':';
          out += print_type(t->annotation);
        }
        out += ". ";
        scope.push_back(name);
        emit(t->a, 0, true);
        scope.pop_back();
        break;
      }
      case TermTag::Eps:
        out += "eps ";
        emit(t->a, 2, parens ? true : tail);
        break;
      case TermTag::DApp:
        out += "D(";
        emit(t->a, 0, true);
        out += ") * ";
        emit(t->b, 2, parens ? true : tail);
        break;
      case TermTag::App:
        emit(t->a, 1, false);
        out += ' ';
        emit(t->b, 2, parens ? true : tail);
        break;
      case TermTag::Sum:
        emit(t->a, 0, false);
        out += " + ";
        emit(t->b, 1, parens ? true : tail);
        break;
    }
    if (parens) out += ')';
  }
};

}  // namespace

std::string print(const TermPtr& t) {
  Printer p;
  p.emit(t, 0, true);
  return p.out;
}

}  // namespace lameps
