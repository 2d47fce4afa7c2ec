#include "lameps/json_ast.hpp"

namespace lameps {

namespace {

nlohmann::json to_json(const TermPtr& t, std::vector<std::string>& scope) {
  using nlohmann::json;
  switch (t->tag) {
    case TermTag::Zero:
      return json{{"tag", "zero"}};
    case TermTag::FreeVar:
      return json{{"tag", "var"}, {"name", t->name}};
    case TermTag::BoundVar:
      return json{{"tag", "var"}, {"name", scope[scope.size() - 1 - (size_t)t->index]}};
    case TermTag::Lam: {
      std::string name = t->name.empty() ? "x" : t->name;
      VarSet forbidden = free_vars(t->a);
      for (const auto& n : scope) forbidden.insert(n);
      while (name == "eps" || name == "D" || forbidden.count(name)) name += '\'';
      json node{{"tag", "lam"}, {"binder", name}};
      if (t->annotation) node["annotation"] = print_type(t->annotation);
      scope.push_back(name);
      node["body"] = to_json(t->a, scope);
      scope.pop_back();
      return node;
    }
    case TermTag::App:
      return json{{"tag", "app"}, {"fun", to_json(t->a, scope)}, {"arg", to_json(t->b, scope)}};
    case TermTag::DApp:
      return json{{"tag", "dapp"}, {"fun", to_json(t->a, scope)}, {"arg", to_json(t->b, scope)}};
    case TermTag::Eps:
      return json{{"tag", "eps"}, {"body", to_json(t->a, scope)}};
    case TermTag::Sum:
      return json{{"tag", "sum"}, {"left", to_json(t->a, scope)}, {"right", to_json(t->b, scope)}};
  }
  return nullptr;
}

}  // namespace

nlohmann::json term_to_json(const TermPtr& t) {
  std::vector<std::string> scope;
  return to_json(t, scope);
}

}  // namespace lameps
