#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lameps/axioms.hpp"
#include "lameps/erasure.hpp"
#include "lameps/json_ast.hpp"
#include "lameps/model.hpp"
#include "lameps/testkit.hpp"

using nlohmann::json;
using namespace lameps;

namespace {

constexpr int kOk = 0;        // success
constexpr int kNegative = 1;  // semantic negative: inequivalent, ill-typed, out of fuel
constexpr int kUsage = 2;     // usage, parse, or input error

struct Output {
  bool json_mode = false;
  json envelope;

  explicit Output(const std::string& command) { envelope["command"] = command; }

  void diagnostic(const std::string& msg) {
    envelope["diagnostics"].push_back(msg);
    if (!json_mode) std::cerr << msg << "\n";
  }

  void text(const std::string& line) {
    if (!json_mode) std::cout << line << "\n";
  }

  int finish(int code) {
    if (json_mode) {
      if (!envelope.contains("diagnostics")) envelope["diagnostics"] = json::array();
      envelope["exit"] = code;
      std::cout << envelope.dump(2) << "\n";
    }
    return code;
  }
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TermPtr load_term(const std::string& input, bool expr_mode) {
  return parse(expr_mode ? input : slurp(input));
}

std::string canon_string(const TermPtr& t) {
  return print(embed(perm_normalize(canonicalize(t))));
}

// "z=1,f={0,1,...}" — group values as residues, tables as outputs listed in
// domain-rank order.
SemValuePtr parse_value(const std::string& text, size_t& pos, const SemTypePtr& ty) {
  while (pos < text.size() && std::isspace((unsigned char)text[pos])) pos++;
  if (pos < text.size() && text[pos] == '{') {
    if (ty->is_group()) throw std::runtime_error("table literal given for a group-typed variable");
    pos++;
    auto v = std::make_shared<SemValue>();
    v->type = ty;
    for (size_t i = 0; i < ty->dom->card; i++) {
      if (i) {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) pos++;
        if (pos >= text.size() || text[pos] != ',')
          throw std::runtime_error("table literal: expected ','");
        pos++;
      }
      v->table.push_back(parse_value(text, pos, ty->cod));
    }
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) pos++;
    if (pos >= text.size() || text[pos] != '}')
      throw std::runtime_error("table literal: expected '}'");
    pos++;
    return v;
  }
  if (!ty->is_group()) throw std::runtime_error("expected a table literal for a function type");
  size_t start = pos;
  while (pos < text.size() && std::isdigit((unsigned char)text[pos])) pos++;
  if (start == pos) throw std::runtime_error("expected an integer value");
  long n = std::stol(text.substr(start, pos - start));
  return value_at(ty, (size_t)(n % ty->modulus));
}

Env parse_env(const std::string& text, const TypingContext& ctx, const ModelConfig& cfg) {
  std::map<std::string, std::string> raw;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eq = text.find('=', pos);
    if (eq == std::string::npos) throw std::runtime_error("environment entry missing '='");
    std::string name = text.substr(pos, eq - pos);
    while (!name.empty() && std::isspace((unsigned char)name.front())) name.erase(name.begin());
    while (!name.empty() && std::isspace((unsigned char)name.back())) name.pop_back();
    size_t depth = 0, end = eq + 1;
    for (; end < text.size(); end++) {
      if (text[end] == '{') depth++;
      if (text[end] == '}') depth--;
      if (text[end] == ',' && depth == 0) break;
    }
    raw[name] = text.substr(eq + 1, end - eq - 1);
    pos = end == text.size() ? end : end + 1;
  }
  Env env;
  for (const auto& [name, ty] : ctx) {
    auto it = raw.find(name);
    if (it == raw.end()) throw std::runtime_error("no value for context variable '" + name + "'");
    size_t p = 0;
    env.push_back(parse_value(it->second, p, denote_type(ty, cfg)));
  }
  return env;
}

ModelConfig parse_model(const std::string& text, size_t size_limit) {
  ModelConfig cfg;
  cfg.size_limit = size_limit;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string entry =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    size_t eq = entry.find('=');
    if (eq == std::string::npos) throw std::runtime_error("model entry missing '=': " + entry);
    std::string name = entry.substr(0, eq);
    std::string group = entry.substr(eq + 1);
    if (group.size() < 2 || (group[0] != 'Z' && group[0] != 'z'))
      throw std::runtime_error("model groups are cyclic: expected Z<n>, got " + group);
    cfg.base_assignment[name] = std::stoi(group.substr(1));
    pos = comma == std::string::npos ? text.size() : comma + 1;
  }
  return cfg;
}

int parse_modulus(const std::string& group) {
  if (group.size() < 2 || (group[0] != 'Z' && group[0] != 'z'))
    throw std::runtime_error("expected Z<n>, got " + group);
  return std::stoi(group.substr(1));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"interpreter and verification toolkit for the difference lambda-calculus"};
  cli.require_subcommand(1);
  bool json_mode = false;
  cli.add_flag("--json", json_mode, "emit a single JSON object instead of text");

  std::string input = "-", second;
  bool expr_mode = false;
  unsigned fuel = 10000;
  std::string type_text, ctx_text, env_text, model_text = "a=Z2", group_text = "Z2";
  bool raw_typing = false;
  size_t budget = 4096, size_limit = 1u << 16;
  uint64_t seed = 1;
  std::string suite;
  int count = 100, size = 12;

  auto add_expr = [&](CLI::App* cmd) {
    cmd->add_flag("-e,--expr", expr_mode, "treat inputs as literal term text, not file paths");
  };

  CLI::App* cmd_parse = cli.add_subcommand("parse", "parse a term and print it back");
  cmd_parse->add_option("input", input, "file path, - for stdin, or literal with -e");
  add_expr(cmd_parse);

  CLI::App* cmd_canon = cli.add_subcommand("canon", "print the normalized canonical form");
  cmd_canon->add_option("input", input);
  add_expr(cmd_canon);

  CLI::App* cmd_equiv = cli.add_subcommand("equiv", "decide differential equivalence");
  cmd_equiv->add_option("left", input)->required();
  cmd_equiv->add_option("right", second)->required();
  add_expr(cmd_equiv);

  CLI::App* cmd_reduce = cli.add_subcommand("reduce", "list all one-step reducts");
  cmd_reduce->add_option("input", input);
  add_expr(cmd_reduce);

  CLI::App* cmd_norm = cli.add_subcommand("normalize", "reduce to normal form");
  cmd_norm->add_option("input", input);
  cmd_norm->add_option("--fuel", fuel, "iteration bound");
  add_expr(cmd_norm);

  CLI::App* cmd_type = cli.add_subcommand("typecheck", "check a term against a type");
  cmd_type->add_option("input", input);
  cmd_type->add_option("--type", type_text, "goal type, e.g. a or a->b")->required();
  cmd_type->add_option("--ctx", ctx_text, "context, e.g. x:a,y:a->b");
  cmd_type->add_flag("--raw", raw_typing, "check the raw term instead of its canonical form");
  add_expr(cmd_type);

  CLI::App* cmd_eval = cli.add_subcommand("eval", "evaluate in the finite group model");
  cmd_eval->add_option("input", input);
  cmd_eval->add_option("--model", model_text, "base carriers, e.g. a=Z3,b=Z2");
  cmd_eval->add_option("--ctx", ctx_text);
  cmd_eval->add_option("--env", env_text, "values, e.g. z=1,f={0,1}");
  cmd_eval->add_option("--type", type_text)->required();
  cmd_eval->add_option("--size-limit", size_limit);
  add_expr(cmd_eval);

  CLI::App* cmd_erase = cli.add_subcommand("erase", "print the eps-erasure");
  cmd_erase->add_option("input", input);
  add_expr(cmd_erase);

  CLI::App* cmd_axioms = cli.add_subcommand("axioms", "run the model axiom reports");
  cmd_axioms->add_option("--model", group_text, "base cyclic group, e.g. Z2 or Z3");
  cmd_axioms->add_option("--budget", budget, "enumeration budget before sampling");
  cmd_axioms->add_option("--seed", seed);

  CLI::App* cmd_fuzz = cli.add_subcommand("fuzz", "run a seeded property suite");
  cmd_fuzz->add_option("--suite", suite, "one of: canonicity taylor regularity confluence typing soundness erasure")
      ->required();
  cmd_fuzz->add_option("--count", count);
  cmd_fuzz->add_option("--seed", seed);
  cmd_fuzz->add_option("--size", size);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = cli.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  CLI::App* active = cli.get_subcommands().front();
  Output out(active->get_name());
  out.json_mode = json_mode;

  try {
    if (active == cmd_parse) {
      TermPtr t = load_term(input, expr_mode);
      out.envelope["result"] = {{"term", print(t)}, {"ast", term_to_json(t)}};
      out.text(print(t));
      return out.finish(kOk);
    }
    if (active == cmd_canon) {
      TermPtr t = load_term(input, expr_mode);
      std::string c = canon_string(t);
      out.envelope["result"] = {{"term", c}};
      out.text(c);
      return out.finish(kOk);
    }
    if (active == cmd_equiv) {
      TermPtr lhs = load_term(input, expr_mode);
      TermPtr rhs = load_term(second, expr_mode);
      bool eq = diff_eq(lhs, rhs);
      out.envelope["result"] = {{"equivalent", eq},
                                {"left_canonical", canon_string(lhs)},
                                {"right_canonical", canon_string(rhs)}};
      out.text(eq ? "equivalent" : "not equivalent");
      return out.finish(eq ? kOk : kNegative);
    }
    if (active == cmd_reduce) {
      TermPtr t = load_term(input, expr_mode);
      StepResult r = step(t);
      json list = json::array();
      for (const Redex& rd : r.successors) {
        json item = {{"kind", rd.kind == RedexKind::Beta ? "beta" : "diff"},
                     {"path", rd.path},
                     {"term", print(rd.result)}};
        list.push_back(item);
        std::string pathstr = "[";
        for (size_t i = 0; i < rd.path.size(); i++)
          pathstr += (i ? "," : "") + std::to_string(rd.path[i]);
        pathstr += "]";
        out.text((rd.kind == RedexKind::Beta ? std::string("beta ") : std::string("diff ")) +
                 pathstr + "  " + print(rd.result));
      }
      if (r.successors.empty()) out.text("normal form");
      out.envelope["result"] = {{"successors", list}};
      return out.finish(kOk);
    }
    if (active == cmd_norm) {
      TermPtr t = load_term(input, expr_mode);
      NormalizeResult r = normalize(t, fuel);
      if (r.fuel_exhausted) {
        out.envelope["result"] = {{"fuel_exhausted", true}, {"steps", r.steps}};
        out.diagnostic("fuel exhausted after " + std::to_string(r.steps) + " steps");
        return out.finish(kNegative);
      }
      std::string nf = print(embed(r.normal_form));
      out.envelope["result"] = {{"fuel_exhausted", false}, {"steps", r.steps}, {"term", nf}};
      out.text(nf);
      out.text("steps: " + std::to_string(r.steps));
      return out.finish(kOk);
    }
    if (active == cmd_type) {
      TermPtr t = load_term(input, expr_mode);
      TypePtr ty = parse_type(type_text);
      TypingContext ctx = ctx_text.empty() ? TypingContext{} : parse_context(ctx_text);
      std::string diag;
      bool ok = raw_typing ? check(ctx, t, ty, &diag) : check_wf(ctx, t, ty, &diag);
      out.envelope["result"] = {{"well_typed", ok}};
      if (!ok && !diag.empty()) out.diagnostic(diag);
      out.text(ok ? "well-typed" : "ill-typed");
      return out.finish(ok ? kOk : kNegative);
    }
    if (active == cmd_eval) {
      TermPtr t = load_term(input, expr_mode);
      ModelConfig cfg = parse_model(model_text, size_limit);
      TypePtr ty = parse_type(type_text);
      TypingContext ctx = ctx_text.empty() ? TypingContext{} : parse_context(ctx_text);
      if (!check(ctx, t, ty)) {
        out.diagnostic("term does not check against " + type_text);
        return out.finish(kNegative);
      }
      Env env = env_text.empty() ? Env{} : parse_env(env_text, ctx, cfg);
      if (env.empty() && !ctx.empty()) {
        out.diagnostic("--env required for a non-empty context");
        return out.finish(kUsage);
      }
      SemValuePtr v = eval(ctx, env, t, ty, cfg);
      out.envelope["result"] = {{"value", print_value(v)}};
      out.text(print_value(v));
      return out.finish(kOk);
    }
    if (active == cmd_erase) {
      TermPtr t = load_term(input, expr_mode);
      TermPtr e = erase(t);
      out.envelope["result"] = {{"term", print(e)}};
      out.text(print(e));
      return out.finish(kOk);
    }
    if (active == cmd_axioms) {
      AxiomConfig cfg;
      cfg.modulus = parse_modulus(group_text);
      cfg.budget = budget;
      cfg.seed = seed;
      AxiomReport cdc = check_cdc_axioms(cfg);
      AxiomReport lam = check_lambda_axioms(cfg);
      out.text("difference combinator laws over Z" + std::to_string(cfg.modulus) + ":");
      out.text(cdc.to_string());
      out.text("closed-structure laws over Z" + std::to_string(cfg.modulus) + ":");
      out.text(lam.to_string());
      json jc = json::array(), jl = json::array();
      for (const AxiomCheck& c : cdc.checks)
        jc.push_back({{"name", c.name}, {"cases", c.cases}, {"violations", c.violations}});
      for (const AxiomCheck& c : lam.checks)
        jl.push_back({{"name", c.name}, {"cases", c.cases}, {"violations", c.violations}});
      out.envelope["result"] = {{"difference_laws", jc},
                                {"closed_structure_laws", jl},
                                {"ok", cdc.ok() && lam.ok()}};
      return out.finish(cdc.ok() && lam.ok() ? kOk : kNegative);
    }
    if (active == cmd_fuzz) {
      bool known = false;
      for (const std::string& s : suite_names()) known |= s == suite;
      if (!known) {
        out.diagnostic("unknown suite '" + suite + "'");
        return out.finish(kUsage);
      }
      GenConfig cfg;
      cfg.seed = seed;
      cfg.max_size = size;
      SuiteResult r = run_suite(suite, cfg, count);
      out.envelope["result"] = {
          {"suite", r.suite}, {"total", r.total}, {"failures", r.failures}, {"notes", r.notes}};
      out.text(r.suite + ": " + std::to_string(r.total - r.failures) + "/" +
               std::to_string(r.total) + " passed");
      for (const std::string& n : r.notes) out.diagnostic(n);
      return out.finish(r.ok() ? kOk : kNegative);
    }
  } catch (const parse_error& e) {
    out.diagnostic(e.what());
    return out.finish(kUsage);
  } catch (const type_parse_error& e) {
    out.diagnostic(e.what());
    return out.finish(kUsage);
  } catch (const dsubst_precondition_error& e) {
    out.diagnostic(e.what());
    return out.finish(kUsage);
  } catch (const model_error& e) {
    out.diagnostic(e.what());
    return out.finish(kUsage);
  } catch (const std::exception& e) {
    out.diagnostic(e.what());
    return out.finish(kUsage);
  }
  return out.finish(kUsage);
}
