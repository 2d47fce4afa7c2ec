#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

#include "lameps/canonical.hpp"

using namespace lameps;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd;
  if (!stdin_data.empty()) cmd += "printf '%s' \"" + stdin_data + "\" | ";
  cmd += std::string(LAMEPS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli: canon prints a reparseable equivalent form") {
  RunResult r = run_cli("canon -e \"D(u) * (x + y + eps z)\"");
  CHECK(r.exit_code == 0);
  std::string line = r.output.substr(0, r.output.find('\n'));
  CHECK(diff_eq(parse(line), parse("D(u) * (x + y + eps z)")));
}

TEST_CASE("cli: equiv exit codes") {
  CHECK(run_cli("equiv -e \"s + t\" \"t + s\"").exit_code == 0);
  CHECK(run_cli("equiv -e \"x\" \"y\"").exit_code == 1);
}

TEST_CASE("cli: parse errors exit 2 with a position") {
  RunResult r = run_cli("parse -e \"(\"");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("parse error") != std::string::npos);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("fuzz --suite nonexistent").exit_code == 2);
  CHECK(run_cli("canon --bogus-flag -e \"x\"").exit_code == 2);
}

TEST_CASE("cli: stdin input via -") {
  RunResult r = run_cli("canon -", "x + 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.substr(0, 1) == "x");
}

TEST_CASE("cli: typecheck") {
  CHECK(run_cli("typecheck -e --type a \"x\"").exit_code == 1);
  CHECK(run_cli("typecheck -e --type \"a -> a\" \"\\x:a. x\"").exit_code == 0);
  CHECK(run_cli("typecheck -e --type a --ctx \"y:a\" \"0 (y y)\"").exit_code == 0);
  CHECK(run_cli("typecheck -e --raw --type a --ctx \"y:a\" \"0 (y y)\"").exit_code == 1);
}

TEST_CASE("cli: normalize distinguishes fuel exhaustion") {
  RunResult ok = run_cli("normalize -e \"(\\x. x) 0\"");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("steps: 1") != std::string::npos);
  RunResult omega = run_cli("normalize --fuel 20 -e \"(\\x. x x) (\\x. x x)\"");
  CHECK(omega.exit_code == 1);
}

TEST_CASE("cli: eval prints group elements and tables") {
  RunResult r = run_cli(
      "eval -e --model a=Z3 --ctx \"z:a,w:a\" --env \"z=1,w=1\" --type a "
      "\"(D(\\x:a. x + x) * w) z\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output.substr(0, 1) == "2");
  RunResult table = run_cli("eval -e --model a=Z2 --type \"a -> a\" \"\\x:a. x\"");
  CHECK(table.exit_code == 0);
  CHECK(table.output.find("{0↦0, 1↦1}") != std::string::npos);
}

TEST_CASE("cli: erase and reduce") {
  RunResult e = run_cli("erase -e \"x + eps y\"");
  CHECK(e.exit_code == 0);
  CHECK(e.output.substr(0, e.output.find('\n')) == "x + 0");
  RunResult red = run_cli("reduce -e \"(\\x. x) ((\\y. y) z)\"");
  CHECK(red.exit_code == 0);
  CHECK(red.output.find("beta") != std::string::npos);
}

TEST_CASE("cli: json envelope is stable and well-formed") {
  RunResult r = run_cli("--json equiv -e \"s + t\" \"t + s\"");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["command"] == "equiv");
  CHECK(j["result"]["equivalent"] == true);
  CHECK(j.contains("diagnostics"));

  RunResult p = run_cli("--json parse -e \"D(u) * 0\"");
  nlohmann::json pj = nlohmann::json::parse(p.output);
  CHECK(pj["result"]["ast"]["tag"] == "dapp");

  // same seed and flags give byte-identical output
  RunResult f1 = run_cli("--json fuzz --suite taylor --count 5 --seed 3 --size 8");
  RunResult f2 = run_cli("--json fuzz --suite taylor --count 5 --seed 3 --size 8");
  CHECK(f1.exit_code == 0);
  CHECK(f1.output == f2.output);
}

TEST_CASE("cli: axioms report") {
  RunResult r = run_cli("axioms --model Z2 --budget 64");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("CdC0") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("cli: fuzz runs every advertised suite") {
  for (const char* suite :
       {"canonicity", "taylor", "regularity", "confluence", "typing", "soundness", "erasure"}) {
    RunResult r = run_cli(std::string("fuzz --suite ") + suite + " --count 5 --seed 11 --size 8");
    CAPTURE(suite);
    CAPTURE(r.output);
    CHECK(r.exit_code == 0);
  }
}
