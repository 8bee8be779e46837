#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "taxicab/errors.hpp"
#include "taxicab/exprparse.hpp"

using json = nlohmann::json;
using namespace taxicab;

namespace {

std::string binary_path() {
  if (const char* env = std::getenv("TAXICAB_BIN")) return env;
  return "./tools/taxicab";  // ctest runs from the build directory
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::vector<std::string> lines() const {
    std::vector<std::string> ls;
    std::string cur;
    for (char c : out) {
      if (c == '\n') {
        ls.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) ls.push_back(cur);
    return ls;
  }
  // everything after the manifest line
  std::string body() const {
    auto ls = lines();
    std::string b;
    for (std::size_t i = 1; i < ls.size(); ++i) b += ls[i] + "\n";
    return b;
  }
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("search emits a manifest header and the 1729 record") {
  RunResult r = run("search --sequence naturals --exponent 3 --max-first 12 --max-second 12");
  CHECK(r.exit_code == 0);
  auto ls = r.lines();
  REQUIRE(ls.size() == 3);
  json manifest = json::parse(ls[0]);
  CHECK(manifest["manifest"]["subcommand"] == "search");
  CHECK(manifest["manifest"]["bits"] == 256);
  CHECK(manifest["manifest"]["version"] == "0.1.0");
  json rec = json::parse(ls[1]);
  CHECK(rec["value"] == "1729");
  CHECK(rec["pair_a"] == json::array({10, 9}));
  CHECK(rec["pair_b"] == json::array({12, 1}));
  CHECK(rec["trivial"] == false);
  CHECK(json::parse(ls[2])["summary"]["records"] == 1);
}

TEST_CASE("tsv format") {
  RunResult r = run(
      "search --sequence naturals --exponent 3 --max-first 12 --max-second 12 --format tsv");
  CHECK(r.exit_code == 0);
  CHECK(r.body() == "1729\t10\t9\t12\t1\tfalse\n");
}

TEST_CASE("identical invocations produce byte-identical bodies") {
  std::string args = "search --sequence fib --max-first 30 --max-second 40";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.body() == b.body());
  RunResult c = run(args + " --workers 3");
  CHECK(a.body() == c.body());
}

TEST_CASE("cf of the golden ratio lists all-ones quotients") {
  RunResult r = run("cf --constant alpha --max-q 100");
  CHECK(r.exit_code == 0);
  auto ls = r.lines();
  REQUIRE(ls.size() >= 3);
  for (std::size_t i = 1; i + 1 < ls.size(); ++i) {
    json line = json::parse(ls[i]);
    CHECK(line["a"] == "1");
  }
  // largest listed denominator stays within the bound
  json last = json::parse(ls[ls.size() - 2]);
  CHECK(std::stol(last["q"].get<std::string>()) <= 100);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("search --sequence fib --max-first 5 --frobnicate").exit_code == 2);
  CHECK(run("search --sequence marsian --max-first 5").exit_code == 2);
  CHECK(run("cf --constant alpha").exit_code == 2);           // no stop rule
  CHECK(run("reduce --a 13 --cap 100").exit_code == 2);       // neither mode
  CHECK(run("prove klingon").exit_code == 2);
}

TEST_CASE("computation failures exit with 1") {
  // box override below the certified bound is a stage error
  CHECK(run("prove fibonacci --max-second 1").exit_code == 1);
  CHECK(run("prove fibonacci --max-first 10").exit_code == 1);
}

TEST_CASE("prove fibonacci reports the bound chain and the trivial family") {
  RunResult r = run("prove fibonacci");
  CHECK(r.exit_code == 0);
  auto ls = r.lines();
  REQUIRE(ls.size() == 6);
  json pipeline = json::parse(ls[1]);
  CHECK(pipeline["stage"] == "pipeline");
  CHECK(pipeline["m_bound"].get<std::string>().substr(0, 3) == "153");  // ~1.54e28
  json red_m = json::parse(ls[2]);
  CHECK(red_m["bound"] == "171");
  json red_k = json::parse(ls[3]);
  CHECK(red_k["bound"] == "162");
  json srch = json::parse(ls[4]);
  CHECK(srch["max_first"] == 162);
  CHECK(srch["max_second"] == 171);
  CHECK(srch["records"].size() == 3);
  json verdict = json::parse(ls[5]);
  CHECK(verdict["verdict"]["ok"] == true);
}

TEST_CASE("prove lucas finds nothing and succeeds") {
  RunResult r = run("prove lucas");
  CHECK(r.exit_code == 0);
  auto ls = r.lines();
  json verdict = json::parse(ls.back());
  CHECK(verdict["verdict"]["ok"] == true);
  CHECK(verdict["verdict"]["records"] == 0);
}

TEST_CASE("reduce fixture mode reproduces the published bounds") {
  RunResult r = run("reduce --fixture-q 10077880367083566939117366710009822 "
                    "--fixture-eps 0.156 --a 13 --cap 6.17e28");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.lines()[1])["bound"] == "171");
  RunResult k = run("reduce --fixture-q 4871129611675295815188675787912 "
                    "--fixture-eps 0.041 --a 75 --cap 6.17e28");
  CHECK(json::parse(k.lines()[1])["bound"] == "162");
}

TEST_CASE("reduce live mode works from expressions") {
  RunResult r = run("reduce --tau-expr sqrt5 --mu-expr log5 --a 13 --cap 1000");
  CHECK(r.exit_code == 0);
  json line = json::parse(r.lines()[1]);
  CHECK(line["mode"] == "live");
  CHECK(std::stol(line["q_used"].get<std::string>()) > 6000);
}

TEST_CASE("solve-bound pinned examples") {
  CHECK(json::parse(run("solve-bound --coeff 10 --scale 1 --power 1").lines()[1])["bound"] ==
        "49");
  CHECK(json::parse(run("solve-bound --coeff 100 --scale 1 --power 0").lines()[1])["bound"] ==
        "100");
}

TEST_CASE("verify subcommands succeed") {
  RunResult a1 = run("verify --check a1 --n-max 300");
  CHECK(a1.exit_code == 0);
  CHECK(json::parse(a1.lines()[1])["ok"] == true);
  RunResult a6 = run("verify --check a6 --samples 2000");
  CHECK(a6.exit_code == 0);
  CHECK(json::parse(a6.lines()[1])["ok"] == true);
}

TEST_CASE("--bits flag and TAXICAB_BITS env are honored") {
  RunResult r = run("--bits 128 cf --constant sqrt5 --count 3");
  CHECK(json::parse(r.lines()[0])["manifest"]["bits"] == 128);
  RunResult e = run("cf --constant sqrt5 --count 3");  // no env in this harness: default
  CHECK(json::parse(e.lines()[0])["manifest"]["bits"] == 256);
}

// ------------------------------------------------------------ expressions

TEST_CASE("expression evaluator") {
  Ball v = eval_expression("log(alpha) + log_abs_beta", 256);
  CHECK(v.contains(Dyadic()));
  CHECK(v.rad() < Dyadic(BigInt(1), -200));

  Ball w = eval_expression("(1 + sqrt5) / 2", 256);
  CHECK(w.overlaps(constant(ConstantId::Alpha, 256)));

  Ball x = eval_expression("alpha^2 - alpha - 1", 256);
  CHECK(x.contains(Dyadic()));

  Ball y = eval_expression("exp(0.5) * exp(-0.5)", 128);
  CHECK(y.contains(Dyadic(1)));

  Ball z = eval_expression("3 * log5 / 2", 256);
  CHECK(z.overlaps(constant(ConstantId::Log5Sqrt5, 256)));

  CHECK(eval_expression("2^-3", 64).contains(Dyadic(BigInt(1), -3)));

  CHECK_THROWS_AS(eval_expression("bogus_name", 128), DomainError);
  CHECK_THROWS_AS(eval_expression("1 +", 128), DomainError);
  CHECK_THROWS_AS(eval_expression("log(0)", 128), DomainError);
  CHECK_THROWS_AS(eval_expression("sqrt(1 - 2)", 128), DomainError);
}
