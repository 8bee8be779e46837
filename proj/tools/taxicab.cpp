// taxicab -- command-line toolkit for two-way power-sum collisions over
// Fibonacci, Lucas and natural-number sequences: exact search, certified
// Matveev lower bounds, Dujella-Petho reduction, and the assembled
// "prove" pipeline.

#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taxicab/ballreal.hpp"
#include "taxicab/collision.hpp"
#include "taxicab/contfrac.hpp"
#include "taxicab/errors.hpp"
#include "taxicab/exprparse.hpp"
#include "taxicab/linforms.hpp"
#include "taxicab/recurrence.hpp"
#include "taxicab/version.hpp"

using json = nlohmann::json;
using namespace taxicab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

std::size_t default_bits() {
  if (const char* env = std::getenv("TAXICAB_BITS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 64) return static_cast<std::size_t>(v);
  }
  return 256;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json ball_json(const Ball& b, std::size_t digits = 20) {
  return json{{"mid", b.to_decimal(digits)}, {"rad", b.rad().to_decimal(6)}};
}

json record_json(const CollisionRecord& r) {
  return json{{"value", to_decimal(r.value)},
              {"pair_a", {r.pair_a.hi, r.pair_a.lo}},
              {"pair_b", {r.pair_b.hi, r.pair_b.lo}},
              {"trivial", r.trivial}};
}

void print_manifest(const CLI::App& app, const std::string& subcommand, std::size_t bits) {
  json flags = json::object();
  for (const CLI::Option* opt : app.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string joined;
    for (const auto& r : opt->results()) {
      if (!joined.empty()) joined += ",";
      joined += r;
    }
    flags[opt->get_name()] = joined;
  }
  json manifest{{"manifest",
                 {{"subcommand", subcommand},
                  {"bits", bits},
                  {"flags", flags},
                  {"timestamp", utc_timestamp()},
                  {"version", kVersion}}}};
  std::cout << manifest.dump() << "\n";
}

SequenceKind kind_from_flag(const std::string& s) {
  if (s == "fib") return SequenceKind::Fibonacci;
  if (s == "lucas") return SequenceKind::Lucas;
  if (s == "naturals") return SequenceKind::NaturalNumbers;
  throw CLI::ValidationError("--sequence", "must be fib|lucas|naturals");
}

// ---------------------------------------------------------------- search

int run_search(SequenceKind kind, unsigned exponent, std::uint64_t max_first,
               std::uint64_t max_second, std::uint64_t min_index, unsigned workers,
               const std::string& format) {
  SearchConfig config{kind, exponent, max_first, max_second, min_index, workers};
  std::vector<CollisionRecord> records = search(config);
  for (const auto& r : records) {
    if (format == "tsv") {
      std::cout << to_decimal(r.value) << '\t' << r.pair_a.hi << '\t' << r.pair_a.lo << '\t'
                << r.pair_b.hi << '\t' << r.pair_b.lo << '\t' << (r.trivial ? "true" : "false")
                << "\n";
    } else {
      std::cout << record_json(r).dump() << "\n";
    }
  }
  if (format != "tsv")
    std::cout << json{{"summary", {{"records", records.size()}}}}.dump() << "\n";
  return kExitOk;
}

// -------------------------------------------------------------------- cf

int run_cf(const std::string& constant_name_flag, const std::string& expr, std::size_t bits,
           const std::string& max_q_str, std::uint64_t count) {
  std::optional<BigInt> max_q;
  if (!max_q_str.empty()) max_q = parse_bigint(max_q_str);
  auto value_at = [&](std::size_t b) {
    return expr.empty() ? constant(constant_from_name(constant_name_flag), b)
                        : eval_expression(expr, b);
  };
  CFExpansion cf = with_precision_escalation(bits, [&](std::size_t b) {
    Ball x = value_at(b);
    return expand(x, [&](const BigInt& q, std::size_t j) {
      if (max_q) return q > *max_q;
      return j + 1 >= count;
    });
  });
  std::size_t terms = cf.size();
  if (max_q && terms > 0 && cf.convergents.back().second > *max_q && !cf.terminated_rational)
    --terms;  // drop the overshooting convergent
  for (std::size_t j = 0; j < terms; ++j) {
    std::cout << json{{"j", j},
                      {"a", to_decimal(cf.quotients[j])},
                      {"p", to_decimal(cf.convergents[j].first)},
                      {"q", to_decimal(cf.convergents[j].second)}}
                     .dump()
              << "\n";
  }
  std::cout << json{{"summary", {{"terms", terms}, {"rational", cf.terminated_rational}}}}.dump()
            << "\n";
  return kExitOk;
}

// --------------------------------------------------------------- matveev

int run_matveev(unsigned terms, unsigned degree, const std::vector<std::string>& a_exprs,
                const std::string& max_b_str, std::size_t bits) {
  MatveevInstance inst;
  inst.num_terms = terms;
  inst.degree = degree;
  for (const auto& e : a_exprs) inst.a_values.push_back(eval_expression(e, bits));
  inst.max_abs_b = parse_bigint(max_b_str);
  Ball c = matveev_coefficient(inst, bits);
  Ball lower = matveev_log_lower_bound(inst, bits);
  std::cout << json{{"c", ball_json(c)}, {"log_lower_bound", ball_json(lower)}}.dump() << "\n";
  return kExitOk;
}

// ----------------------------------------------------------- solve-bound

int run_solve_bound(const std::string& coeff_expr, const std::string& scale_expr, unsigned power,
                    std::size_t bits) {
  BigInt bound = with_precision_escalation(bits, [&](std::size_t b) {
    return solve_log_bound(eval_expression(coeff_expr, b), eval_expression(scale_expr, b), power,
                           b);
  });
  std::cout << json{{"bound", to_decimal(bound)}}.dump() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- reduce

ReductionOutcome reduce_with_escalation(std::size_t bits, const std::string& tau_expr,
                                        const std::string& mu_expr, const std::string& a_expr,
                                        const std::string& b_base_expr, const BigInt& cap,
                                        const std::string& fixture_q,
                                        const std::string& fixture_eps, unsigned max_attempts) {
  return with_precision_escalation(bits, [&](std::size_t b) {
    ReductionInstance inst;
    inst.a_coeff = eval_expression(a_expr, b);
    inst.b_base = eval_expression(b_base_expr, b);
    inst.cap = cap;
    inst.max_convergent_attempts = max_attempts;
    if (!fixture_q.empty()) {
      inst.tau = Ball::exact(Dyadic(1), b);  // unused in fixture mode
      inst.mu = inst.tau;
      inst.fixture = ReductionFixture{parse_bigint(fixture_q), Ball::from_decimal(fixture_eps, b)};
    } else {
      inst.tau = eval_expression(tau_expr, b);
      inst.mu = eval_expression(mu_expr, b);
    }
    return dujella_petho_reduce(inst);
  });
}

int run_reduce(std::size_t bits, const std::string& tau_expr, const std::string& mu_expr,
               const std::string& a_expr, const std::string& b_base_expr,
               const std::string& cap_str, const std::string& fixture_q,
               const std::string& fixture_eps, unsigned max_attempts) {
  ReductionOutcome out = reduce_with_escalation(bits, tau_expr, mu_expr, a_expr, b_base_expr,
                                                parse_bigint(cap_str), fixture_q, fixture_eps,
                                                max_attempts);
  std::cout << json{{"mode", fixture_q.empty() ? "live" : "fixture"},
                    {"q_used", to_decimal(out.q_used)},
                    {"epsilon", ball_json(out.epsilon)},
                    {"bound", to_decimal(out.bound)}}
                   .dump()
            << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& check, std::uint64_t n_max, std::uint64_t samples,
               std::uint64_t seed, std::size_t bits) {
  if (check == "a1") {
    FibBoundsReport rep = verify_fib_bounds(n_max, bits);
    std::cout << json{{"check", "a1"},
                      {"n_max", rep.n_max},
                      {"upper_checked", rep.upper_checked},
                      {"lower_checked", rep.lower_checked},
                      {"ok", true},
                      {"note", "lower bound starts at n=1; F_0 = 0 < alpha^-2"}}
                     .dump()
              << "\n";
    return kExitOk;
  }
  // a6: compare constraint_filter against a direct transcription on
  // random quadruples.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, 500);
  std::uint64_t disagreements = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::int64_t k = static_cast<std::int64_t>(dist(rng));
    std::int64_t l = static_cast<std::int64_t>(dist(rng));
    std::int64_t m = static_cast<std::int64_t>(dist(rng));
    std::int64_t n = static_cast<std::int64_t>(dist(rng));
    bool direct = k >= l && m >= n && m > k && l - 1 <= m && n - 1 <= k && m < 3 * k;
    bool lib = constraint_filter(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(l),
                                 static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n));
    if (direct != lib) ++disagreements;
  }
  std::cout << json{{"check", "a6"},
                    {"samples", samples},
                    {"disagreements", disagreements},
                    {"ok", disagreements == 0}}
                   .dump()
            << "\n";
  return disagreements == 0 ? kExitOk : kExitComputation;
}

// ----------------------------------------------------------------- prove

const char* kPaperQ53 = "10077880367083566939117366710009822";
const char* kPaperQ49 = "4871129611675295815188675787912";
const char* kPaperCap = "6.17e28";

int run_prove(const std::string& target, std::size_t bits, std::uint64_t max_first_override,
              std::uint64_t max_second_override, unsigned workers) {
  // Stage 1: Matveev coefficients and the absolute bound.
  PipelineBounds pb = pipeline_bounds(1, bits);
  std::cout << json{{"stage", "pipeline"},
                    {"c1_per_k", pb.c1_per_k.to_decimal(12)},
                    {"c2", pb.c2.to_decimal(12)},
                    {"m_coeff", pb.m_coeff.to_decimal(12)},
                    {"k_coeff", pb.k_coeff.to_decimal(12)},
                    {"m_bound", to_decimal(pb.m_bound)},
                    {"k_bound", to_decimal(pb.k_bound)}}
                   .dump()
            << "\n";

  // Stage 2: Dujella-Petho reduction with the published fixtures.
  ReductionOutcome red_m = reduce_with_escalation(bits, "", "", "13", "alpha",
                                                  parse_bigint(kPaperCap), kPaperQ53, "0.156", 30);
  ReductionOutcome red_k = reduce_with_escalation(bits, "", "", "75", "alpha",
                                                  parse_bigint(kPaperCap), kPaperQ49, "0.041", 30);
  std::cout << json{{"stage", "reduction"},
                    {"target", "m"},
                    {"q_used", to_decimal(red_m.q_used)},
                    {"epsilon", ball_json(red_m.epsilon)},
                    {"bound", to_decimal(red_m.bound)}}
                   .dump()
            << "\n";
  std::cout << json{{"stage", "reduction"},
                    {"target", "k"},
                    {"q_used", to_decimal(red_k.q_used)},
                    {"epsilon", ball_json(red_k.epsilon)},
                    {"bound", to_decimal(red_k.bound)}}
                   .dump()
            << "\n";

  // Stage 3: exhaustive collision search over the reduced box.
  std::uint64_t first = red_k.bound.get_ui();   // k <= 162
  std::uint64_t second = red_m.bound.get_ui();  // m <= 171
  if (max_first_override > 0) {
    if (max_first_override < first)
      throw Error("prove: --max-first override below the certified bound " + to_decimal(red_k.bound));
    first = max_first_override;
  }
  if (max_second_override > 0) {
    if (max_second_override < second)
      throw Error("prove: --max-second override below the certified bound " +
                  to_decimal(red_m.bound));
    second = max_second_override;
  }
  SequenceKind kind =
      (target == "fibonacci") ? SequenceKind::Fibonacci : SequenceKind::Lucas;
  SearchConfig config{kind, 3, first, second, 1, workers};
  std::vector<CollisionRecord> records = search(config);
  json recs = json::array();
  for (const auto& r : records) recs.push_back(record_json(r));
  std::cout << json{{"stage", "search"},
                    {"max_first", first},
                    {"max_second", second},
                    {"records", recs}}
                   .dump()
            << "\n";

  // Stage 4: verdict.
  bool ok = true;
  std::string reason;
  for (const auto& r : records) {
    if (!verify_record(r, kind, 3)) {
      ok = false;
      reason = "a record failed independent recheck";
    }
  }
  if (kind == SequenceKind::Lucas) {
    if (!records.empty()) {
      ok = false;
      reason = "expected an empty collision set";
    }
  } else {
    std::vector<CollisionRecord> expected;
    BigInt two(2);
    expected.push_back({two, {1, 1}, {2, 1}, true});
    expected.push_back({two, {1, 1}, {2, 2}, true});
    expected.push_back({two, {2, 1}, {2, 2}, true});
    if (records != expected) {
      ok = false;
      reason = "collision set differs from the trivial value-2 family";
    }
  }
  std::cout << json{{"verdict",
                     {{"target", target},
                      {"ok", ok},
                      {"records", records.size()},
                      {"reason", reason}}}}
                   .dump()
            << "\n";
  return ok ? kExitOk : kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-way power-sum collision toolkit over Fibonacci/Lucas/natural sequences"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::size_t bits = default_bits();
  app.add_option("--bits", bits, "working precision in bits (or env TAXICAB_BITS)")
      ->check(CLI::Range(std::size_t(64), kMaxPrecisionBits));

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());

  // search
  auto* search_cmd = app.add_subcommand("search", "exhaustive two-way power-sum collision search");
  std::string seq_flag;
  unsigned exponent = 3;
  std::uint64_t max_first = 0, max_second = 0, min_index = 1;
  bool allow_zero = false;
  unsigned workers = hw;
  std::string format = "json";
  search_cmd->add_option("--sequence", seq_flag, "fib|lucas|naturals")->required();
  search_cmd->add_option("--exponent", exponent, "power e >= 2 (default 3)");
  search_cmd->add_option("--max-first", max_first, "bound for the first pair's larger index")
      ->required();
  search_cmd->add_option("--max-second", max_second,
                         "bound for the second pair's larger index (default: --max-first)");
  search_cmd->add_option("--min-index", min_index, "lowest index included (default 1)");
  search_cmd->add_flag("--allow-zero-index", allow_zero, "include index 0");
  search_cmd->add_option("--workers", workers, "parallel workers (default: hardware)");
  search_cmd->add_option("--format", format, "json|tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  // cf
  auto* cf_cmd = app.add_subcommand("cf", "certified continued-fraction expansion");
  std::string cf_constant, cf_expr, cf_maxq;
  std::uint64_t cf_count = 0;
  cf_cmd->add_option("--constant", cf_constant,
                     "alpha|abs_beta|sqrt5|log_alpha|log5|log_abs_beta|log_5sqrt5");
  cf_cmd->add_option("--expr", cf_expr, "expression to expand");
  cf_cmd->add_option("--max-q", cf_maxq, "list convergents with q_j <= this bound");
  cf_cmd->add_option("--count", cf_count, "list the first N quotients");

  // matveev
  auto* mat_cmd = app.add_subcommand("matveev", "Matveev lower-bound coefficient");
  unsigned mat_terms = 0, mat_degree = 0;
  std::vector<std::string> mat_a;
  std::string mat_maxb = "1";
  mat_cmd->add_option("--terms", mat_terms, "l: number of eta's")->required();
  mat_cmd->add_option("--degree", mat_degree, "d: field degree")->required();
  mat_cmd->add_option("--a", mat_a, "majorant A_j (decimal or expression; repeat l times)")
      ->required();
  mat_cmd->add_option("--max-b", mat_maxb, "max |b_j| (default 1)");

  // solve-bound
  auto* sb_cmd = app.add_subcommand("solve-bound",
                                    "bound all x with x < coeff*(1+log(scale*x))^power");
  std::string sb_coeff, sb_scale = "1";
  unsigned sb_power = 2;
  sb_cmd->add_option("--coeff", sb_coeff, "coefficient (decimal or expression)")->required();
  sb_cmd->add_option("--scale", sb_scale, "scale inside the log (default 1)");
  sb_cmd->add_option("--power", sb_power, "0, 1 or 2 (default 2)")->check(CLI::Range(0u, 2u));

  // reduce
  auto* red_cmd = app.add_subcommand("reduce", "Dujella-Petho reduction");
  std::string red_tau, red_mu, red_a, red_bbase = "alpha", red_cap, red_fq, red_feps;
  unsigned red_attempts = 30;
  red_cmd->add_option("--tau-expr", red_tau, "tau (live mode)");
  red_cmd->add_option("--mu-expr", red_mu, "mu (live mode)");
  red_cmd->add_option("--a", red_a, "A > 0")->required();
  red_cmd->add_option("--b-base", red_bbase, "B > 1 (default alpha)");
  red_cmd->add_option("--cap", red_cap, "M: cap on the reduced unknown")->required();
  red_cmd->add_option("--fixture-q", red_fq, "fixture mode: convergent denominator");
  red_cmd->add_option("--fixture-eps", red_feps, "fixture mode: epsilon");
  red_cmd->add_option("--max-attempts", red_attempts, "convergents to try (default 30)");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "re-check the inequality suites");
  std::string ver_check;
  std::uint64_t ver_nmax = 2000, ver_samples = 100000, ver_seed = 12345;
  ver_cmd->add_option("--check", ver_check, "a1|a6")->required()
      ->check(CLI::IsMember({"a1", "a6"}));
  ver_cmd->add_option("--n-max", ver_nmax, "a1: largest index (default 2000)");
  ver_cmd->add_option("--samples", ver_samples, "a6: random quadruples (default 100000)");
  ver_cmd->add_option("--seed", ver_seed, "a6: RNG seed");

  // prove
  auto* prove_cmd = app.add_subcommand("prove", "run the full bound-and-search pipeline");
  std::string prove_target;
  std::uint64_t prove_max_first = 0, prove_max_second = 0;
  unsigned prove_workers = hw;
  prove_cmd->add_option("target", prove_target, "fibonacci|lucas")->required()
      ->check(CLI::IsMember({"fibonacci", "lucas"}));
  prove_cmd->add_option("--max-first", prove_max_first,
                        "search-box override; must cover the certified bound");
  prove_cmd->add_option("--max-second", prove_max_second,
                        "search-box override; must cover the certified bound");
  prove_cmd->add_option("--workers", prove_workers, "parallel workers for the search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  print_manifest(*sub, sub->get_name(), bits);

  try {
    if (sub == search_cmd) {
      if (max_second == 0) max_second = max_first;
      if (allow_zero) min_index = 0;
      return run_search(kind_from_flag(seq_flag), exponent, max_first, max_second, min_index,
                        std::max(1u, workers), format);
    }
    if (sub == cf_cmd) {
      if ((cf_constant.empty() == cf_expr.empty()))
        throw CLI::ValidationError("cf", "give exactly one of --constant/--expr");
      if (cf_maxq.empty() && cf_count == 0)
        throw CLI::ValidationError("cf", "give one of --max-q/--count");
      return run_cf(cf_constant, cf_expr, bits, cf_maxq, cf_count);
    }
    if (sub == mat_cmd) return run_matveev(mat_terms, mat_degree, mat_a, mat_maxb, bits);
    if (sub == sb_cmd) return run_solve_bound(sb_coeff, sb_scale, sb_power, bits);
    if (sub == red_cmd) {
      bool fixture = !red_fq.empty() || !red_feps.empty();
      bool live = !red_tau.empty() || !red_mu.empty();
      if (fixture == live)
        throw CLI::ValidationError("reduce",
                                   "give either --fixture-q/--fixture-eps or --tau-expr/--mu-expr");
      if (fixture && (red_fq.empty() || red_feps.empty()))
        throw CLI::ValidationError("reduce", "fixture mode needs both --fixture-q and --fixture-eps");
      if (live && (red_tau.empty() || red_mu.empty()))
        throw CLI::ValidationError("reduce", "live mode needs both --tau-expr and --mu-expr");
      return run_reduce(bits, red_tau, red_mu, red_a, red_bbase, red_cap, red_fq, red_feps,
                        red_attempts);
    }
    if (sub == ver_cmd) return run_verify(ver_check, ver_nmax, ver_samples, ver_seed, bits);
    if (sub == prove_cmd)
      return run_prove(prove_target, bits, prove_max_first, prove_max_second,
                       std::max(1u, prove_workers));
    std::cerr << "error: unhandled subcommand\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}
