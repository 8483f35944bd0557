// cfineq: evaluate refined two-sided bounds (Cartwright-Field, Young,
// Hoelder, Cauchy, Bergstroem, divisor means, operator means), check their
// containment under an explicit tolerance policy, and run the randomized
// verification suites.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfineq/divisor_fn.hpp"
#include "cfineq/errors.hpp"
#include "cfineq/operator_ineq.hpp"
#include "cfineq/report.hpp"
#include "cfineq/scalar_cf.hpp"
#include "cfineq/sum_refine.hpp"
#include "cfineq/symmat.hpp"
#include "cfineq/verify.hpp"

namespace {

using namespace cfineq;

struct Output {
  bool json = false;
  bool csv = false;
};

void add_output_flags(CLI::App* cmd, Output& out) {
  auto* j = cmd->add_flag("--json", out.json, "emit JSON");
  cmd->add_flag("--csv", out.csv, "emit CSV")->excludes(j);
}

uint64_t resolve_seed(const CLI::Option* opt, uint64_t value) {
  if (opt->count() > 0) return value;
  if (const char* env = std::getenv("CFINEQ_SEED"))
    return std::strtoull(env, nullptr, 10);
  return value;
}

SymMatrix parse_matrix(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw DomainError("cannot open matrix file " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("matrix must be JSON array-of-rows: ") +
                      e.what());
  }
  if (!j.is_array() || j.empty())
    throw DomainError("matrix must be a nonempty JSON array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw DomainError("matrix rows must be arrays");
    rows.emplace_back();
    for (const auto& v : r) {
      if (!v.is_number()) throw DomainError("matrix entries must be numbers");
      rows.back().push_back(v.get<double>());
    }
  }
  return SymMatrix::from_rows(rows);
}

void print_sandwich_text(const ScalarSandwich& s) {
  std::printf("lower       = %s\n", fmt_double(s.lower).c_str());
  std::printf("middle      = %s\n", fmt_double(s.middle).c_str());
  std::printf("upper       = %s\n", fmt_double(s.upper).c_str());
  std::printf("slack_lower = %s\n", fmt_double(s.slack_lower).c_str());
  std::printf("slack_upper = %s\n", fmt_double(s.slack_upper).c_str());
  std::printf("lower_ok    = %s\n", s.lower_ok ? "true" : "false");
  std::printf("upper_ok    = %s\n", s.upper_ok ? "true" : "false");
}

int emit_sandwich(const ScalarSandwich& s, const Output& out,
                  JsonWriter* extra = nullptr) {
  if (out.json) {
    if (extra) {
      append_fields(*extra, s);
      std::printf("%s\n", extra->str().c_str());
    } else {
      std::printf("%s\n", to_json(s).c_str());
    }
  } else if (out.csv) {
    std::printf("lower,middle,upper,slack_lower,slack_upper,lower_ok,upper_ok\n");
    std::printf("%s,%s,%s,%s,%s,%s,%s\n", fmt_double(s.lower).c_str(),
                fmt_double(s.middle).c_str(), fmt_double(s.upper).c_str(),
                fmt_double(s.slack_lower).c_str(),
                fmt_double(s.slack_upper).c_str(),
                s.lower_ok ? "true" : "false", s.upper_ok ? "true" : "false");
  } else {
    print_sandwich_text(s);
  }
  return s.pass() ? 0 : 2;
}

JsonWriter& append_operator_report(JsonWriter& w, const OperatorSandwich& sw) {
  w.field("case", to_string(sw.case_tag));
  w.field("min_eig_lower_gap", sw.lower_verdict.min_eig_B_minus_A);
  w.field("min_eig_upper_gap", sw.upper_verdict.min_eig_B_minus_A);
  append_fields(w, sw.lower_verdict, "lower");
  append_fields(w, sw.upper_verdict, "upper");
  w.field("pass", sw.pass());
  w.raw("lower", matrix_or_summary_json(sw.lower));
  w.raw("middle", matrix_or_summary_json(sw.middle));
  w.raw("upper", matrix_or_summary_json(sw.upper));
  return w;
}

void print_operator_text(const OperatorSandwich& sw) {
  std::printf("case              = %s\n", to_string(sw.case_tag));
  std::printf("min_eig_lower_gap = %s\n",
              fmt_double(sw.lower_verdict.min_eig_B_minus_A).c_str());
  std::printf("min_eig_upper_gap = %s\n",
              fmt_double(sw.upper_verdict.min_eig_B_minus_A).c_str());
  std::printf("lower_verdict     = %s\n", to_string(sw.lower_verdict.relation));
  std::printf("upper_verdict     = %s\n", to_string(sw.upper_verdict.relation));
  std::printf("pass              = %s\n", sw.pass() ? "true" : "false");
}

int run_verify(const SuiteConfig& cfg, const Output& out) {
  const std::vector<SuiteResult> results = run_suites(cfg);
  bool all_pass = true;
  if (out.json) {
    std::string arr = "[";  // nested under a {seed, trials, suites} envelope
    for (std::size_t i = 0; i < results.size(); ++i) {
      const SuiteResult& r = results[i];
      if (i) arr += ',';
      JsonWriter w;
      w.field("suite", r.suite)
          .field("checks", r.checks)
          .field("failures", r.failures)
          .field("pass", r.pass());
      std::string det = "[";
      for (std::size_t d = 0; d < r.failure_details.size(); ++d) {
        if (d) det += ',';
        det += nlohmann::json(r.failure_details[d]).dump();
      }
      det += ']';
      w.raw("details", det);
      arr += w.str();
    }
    arr += ']';
    JsonWriter top;
    top.field("seed", cfg.seed).field("trials", cfg.trials).raw("suites", arr);
    std::printf("%s\n", top.str().c_str());
  } else {
    for (const SuiteResult& r : results) {
      std::printf("%s %s: %llu checks, %llu failures (%.2f s)\n",
                  r.pass() ? "PASS" : "FAIL", r.suite.c_str(),
                  static_cast<unsigned long long>(r.checks),
                  static_cast<unsigned long long>(r.failures), r.elapsed_sec);
      for (const std::string& d : r.failure_details)
        std::printf("  %s\n", d.c_str());
    }
  }
  for (const SuiteResult& r : results) all_pass = all_pass && r.pass();
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"refined inequality bounds: evaluation and verification"};
  app.require_subcommand(1);

  double tol_eps = 1e-12;
  app.add_option("--tol", tol_eps, "relative tolerance (default 1e-12)")
      ->check(CLI::PositiveNumber);

  // young / sandwich / bernoulli / tightness -------------------------------
  auto* young = app.add_subcommand("young", "two-variable AM-GM gap sandwich");
  double ya = 0, yb = 0, ylam = 0.5;
  Output yout;
  young->add_option("--a", ya, "first value")->required();
  young->add_option("--b", yb, "second value")->required();
  young->add_option("--lambda", ylam, "weight in [0,1]")->required();
  add_output_flags(young, yout);

  auto* nvar = app.add_subcommand("sandwich", "n-variable AM-GM gap sandwich");
  std::vector<double> npoints, nweights;
  Output nout;
  nvar->add_option("--points", npoints, "positive points")
      ->required()
      ->delimiter(',');
  nvar->add_option("--weights", nweights,
                   "positive weights summing to 1 (default uniform)")
      ->delimiter(',');
  add_output_flags(nvar, nout);

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli gap sandwich");
  double bx = 0, blam = 0.5;
  Output bout;
  bern->add_option("--x", bx, "x > -1")->required();
  bern->add_option("--lambda", blam, "weight in [0,1]")->required();
  add_output_flags(bern, bout);

  auto* tight = app.add_subcommand("tightness",
                                   "compare the three upper bounds");
  double ta = 0, tb = 0, tlam = 0.5;
  Output tout;
  tight->add_option("--a", ta)->required();
  tight->add_option("--b", tb)->required();
  tight->add_option("--lambda", tlam)->required();
  add_output_flags(tight, tout);

  // power-mean / holder / cauchy / bergstrom -------------------------------
  auto* pm = app.add_subcommand("power-mean", "weighted power mean sandwich");
  PowerMeanSpec pm_spec;
  Output pmout;
  pm->add_option("--values", pm_spec.values)->required()->delimiter(',');
  pm->add_option("--weights", pm_spec.weights, "default all 1")->delimiter(',');
  pm->add_option("--r", pm_spec.r)->required();
  pm->add_option("--s", pm_spec.s)->required();
  add_output_flags(pm, pmout);

  auto* hold = app.add_subcommand("holder", "Hoelder gap sandwich");
  HolderSpec h_spec;
  Output hout;
  bool h_has_q = false;
  hold->add_option("--avec", h_spec.avec)->required()->delimiter(',');
  hold->add_option("--bvec", h_spec.bvec)->required()->delimiter(',');
  hold->add_option("--p", h_spec.p)->required();
  hold->add_option("--q", h_spec.q, "default: conjugate p/(p-1)")
      ->each([&](const std::string&) { h_has_q = true; });
  add_output_flags(hold, hout);

  auto* cauchy = app.add_subcommand("cauchy", "Cauchy gap sandwich");
  std::vector<double> c_avec, c_bvec;
  Output cout_;
  cauchy->add_option("--avec", c_avec)->required()->delimiter(',');
  cauchy->add_option("--bvec", c_bvec)->required()->delimiter(',');
  add_output_flags(cauchy, cout_);

  auto* berg = app.add_subcommand("bergstrom", "Bergstroem gap sandwich");
  std::vector<double> g_xvec, g_avec;
  Output gout;
  berg->add_option("--xvec", g_xvec)->required()->delimiter(',');
  berg->add_option("--avec", g_avec)->required()->delimiter(',');
  add_output_flags(berg, gout);

  // arith / arith-scan ------------------------------------------------------
  auto* arith = app.add_subcommand("arith", "divisor-mean sandwich");
  uint64_t a_n = 1;
  double a_k = 1;
  bool a_unitary = false;
  std::string a_variant = "proof-corrected";
  std::string a_bigm;
  Output aout;
  arith->add_option("--n", a_n)->required();
  arith->add_option("--k", a_k, "exponent k >= 0 (default 1)");
  arith->add_flag("--unitary", a_unitary, "use unitary divisors");
  arith->add_option("--variant", a_variant)
      ->check(CLI::IsMember({"proof-corrected", "as-printed"}));
  arith->add_option("--big-m", a_bigm, "lower denominator (default per variant)")
      ->check(CLI::IsMember({"n-to-k", "n-as-printed"}));
  add_output_flags(arith, aout);

  auto* scan = app.add_subcommand("arith-scan", "divisor-mean range scan");
  uint64_t s_nmax = 100;
  std::vector<double> s_ks = {0, 0.5, 1, 2, 3};
  std::string s_family = "both";
  std::string s_variant = "proof-corrected";
  std::string s_bigm;
  Output sout;
  scan->add_option("--nmax", s_nmax)->required();
  scan->add_option("--k", s_ks, "exponents (default 0,0.5,1,2,3)")
      ->delimiter(',');
  scan->add_option("--family", s_family)
      ->check(CLI::IsMember({"all", "unitary", "both"}));
  scan->add_option("--variant", s_variant)
      ->check(CLI::IsMember({"proof-corrected", "as-printed"}));
  scan->add_option("--big-m", s_bigm)
      ->check(CLI::IsMember({"n-to-k", "n-as-printed"}));
  add_output_flags(scan, sout);

  // matrix checks -----------------------------------------------------------
  struct MatrixArgs {
    std::string A, B;
    double lambda = 0.5;
    Output out;
  };
  MatrixArgs m41, m42, m43, mchain;
  auto add_matrix_cmd = [&](const char* name, const char* desc, MatrixArgs& ma,
                            bool with_lambda) {
    auto* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--A", ma.A, "JSON rows or @file")->required();
    cmd->add_option("--B", ma.B, "JSON rows or @file")->required();
    if (with_lambda) cmd->add_option("--lambda", ma.lambda)->required();
    add_output_flags(cmd, ma.out);
    return cmd;
  };
  auto* t41 = add_matrix_cmd("matrix-t41", "operator gap sandwich", m41, true);
  auto* c42 = add_matrix_cmd("matrix-c42", "harmonic-mean sandwich", m42, true);
  auto* c43 = add_matrix_cmd("matrix-c43", "cube-difference PSD check", m43, false);
  auto* chain =
      add_matrix_cmd("matrix-chain", "HM <= GM <= AM chain", mchain, true);

  // verify -------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "randomized verification suites");
  SuiteConfig cfg;
  Output vout;
  verify->add_option("--suite", cfg.suite, "suite name or 'all'");
  verify->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  auto* seed_opt = verify->add_option("--seed", cfg.seed, "fallback: CFINEQ_SEED");
  verify->add_option("--dims", cfg.dims)->delimiter(',');
  verify->add_option("--lambda", cfg.lambda_grid)->delimiter(',');
  verify->add_option("--precision-bits", cfg.precision_bits)
      ->check(CLI::PositiveNumber);
  verify->add_option("--nmax", cfg.nmax)->check(CLI::PositiveNumber);
  add_output_flags(verify, vout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const Tolerance tol{tol_eps, 1e-300};
  try {
    if (*young) return emit_sandwich(cf_sandwich_two({ya, yb, ylam}, tol), yout);
    if (*nvar) {
      WeightedSample ws;
      ws.points = npoints;
      ws.weights = nweights.empty()
                       ? std::vector<double>(npoints.size(),
                                             1.0 / npoints.size())
                       : nweights;
      return emit_sandwich(cf_sandwich_n(ws, tol), nout);
    }
    if (*bern) return emit_sandwich(bernoulli_sandwich(bx, blam, tol), bout);
    if (*tight) {
      const TightnessReport rep = tightness_report({ta, tb, tlam});
      const bool ok = rep.ordering == "tie" || rep.cf_upper < rep.exp_upper;
      if (tout.json) {
        JsonWriter w;
        w.field("cf_upper", rep.cf_upper)
            .field("exp_upper", rep.exp_upper)
            .field("log_upper", rep.log_upper)
            .field("exp_overflow", rep.exp_overflow)
            .field("ordering", rep.ordering);
        std::printf("%s\n", w.str().c_str());
      } else if (tout.csv) {
        std::printf("cf_upper,exp_upper,log_upper,exp_overflow,ordering\n");
        std::printf("%s,%s,%s,%s,%s\n", fmt_double(rep.cf_upper).c_str(),
                    rep.exp_overflow ? "inf" : fmt_double(rep.exp_upper).c_str(),
                    fmt_double(rep.log_upper).c_str(),
                    rep.exp_overflow ? "true" : "false", rep.ordering.c_str());
      } else {
        std::printf("cf_upper     = %s\n", fmt_double(rep.cf_upper).c_str());
        std::printf("exp_upper    = %s\n",
                    rep.exp_overflow ? "inf" : fmt_double(rep.exp_upper).c_str());
        std::printf("log_upper    = %s\n", fmt_double(rep.log_upper).c_str());
        std::printf("exp_overflow = %s\n", rep.exp_overflow ? "true" : "false");
        std::printf("ordering     = %s\n", rep.ordering.c_str());
      }
      return ok ? 0 : 2;
    }
    if (*pm) {
      if (pm_spec.weights.empty())
        pm_spec.weights.assign(pm_spec.values.size(), 1.0);
      const RefinedBound rb = power_mean_sandwich(pm_spec, tol);
      JsonWriter extra;
      extra.field("A", rb.context.A)
          .field("m", rb.context.m)
          .field("M", rb.context.M);
      if (pmout.json) return emit_sandwich(rb.sandwich, pmout, &extra);
      const int rc = emit_sandwich(rb.sandwich, pmout);
      if (!pmout.csv)
        std::printf("A = %s, m = %s, M = %s\n", fmt_double(rb.context.A).c_str(),
                    fmt_double(rb.context.m).c_str(),
                    fmt_double(rb.context.M).c_str());
      return rc;
    }
    auto refined = [&](const RefinedBound& rb, const Output& out) {
      JsonWriter extra;
      extra.field("A", rb.context.A)
          .field("m", rb.context.m)
          .field("M", rb.context.M);
      if (out.json) return emit_sandwich(rb.sandwich, out, &extra);
      const int rc = emit_sandwich(rb.sandwich, out);
      if (!out.csv)
        std::printf("A = %s, m = %s, M = %s\n", fmt_double(rb.context.A).c_str(),
                    fmt_double(rb.context.m).c_str(),
                    fmt_double(rb.context.M).c_str());
      return rc;
    };
    if (*hold) {
      if (!h_has_q) h_spec.q = h_spec.p / (h_spec.p - 1.0);
      return refined(holder_sandwich(h_spec, tol), hout);
    }
    if (*cauchy) return refined(cauchy_sandwich(c_avec, c_bvec, tol), cout_);
    if (*berg) return refined(bergstrom_sandwich(g_xvec, g_avec, tol), gout);

    if (*arith) {
      const DivisorVariant variant = a_variant == "as-printed"
                                         ? DivisorVariant::as_printed
                                         : DivisorVariant::proof_corrected;
      const BigMChoice bigm =
          a_bigm.empty()
              ? (variant == DivisorVariant::as_printed ? BigMChoice::n_as_printed
                                                       : BigMChoice::n_to_k)
              : (a_bigm == "n-to-k" ? BigMChoice::n_to_k
                                    : BigMChoice::n_as_printed);
      const DivisorSandwichReport rep =
          divisor_mean_sandwich(a_n, a_k, a_unitary, variant, bigm, tol);
      JsonWriter extra;
      extra.field("n", rep.n)
          .field("k", rep.k)
          .field("family", rep.unitary ? "unitary" : "all")
          .field("variant", to_string(rep.variant))
          .field("big_m", to_string(rep.big_m))
          .field("exact", rep.exact);
      if (rep.exact)
        extra.field("lower_exact", rep.lower_exact)
            .field("upper_exact", rep.upper_exact);
      if (aout.json) return emit_sandwich(rep.sandwich, aout, &extra);
      const int rc = emit_sandwich(rep.sandwich, aout);
      if (!aout.csv && rep.exact)
        std::printf("lower = %s, upper = %s (exact)\n", rep.lower_exact.c_str(),
                    rep.upper_exact.c_str());
      return rc;
    }
    if (*scan) {
      const DivisorVariant variant = s_variant == "as-printed"
                                         ? DivisorVariant::as_printed
                                         : DivisorVariant::proof_corrected;
      const BigMChoice bigm =
          s_bigm.empty()
              ? (variant == DivisorVariant::as_printed ? BigMChoice::n_as_printed
                                                       : BigMChoice::n_to_k)
              : (s_bigm == "n-to-k" ? BigMChoice::n_to_k
                                    : BigMChoice::n_as_printed);
      std::vector<bool> families;
      if (s_family == "all" || s_family == "both") families.push_back(false);
      if (s_family == "unitary" || s_family == "both") families.push_back(true);
      if (!sout.json)
        std::printf("n,k,family,variant,big_m,lower,middle,upper,lower_ok,upper_ok\n");
      bool all_ok = true;
      for (uint64_t n = 1; n <= s_nmax; ++n) {
        const DivisorProfile prof = divisor_profile(n);
        for (bool unitary : families) {
          for (double k : s_ks) {
            const DivisorSandwichReport rep =
                divisor_mean_sandwich(prof, k, unitary, variant, bigm, tol);
            all_ok = all_ok && rep.sandwich.pass();
            if (sout.json) {
              JsonWriter w;
              w.field("n", rep.n)
                  .field("k", rep.k)
                  .field("family", unitary ? "unitary" : "all")
                  .field("variant", to_string(rep.variant))
                  .field("big_m", to_string(rep.big_m));
              append_fields(w, rep.sandwich);
              std::printf("%s\n", w.str().c_str());
            } else {
              std::printf("%llu,%s,%s,%s,%s,%s,%s,%s,%s,%s\n",
                          static_cast<unsigned long long>(rep.n),
                          fmt_double(rep.k).c_str(),
                          unitary ? "unitary" : "all", to_string(rep.variant),
                          to_string(rep.big_m),
                          fmt_double(rep.sandwich.lower).c_str(),
                          fmt_double(rep.sandwich.middle).c_str(),
                          fmt_double(rep.sandwich.upper).c_str(),
                          rep.sandwich.lower_ok ? "true" : "false",
                          rep.sandwich.upper_ok ? "true" : "false");
            }
          }
        }
      }
      return all_ok ? 0 : 2;
    }

    if (*t41) {
      const OperatorSandwich sw =
          theorem41_sandwich(parse_matrix(m41.A), parse_matrix(m41.B), m41.lambda);
      if (m41.out.json) {
        JsonWriter w;
        append_operator_report(w, sw);
        std::printf("%s\n", w.str().c_str());
      } else {
        print_operator_text(sw);
      }
      return sw.pass() ? 0 : 2;
    }
    if (*c42) {
      const Corollary42Result res = corollary42_sandwich(
          parse_matrix(m42.A), parse_matrix(m42.B), m42.lambda);
      if (m42.out.json) {
        JsonWriter w;
        w.field("lower_bound_side", res.lower_uses_a_side ? "A" : "B");
        append_operator_report(w, res.sandwich);
        std::printf("%s\n", w.str().c_str());
      } else {
        std::printf("lower_bound_side  = %s\n",
                    res.lower_uses_a_side ? "A" : "B");
        print_operator_text(res.sandwich);
      }
      return res.sandwich.pass() ? 0 : 2;
    }
    if (*c43) {
      const Corollary43Report rep =
          corollary43_check(parse_matrix(m43.A), parse_matrix(m43.B));
      if (m43.out.json) {
        JsonWriter w;
        w.field("min_eig", rep.min_eig)
            .field("tol", rep.tol_used)
            .field("psd", rep.psd)
            .raw("expr", matrix_or_summary_json(rep.expr));
        std::printf("%s\n", w.str().c_str());
      } else {
        std::printf("min_eig = %s\ntol     = %s\npsd     = %s\n",
                    fmt_double(rep.min_eig).c_str(),
                    fmt_double(rep.tol_used).c_str(), rep.psd ? "true" : "false");
      }
      return rep.psd ? 0 : 2;
    }
    if (*chain) {
      const ChainReport rep = amghm_chain_check(parse_matrix(mchain.A),
                                                parse_matrix(mchain.B),
                                                mchain.lambda);
      if (mchain.out.json) {
        JsonWriter w;
        append_fields(w, rep.hm_leq_gm, "hm_leq_gm");
        append_fields(w, rep.gm_leq_am, "gm_leq_am");
        w.field("pass", rep.pass());
        std::printf("%s\n", w.str().c_str());
      } else {
        std::printf("hm_leq_gm = %s\ngm_leq_am = %s\npass      = %s\n",
                    to_string(rep.hm_leq_gm.relation),
                    to_string(rep.gm_leq_am.relation),
                    rep.pass() ? "true" : "false");
      }
      return rep.pass() ? 0 : 2;
    }
    if (*verify) {
      cfg.seed = resolve_seed(seed_opt, cfg.seed);
      cfg.tol = tol;
      return run_verify(cfg, vout);
    }
  } catch (const DomainError& e) {
    std::fprintf(stderr, "cfineq: domain error: %s\n", e.what());
    return 1;
  } catch (const DegenerateInput& e) {
    std::fprintf(stderr, "cfineq: degenerate input: %s\n", e.what());
    return 1;
  } catch (const OverflowError& e) {
    std::fprintf(stderr, "cfineq: overflow: %s\n", e.what());
    return 1;
  } catch (const NotPositiveDefinite& e) {
    std::fprintf(stderr, "cfineq: not positive definite: %s\n", e.what());
    return 1;
  } catch (const DimensionMismatch& e) {
    std::fprintf(stderr, "cfineq: dimension mismatch: %s\n", e.what());
    return 1;
  } catch (const OrderingIndeterminate& e) {
    std::fprintf(stderr, "cfineq: ordering indeterminate: %s\n", e.what());
    return 1;
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "cfineq: convergence failure: %s\n", e.what());
    return 1;
  }
  return 0;
}
