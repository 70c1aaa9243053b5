// Copyright 2026 The latfree Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latfree/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "latfree/flip_engine.hpp"
#include "latfree/render.hpp"
#include "latfree/verification.hpp"

namespace latfree::cli {

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kLevelSetAssumptionViolated:
    case ErrorCode::kNotStronglyConvexInX:
      return kExitNotPositiveDefinite;
    case ErrorCode::kBudgetExhausted:
      return kExitBudgetExhausted;
    case ErrorCode::kNonConvexOracleDetected:
    case ErrorCode::kInternalInvariantViolation:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

std::string describe(const FlipTrace& t, const Problem& problem, LogLevel level) {
  std::ostringstream line;
  Rational f = problem.objective(t.after.member(0));
  for (const auto& m : t.after.members()) f = std::min(f, problem.objective(m));
  line << "iter " << t.iteration << ": " << case_name(t.case_id) << " side="
       << (t.side == 0 ? std::string("-") : std::to_string(t.side))
       << " k=" << (t.k ? to_string(*t.k) : std::string("-")) << " min_f=" << f.to_string();
  if (level == LogLevel::kTrace) {
    line << " pattern=" << pattern_name(t.pattern) << " inner_products=" << t.inner_products
         << " before=" << t.before << " after=" << t.after;
  }
  return line.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  file << text;
}

}  // namespace

LogLevel log_level_from_env() {
  const char* v = std::getenv("LATFREE_LOG");
  if (v == nullptr) return LogLevel::kInfo;
  const std::string s(v);
  if (s == "quiet") return LogLevel::kQuiet;
  if (s == "trace") return LogLevel::kTrace;
  return LogLevel::kInfo;
}

SolveOutcome solve_document(const Json& doc, const RunConfig& config) {
  SolveOutcome outcome;
  std::optional<Problem> problem;
  try {
    problem.emplace(parse_problem(doc));
    SignPolicy policy = problem->policy;
    if (config.mode) {
      if (*config.mode == "exact") {
        policy = SignPolicy::exact();
      } else if (*config.mode == "tolerance") {
        policy = SignPolicy::tolerance(policy.is_exact() ? SignPolicy::kDefaultTau : policy.tau());
      } else {
        throw Error(ErrorCode::kParse, "mode must be exact or tolerance");
      }
    }
    if (config.tau) {
      if (config.mode && *config.mode == "exact") {
        throw Error(ErrorCode::kParse, "--tau conflicts with exact mode");
      }
      policy = SignPolicy::tolerance(*config.tau);
    }

    SolveConfig sc;
    sc.policy = policy;
    sc.max_iterations = config.max_iterations;
    sc.literal_case4 = config.literal_case4;
    sc.on_flip = [&](const FlipTrace& t) {
      if (config.log != LogLevel::kQuiet) outcome.log.push_back(describe(t, *problem, config.log));
    };
    const QuadraticModel& model = problem->model();
    std::optional<FloatOracle> float_oracle;
    if (!policy.is_exact()) float_oracle.emplace(float_adapter(model));
    const GradientOracle& oracle =
        float_oracle ? static_cast<const GradientOracle&>(*float_oracle) : model;

    const Certificate cert = solve(oracle, problem->initial, sc);
    outcome.document = certificate_to_json(cert, *problem);
    if (config.log != LogLevel::kQuiet) {
      outcome.log.push_back("status " + std::string(status_name(cert.status)) + " after " +
                            std::to_string(cert.iterations) + " flips, argmin " +
                            to_string(cert.argmin) + " f=" +
                            problem->objective(cert.argmin).to_string());
    }
  } catch (const BudgetExhausted& e) {
    outcome.exit_code = kExitBudgetExhausted;
    outcome.error = e.what();
    outcome.document = budget_to_json(e, *problem);
  } catch (const Error& e) {
    outcome.exit_code = exit_code_for(e);
    outcome.error = e.what();
  }
  return outcome;
}

VerifyOutcome verify_document(const Json& problem_doc, const Json& cert_doc, int box_radius) {
  VerifyOutcome outcome;
  try {
    const Problem problem = parse_problem(problem_doc);
    const CertificateDoc cert = parse_certificate(cert_doc);
    if (cert.problem_hash != problem.hash) {
      outcome.exit_code = kExitHashMismatch;
      outcome.error = "certificate was produced for problem " + cert.problem_hash +
                      ", not " + problem.hash;
      outcome.report = {{"pass", false}, {"witnesses", Json::array()}, {"error", outcome.error}};
      return outcome;
    }
    const QuadraticModel& model = problem.model();
    Json checks;
    bool pass = true;

    CutEvaluator eval(model, SignPolicy::exact());
    const GpSystem gp = GpSystem::of(cert.final_set, eval);
    const LatticeFreeReport lf =
        check_lattice_free(gp, cert.final_set, IntegerBox::around(cert.final_set, box_radius));
    Json witnesses = Json::array();
    for (const auto& w : lf.witnesses) witnesses.push_back(point_to_json(w));
    checks["lattice_free"] = {{"pass", lf.pass}, {"box_radius", box_radius},
                              {"points_checked", lf.points_checked}};
    pass = pass && lf.pass;

    bool status_ok = cert.status == "LatticeFree" || cert.status == "GradientZeroOptimum";
    if (cert.status == "GradientZeroOptimum") status_ok = eval.is_zero_gradient(cert.argmin);
    checks["status"] = {{"pass", status_ok}, {"status", cert.status}};
    pass = pass && status_ok;

    const OptimumSet optima = brute_force_optimum(model, sufficient_box(model));
    const Rational expected = optima.value + problem.offset();
    const bool argmin_ok = cert.final_set.contains(cert.argmin) &&
                           problem.objective(cert.argmin) == cert.argmin_f &&
                           cert.argmin_f == expected;
    checks["argmin"] = {{"pass", argmin_ok},
                        {"expected", rational_to_json(expected)},
                        {"certificate", rational_to_json(cert.argmin_f)}};
    pass = pass && argmin_ok;

    bool chain_ok = static_cast<int>(cert.trace.size()) == cert.iterations;
    for (std::size_t i = 0; chain_ok && i < cert.trace.size(); ++i) {
      const UnimodularSet& next =
          i + 1 < cert.trace.size() ? cert.trace[i + 1].before : cert.final_set;
      chain_ok = cert.trace[i].after.same_members(next);
    }
    checks["trace"] = {{"pass", chain_ok}};
    pass = pass && chain_ok;

    const MonotoneReport mono = check_monotone_measures(model, cert.sets(), optima);
    checks["monotone"] = {{"pass", mono.pass}, {"step", mono.step}, {"reason", mono.reason}};
    pass = pass && mono.pass;

    outcome.report = {{"pass", pass}, {"witnesses", witnesses}, {"checks", checks}};
    outcome.exit_code = pass ? kExitOk : kExitVerifyFailed;
  } catch (const Error& e) {
    outcome.exit_code = exit_code_for(e);
    outcome.error = e.what();
    outcome.report = {{"pass", false}, {"witnesses", Json::array()}, {"error", outcome.error}};
  }
  return outcome;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex minimization over Z^2 by unimodular flips", "latfree"};
  app.require_subcommand(1);

  std::string problem_path, cert_path, out_path, mode, format;
  double tau = 0;
  bool literal_case4 = false;
  int max_iter = 10000, radius = 50;

  auto* solve_cmd = app.add_subcommand("solve", "solve a problem and write its certificate");
  solve_cmd->add_option("problem", problem_path, "problem JSON")->required();
  auto* mode_opt = solve_cmd->add_option("--mode", mode, "exact or tolerance");
  auto* tau_opt = solve_cmd->add_option("--tau", tau, "tolerance band")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--max-iter", max_iter, "flip budget")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--out", out_path, "certificate path (default stdout)");
  solve_cmd->add_flag("--literal-case4", literal_case4,
                      "use (u1, k u1 - u2) for k = 1 on the -1 line instead of (u1, -u2)");

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate against its problem");
  verify_cmd->add_option("problem", problem_path, "problem JSON")->required();
  verify_cmd->add_option("certificate", cert_path, "certificate JSON")->required();
  verify_cmd->add_option("--box-radius", radius, "enumeration radius")->check(CLI::PositiveNumber);

  auto* emit_cmd = app.add_subcommand("emit", "render a certificate's trajectory");
  emit_cmd->add_option("certificate", cert_path, "certificate JSON")->required();
  emit_cmd->add_option("--format", format, "csv or svg")->required();
  emit_cmd->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) {
      RunConfig config;
      if (*mode_opt) config.mode = mode;
      if (*tau_opt) config.tau = tau;
      config.max_iterations = max_iter;
      config.literal_case4 = literal_case4;
      config.log = log_level_from_env();
      const SolveOutcome outcome = solve_document(read_json_file(problem_path), config);
      for (const auto& line : outcome.log) err << line << '\n';
      if (!outcome.error.empty()) err << "latfree: " << outcome.error << '\n';
      if (!outcome.document.is_null()) write_text(out_path, outcome.document.dump(2) + "\n", out);
      return outcome.exit_code;
    }
    if (*verify_cmd) {
      const VerifyOutcome outcome =
          verify_document(read_json_file(problem_path), read_json_file(cert_path), radius);
      if (!outcome.error.empty()) err << "latfree: " << outcome.error << '\n';
      out << outcome.report.dump(2) << '\n';
      return outcome.exit_code;
    }
    const CertificateDoc cert = parse_certificate(read_json_file(cert_path));
    if (format == "csv") {
      write_text(out_path, render_csv(cert), out);
    } else if (format == "svg") {
      write_text(out_path, render_svg(cert), out);
    } else {
      err << "latfree: unknown format '" << format << "'\n";
      return kExitUsage;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "latfree: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace latfree::cli
