// Command-line front end: check | solve | analyze | degree | fuzz over the
// JSON instance/tuple schema. Exit codes: 0 success, 1 property-suite
// failure, 2 input error.

#include <CLI11.hpp>

#include <iostream>

#include "ehlcp/analysis.hpp"
#include "ehlcp/harness.hpp"
#include "ehlcp/json_io.hpp"

using namespace ehlcp;

namespace {

constexpr std::uint64_t kDefaultSeed = 20250810;

struct CommonOpts {
  std::string input;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_input = true) {
  auto* in = cmd->add_option("--input", opts.input, "input file path, '-' for stdin, or inline JSON");
  if (needs_input) in->required();
  cmd->add_option("--format", opts.format, "output format: json | text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed", opts.seed, "rng seed (default 20250810, printed in reports)");
}

ParsedInput load(const std::string& input) {
  if (input == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_input(text);
  }
  return parse_input(input);
}

void emit(const CommonOpts& opts, const Json& report, const std::string& text_form) {
  if (opts.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text_form;
  }
}

std::string yn(bool b) { return b ? "yes" : "no"; }

int cmd_check(const CommonOpts& opts, int probe_trials) {
  const ParsedInput in = load(opts.input);
  const MatrixTuple& c = in.instance.tuple;

  const Verdict cw = column_w(c);
  const Verdict w0 = column_w0(c);
  const Verdict r0 = r0_w(c);
  const Verdict sw = ssm_w(c);
  const Verdict probe = column_w_diag_probe(c, probe_trials, opts.seed);

  Json report;
  report["n"] = c.n;
  report["k"] = c.k;
  report["seed"] = opts.seed;
  report["verdicts"] = Json::array({
      verdict_to_json("column_w", cw),
      verdict_to_json("column_w0", w0),
      verdict_to_json("r0_w", r0),
      verdict_to_json("ssm_w", sw),
      verdict_to_json("column_w_diag_probe", probe),
  });
  std::vector<MatrixClassReport> class_reports;
  for (int i = 0; i <= c.k; ++i) class_reports.push_back(classify(c.c(i)));
  Json classes = Json::array();
  for (const auto& r : class_reports) classes.push_back(class_report_to_json(r));
  report["matrix_classes"] = std::move(classes);

  std::string text;
  text += "tuple: n=" + std::to_string(c.n) + " k=" + std::to_string(c.k) +
          " (seed " + std::to_string(opts.seed) + ")\n";
  auto line = [&](const char* name, const Verdict& v) {
    text += std::string("  ") + name + ": " + to_string(v.status);
    if (v.status == Status::Yes && v.sign != 0) text += v.sign > 0 ? " (determinants +)" : " (determinants -)";
    if (v.witness) text += "  witness " + verdict_to_json("", v)["certificate"]["witness"].dump();
    if (v.reps) {
      text += "  certificate dets: " + to_string(v.reps->det_first);
      if (v.reps->second) text += ", " + to_string(v.reps->det_second);
    }
    text += "\n";
  };
  line("column_w ", cw);
  line("column_w0", w0);
  line("r0_w     ", r0);
  line("ssm_w    ", sw);
  line("diag probe", probe);
  for (int i = 0; i <= c.k; ++i) {
    const MatrixClassReport& r = class_reports[static_cast<size_t>(i)];
    text += "  C" + std::to_string(i) + ": Z=" + (r.is_z ? "Yes" : "No") + " P=" + to_string(r.p.status) +
            " SSM=" + to_string(r.ssm.status) + " M=" + to_string(r.m.status) + "\n";
  }
  emit(opts, report, text);
  return 0;
}

int cmd_solve(const CommonOpts& opts, bool use_newton, double tol, int max_iter) {
  const ParsedInput in = load(opts.input);
  if (!in.has_q) throw std::invalid_argument("solve: input must be an instance with \"q\"");

  Json report;
  std::string text;
  if (use_newton) {
    const NewtonResult r =
        solve_newton(in.instance, SolutionTuple::zero(in.instance.n(), in.instance.k()), tol, max_iter);
    report["method"] = "newton";
    report["success"] = r.success;
    report["iterations"] = r.iterations;
    report["exact_verified"] = r.exact_verified;
    if (r.success) report["solution"] = solution_tuple_to_json(r.x);
    text = std::string("newton: ") + (r.success ? "converged" : "failed") + " after " +
           std::to_string(r.iterations) + " iterations\n";
    if (r.success) text += "  x = " + solution_tuple_to_json(r.x).dump() + "\n";
  } else {
    const SolutionSet ss = solve_all(in.instance);
    report = solution_set_to_json(ss);
    text = std::to_string(ss.pieces.size()) + " piece(s)\n";
    for (const auto& p : ss.pieces) {
      text += "  branch [";
      for (size_t i = 0; i < p.branch.level.size(); ++i)
        text += (i ? "," : "") + std::to_string(p.branch.level[i]);
      text += "] sample " + solution_tuple_to_json(p.sample).dump() + "\n";
    }
  }
  emit(opts, report, text);
  return 0;
}

int cmd_analyze(const CommonOpts& opts) {
  const ParsedInput in = load(opts.input);
  if (!in.has_q) throw std::invalid_argument("analyze: input must be an instance with \"q\"");
  const SolutionSet ss = solve_all(in.instance);
  const AnalysisReport r = analyze(ss);
  Json report = analysis_to_json(r);
  std::string text = "pieces: " + std::to_string(r.pieces) + "\nbounded: " + yn(r.bounded) +
                     "\nunique: " + yn(r.unique) + "\nconnected: " + yn(r.connected) + "\n";
  if (r.empty) text += "(empty solution set: bounded/connected hold vacuously)\n";
  emit(opts, report, text);
  return 0;
}

int cmd_degree(const CommonOpts& opts) {
  const ParsedInput in = load(opts.input);
  std::string text;
  if (in.has_q) text += "note: input q is ignored; the degree depends on (C, d) only\n";
  if (!in.has_d && in.instance.k() > 1) text += "note: no d given, using all-ones bounds\n";
  const DegreeResult r = degree(in.instance.tuple, in.instance.d, opts.seed);
  Json report = degree_to_json(r);
  report["seed"] = opts.seed;
  switch (r.kind) {
    case DegreeResult::Kind::Value:
      text += "degree: " + std::to_string(r.value) + " (seed " + std::to_string(opts.seed) + ", " +
              std::to_string(r.counted.size()) + " solution(s) counted)\n";
      break;
    case DegreeResult::Kind::UndefinedNotR0W:
      text += "degree: undefined (tuple lacks the R0-W property)\n";
      break;
    case DegreeResult::Kind::GenericityExhausted:
      text += "degree: genericity retries exhausted\n";
      break;
  }
  emit(opts, report, text);
  return 0;
}

int cmd_fuzz(const CommonOpts& opts, std::vector<std::string> suites, int trials, SuiteSizes sizes) {
  if (suites.empty()) suites = suite_ids();
  Json report = Json::array();
  std::string text;
  bool any_failure = false;
  for (const auto& id : suites) {
    const SuiteReport r = run_suite(id, trials, sizes, opts.seed);
    any_failure = any_failure || !r.ok();
    Json j;
    j["suite"] = r.suite;
    j["statement"] = r.statement;
    j["seed"] = opts.seed;
    j["trials"] = r.trials;
    j["passes"] = r.passes;
    j["failures"] = r.failures;
    j["skips"] = r.skips;
    j["sampled_universal"] = r.sampled_universal;
    Json fl = Json::array();
    for (const auto& f : r.failure_list)
      fl.push_back({{"trial", f.trial_seed},
                    {"instance", f.instance},
                    {"expected", f.expected},
                    {"observed", f.observed}});
    j["failures_detail"] = std::move(fl);
    Json notes;
    for (const auto& [key, count] : r.notes) notes[key] = count;
    j["notes"] = std::move(notes);
    report.push_back(std::move(j));

    text += r.suite + ": " + std::to_string(r.passes) + "/" + std::to_string(r.trials) + " passed, " +
            std::to_string(r.skips) + " skipped, " + std::to_string(r.failures) + " failed" +
            (r.sampled_universal ? " [sampled-universal]" : "") + " (seed " + std::to_string(opts.seed) +
            ")\n";
    for (const auto& f : r.failure_list)
      text += "  trial " + std::to_string(f.trial_seed) + ": expected " + f.expected + ", observed " +
              f.observed + "\n    " + f.instance + "\n";
  }
  emit(opts, report, text);
  return any_failure ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EHLCP toolkit: exact property checkers, exhaustive solver, degree, and property fuzzing"};
  app.require_subcommand(1);

  CommonOpts check_opts, solve_opts, analyze_opts, degree_opts, fuzz_opts;
  int probe_trials = 50;
  bool use_newton = false;
  double tol = 1e-10;
  int max_iter = 100;
  std::vector<std::string> suites;
  int trials = 100;
  SuiteSizes sizes;

  auto* check = app.add_subcommand("check", "tuple property verdicts with certificates");
  add_common(check, check_opts);
  check->add_option("--trials", probe_trials, "diagonal-probe sample count");

  auto* solve = app.add_subcommand("solve", "full solution set (or one Newton solve)");
  add_common(solve, solve_opts);
  solve->add_flag("--newton", use_newton, "damped semismooth Newton from the zero start");
  solve->add_option("--tol", tol, "Newton residual tolerance");
  solve->add_option("--max-iter", max_iter, "Newton iteration cap");

  auto* analyze_cmd = app.add_subcommand("analyze", "bounded / unique / connected report");
  add_common(analyze_cmd, analyze_opts);

  auto* degree_cmd = app.add_subcommand("degree", "EHLCP-degree of a tuple (with bounds d)");
  add_common(degree_cmd, degree_opts);

  auto* fuzz = app.add_subcommand("fuzz", "seeded property-validation suites");
  add_common(fuzz, fuzz_opts, false);
  fuzz->add_option("--suite", suites, "suite id(s), e.g. S-T41 (default: all)");
  fuzz->add_option("--trials", trials, "trials per suite");
  fuzz->add_option("--n", sizes.max_n, "max dimension n");
  fuzz->add_option("--k", sizes.max_k, "max chain length k");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(check_opts, probe_trials);
    if (solve->parsed()) return cmd_solve(solve_opts, use_newton, tol, max_iter);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_opts);
    if (degree_cmd->parsed()) return cmd_degree(degree_opts);
    if (fuzz->parsed()) return cmd_fuzz(fuzz_opts, suites, trials, sizes);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
