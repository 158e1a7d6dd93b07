#pragma once

// Command-line surface: detect | estimate | simulate | eval | bench.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 numeric error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphon_cpd.hpp"

namespace graphon_cpd::cli {

enum ExitCode : int { ok = 0, usage = 1, data = 2, numeric = 3 };

namespace detail {

/// Writes through `fn` to a file, or to `fallback` when path is "-".
inline void emit(const std::string& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& fn) {
  if (path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw data_error("cannot write '" + path + "'");
  fn(file);
  if (!file) throw data_error("write failed for '" + path + "'");
}

struct TuningFlags {
  std::optional<std::size_t> h;
  std::optional<double> B0;
  std::optional<double> D0;
  std::optional<double> delta0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--h", h, "Screening window half-width (default floor(sqrt(T)))");
    cmd->add_option("--B0", B0, "Neighborhood constant (default 3)");
    cmd->add_option("--D0", D0, "Threshold constant (default 0.25)");
    cmd->add_option("--delta0", delta0, "Threshold log exponent offset (default 0.1)");
  }

  [[nodiscard]] DetectorParams resolve(std::size_t T) const {
    DetectorParams p;
    p.h = h ? *h : isqrt(T);
    if (B0) p.B0 = *B0;
    if (D0) p.D0 = *D0;
    if (delta0) p.delta0 = *delta0;
    p.validate(T);
    return p;
  }
};

}  // namespace detail

inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Change-point detection in dynamic networks via neighborhood smoothing",
               "graphon-cpd"};
  app.set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = auto; GRAPHON_CPD_THREADS caps)");

  // detect
  auto* detect_cmd = app.add_subcommand("detect", "Detect change-points in an edge CSV");
  std::string detect_input;
  std::optional<std::size_t> detect_n, detect_T, min_gap;
  std::string detect_output = "-";
  std::string scan_out;
  detail::TuningFlags detect_tuning;
  detect_cmd->add_option("--input", detect_input, "Edge CSV (t,i,j; 0-based)")->required();
  detect_cmd->add_option("--n", detect_n, "Node count (default: max id + 1)");
  detect_cmd->add_option("--T", detect_T, "Snapshot count (default: max t + 1)");
  detect_cmd->add_option("--output", detect_output, "Report JSON path ('-' = stdout)");
  detect_cmd->add_option("--scan-out", scan_out, "Optional scan CSV path (t,D)");
  detect_cmd->add_option("--min-gap", min_gap, "Known minimum segment length; warns if h is too wide");
  detect_tuning.attach(detect_cmd);

  // estimate
  auto* estimate_cmd = app.add_subcommand("estimate", "Estimate the link-probability matrix");
  std::string est_input;
  std::optional<std::size_t> est_n, est_T, est_from, est_to;
  std::string method = "mnbs";
  double est_B0 = 3.0;
  double eta = 0.01;
  std::string est_output = "-";
  estimate_cmd->add_option("--input", est_input, "Edge CSV (t,i,j; 0-based)")->required();
  estimate_cmd->add_option("--n", est_n, "Node count");
  estimate_cmd->add_option("--T", est_T, "Snapshot count");
  estimate_cmd->add_option("--from", est_from, "First snapshot, 0-based (default 0)");
  estimate_cmd->add_option("--to", est_to, "Last snapshot, 0-based inclusive (default T-1)");
  estimate_cmd->add_option("--method", method, "mnbs or musvt")
      ->check(CLI::IsMember({"mnbs", "musvt"}));
  estimate_cmd->add_option("--B0", est_B0, "Neighborhood constant (mnbs)");
  estimate_cmd->add_option("--eta", eta, "Spectral cutoff margin in (0,1) (musvt)");
  estimate_cmd->add_option("--output", est_output, "Matrix CSV path ('-' = stdout)");

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "Sample a synthetic scenario");
  ScenarioSpec sim;
  std::string sim_output = "-";
  std::string sim_truth;
  simulate_cmd->add_option("--scenario", sim.id, "Scenario id, e.g. DSBM-I or NOCHANGE-SBM-III")
      ->required();
  simulate_cmd->add_option("--n", sim.n, "Node count")->required();
  simulate_cmd->add_option("--T", sim.T, "Snapshot count")->required();
  simulate_cmd->add_option("--seed", sim.seed, "Master seed")->required();
  simulate_cmd->add_option("--output", sim_output, "Edge CSV path ('-' = stdout)");
  simulate_cmd->add_option("--truth", sim_truth, "Ground-truth JSON path");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Boysen distances between change-point sets");
  std::string eval_est, eval_truth;
  std::size_t eval_T = 0;
  eval_cmd->add_option("--est", eval_est, "Estimated change-points, comma-separated")->required();
  eval_cmd->add_option("--truth", eval_truth, "True change-points, comma-separated")->required();
  eval_cmd->add_option("--T", eval_T, "Sequence length")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Monte Carlo benchmark row for a scenario");
  ScenarioSpec bench;
  std::size_t reps = 100;
  std::string bench_output = "-";
  detail::TuningFlags bench_tuning;
  bench_cmd->add_option("--scenario", bench.id, "Scenario id")->required();
  bench_cmd->add_option("--n", bench.n, "Node count")->required();
  bench_cmd->add_option("--T", bench.T, "Snapshot count")->required();
  bench_cmd->add_option("--seed", bench.seed, "Master seed (replication r uses seed + r)")
      ->required();
  bench_cmd->add_option("--reps", reps, "Replications");
  bench_cmd->add_option("--output", bench_output, "Bench CSV path ('-' = stdout)");
  bench_tuning.attach(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  const Exec exec{threads};
  try {
    if (detect_cmd->parsed()) {
      const auto seq = read_edge_csv(detect_input, {detect_n, detect_T});
      const DetectorParams params = detect_tuning.resolve(seq.T());
      if (min_gap) {
        if (auto warning = min_gap_warning(params, *min_gap)) err << "warning: " << *warning << '\n';
      }
      const ChangePointReport report = detect(seq, params, exec);
      detail::emit(detect_output, out, [&](std::ostream& os) { write_report_json(os, report); });
      if (!scan_out.empty()) {
        detail::emit(scan_out, out, [&](std::ostream& os) { write_scan_csv(os, report.scan); });
      }
    } else if (estimate_cmd->parsed()) {
      const auto seq = read_edge_csv(est_input, {est_n, est_T});
      const std::size_t from = est_from ? *est_from + 1 : 1;
      const std::size_t to = est_to ? *est_to + 1 : seq.T();
      const SymMatrix abar = average_adjacency(seq, from, to);
      const std::size_t window = to - from + 1;
      LinkProbMatrix estimate;
      if (method == "musvt") {
        estimate = musvt_estimate(abar, window, eta);
      } else {
        EstimatorConfig{est_B0, eta}.validate();
        estimate = mnbs_fit(abar, window, est_B0, exec).estimate;
      }
      detail::emit(est_output, out, [&](std::ostream& os) { write_matrix_csv(os, estimate); });
    } else if (simulate_cmd->parsed()) {
      const auto [seq, truth] = scenario_sequence(sim, exec);
      detail::emit(sim_output, out, [&](std::ostream& os) { write_edge_csv(os, seq); });
      if (!sim_truth.empty()) {
        detail::emit(sim_truth, out, [&](std::ostream& os) { os << truth_json(sim, truth) << '\n'; });
      }
    } else if (eval_cmd->parsed()) {
      const auto result = boysen(parse_index_list(eval_est), parse_index_list(eval_truth), eval_T);
      out << boysen_json(result) << '\n';
    } else if (bench_cmd->parsed()) {
      const DetectorParams params = bench_tuning.resolve(bench.T);
      const BenchRow row = monte_carlo(bench, reps, params, exec);
      detail::emit(bench_output, out, [&](std::ostream& os) {
        os << bench_csv_header << '\n' << bench_csv_line(row) << '\n';
      });
    }
  } catch (const parameter_error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const numeric_error& e) {
    err << "numeric error: " << e.what() << '\n';
    return ExitCode::numeric;
  } catch (const std::exception& e) {
    err << "data error: " << e.what() << '\n';
    return ExitCode::data;
  }
  return ExitCode::ok;
}

}  // namespace graphon_cpd::cli
