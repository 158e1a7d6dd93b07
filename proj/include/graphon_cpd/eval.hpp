#pragma once

// Accuracy metrics and the Monte Carlo benchmark harness.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphon_cpd/cpd.hpp"
#include "graphon_cpd/error.hpp"
#include "graphon_cpd/genmodels.hpp"
#include "graphon_cpd/parallel.hpp"

namespace graphon_cpd {

/// Boysen distances. An empty optional marks the undefined case.
struct BoysenResult {
  std::optional<double> xi1;  // under-segmentation: worst true point to nearest estimate
  std::optional<double> xi2;  // over-segmentation: worst estimate to nearest true point

  friend bool operator==(const BoysenResult&, const BoysenResult&) = default;
};

namespace detail {

inline double sup_inf(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
  double worst = 0.0;
  for (std::size_t b : from) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a : to) {
      const double d = a > b ? static_cast<double>(a - b) : static_cast<double>(b - a);
      best = std::min(best, d);
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace detail

/// Boysen distances between estimated and true change-point sets in [1, T].
///
/// Empty-set conventions: no estimates but some truth gives xi1 = max(truth)
/// and xi2 undefined; both empty gives (0, 0); estimates without truth give
/// xi1 = 0 and xi2 measured against the boundary points {0, T}.
inline BoysenResult boysen(const std::vector<std::size_t>& est, const std::vector<std::size_t>& truth,
                           std::size_t T) {
  for (const auto* set : {&est, &truth}) {
    for (std::size_t t : *set) {
      if (t < 1 || t > T) {
        throw range_error("change-point " + std::to_string(t) + " outside [1," +
                          std::to_string(T) + "]");
      }
    }
  }
  if (truth.empty() && est.empty()) return {0.0, 0.0};
  if (est.empty()) {
    return {static_cast<double>(*std::max_element(truth.begin(), truth.end())), std::nullopt};
  }
  if (truth.empty()) {
    return {0.0, detail::sup_inf(est, {0, T})};
  }
  return {detail::sup_inf(truth, est), detail::sup_inf(est, truth)};
}

/// Squared 2,inf and squared Frobenius separation of consecutive segments.
struct SignalLevel {
  double d2inf_sq = 0.0;
  double frob_sq = 0.0;
};

/// Closed-form signal levels, one entry per change-point.
inline std::vector<SignalLevel> signal_levels(std::string_view scenario, std::size_t n,
                                              std::size_t T) {
  if (n < 1 || T < 1) throw parameter_error("signal levels need positive n and T");
  const auto nn = static_cast<double>(n);
  const auto tt = static_cast<double>(T);
  const double t4 = std::pow(tt, 0.25);
  const double a = t4 * std::cbrt(nn);
  const SignalLevel merge{1.0 / (3.0 * a), 2.0 / (9.0 * a)};
  const SignalLevel shift{0.09, 8.0 * 0.09 / (3.0 * a)};

  if (scenario == "DSBM-I" || scenario == "DSBM-II") return {merge};
  if (scenario == "DSBM-III") return {{1.0 / a, 2.0 / (nn * a)}};
  if (scenario == "DSBM-IV") return {shift};
  if (scenario == "DSBM-V") return {{1.0 / (t4 * std::pow(nn, 0.25)), 1.0 / (t4 * std::sqrt(nn))}};
  if (scenario == "DSBM-VI") return {{1.0 / (2.0 * a), 1.0 / (2.0 * a)}};
  if (scenario == "MDSBM-I") return {shift, merge, merge};
  if (scenario == "MDSBM-II") return {shift, merge, merge, merge};
  throw parameter_error("no signal levels for scenario '" + std::string(scenario) + "'");
}

/// One replication's outcome.
struct Replication {
  std::uint64_t seed = 0;
  std::vector<std::size_t> estimated;
  std::vector<std::size_t> truth;
  BoysenResult distances;
};

/// Aggregated Monte Carlo outcome (one benchmark table row).
struct BenchRow {
  std::string scenario;
  std::size_t T = 0;
  std::size_t n = 0;
  double mean_J = 0.0;
  double mean_xi1 = 0.0;
  std::optional<double> mean_xi2;  // over replications where xi2 is defined
  std::size_t reps = 0;
  std::size_t excluded = 0;        // replications with undefined xi2
  std::uint64_t seed = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

inline DetectorParams params_or_default(const std::optional<DetectorParams>& params,
                                        const ScenarioSpec& spec) {
  return params ? *params : default_params(spec.T, spec.n);
}

/// Replication r of a scenario: seed + r, sampled and detected serially.
inline Replication run_replication(const ScenarioSpec& scenario, std::size_t r,
                                   const DetectorParams& params) {
  ScenarioSpec spec = scenario;
  spec.seed = scenario.seed + r;
  auto [seq, truth] = scenario_sequence(spec, Exec{1});
  Replication out;
  out.seed = spec.seed;
  out.estimated = detect(seq, params, Exec{1}).changepoints;
  out.truth = std::move(truth.changepoints);
  out.distances = boysen(out.estimated, out.truth, spec.T);
  return out;
}

inline BenchRow summarize(const ScenarioSpec& scenario, const std::vector<Replication>& reps) {
  BenchRow row;
  row.scenario = scenario.id;
  row.T = scenario.T;
  row.n = scenario.n;
  row.reps = reps.size();
  row.seed = scenario.seed;
  double sum_j = 0.0;
  double sum_xi1 = 0.0;
  double sum_xi2 = 0.0;
  std::size_t defined = 0;
  for (const auto& r : reps) {
    sum_j += static_cast<double>(r.estimated.size());
    sum_xi1 += *r.distances.xi1;
    if (r.distances.xi2) {
      sum_xi2 += *r.distances.xi2;
      ++defined;
    }
  }
  const auto count = static_cast<double>(reps.size());
  row.mean_J = sum_j / count;
  row.mean_xi1 = sum_xi1 / count;
  if (defined > 0) row.mean_xi2 = sum_xi2 / static_cast<double>(defined);
  row.excluded = reps.size() - defined;
  return row;
}

/// Runs `reps` replications (seeds seed, seed+1, ...) in parallel and
/// aggregates them in replication order.
inline BenchRow monte_carlo(const ScenarioSpec& scenario, std::size_t reps,
                            const std::optional<DetectorParams>& params = std::nullopt,
                            Exec exec = {}) {
  if (reps < 1) throw parameter_error("monte_carlo needs reps >= 1");
  const DetectorParams p = params_or_default(params, scenario);
  std::vector<Replication> results(reps);
  parallel_for(reps, exec, [&](std::size_t r) { results[r] = run_replication(scenario, r, p); });
  return summarize(scenario, results);
}

}  // namespace graphon_cpd
