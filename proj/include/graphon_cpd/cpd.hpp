#pragma once

// Screening-and-thresholding multiple change-point detection.
//
// Screening: for t = h..T-h, D(t,h) is the squared normalized 2,inf distance
// between the MNBS estimates of the windows [t-h+1, t] and [t+1, t+h].
// Thresholding: an h-local maximizer t of D is reported when
//     D(t,h) > D0 (log n)^{1/2 + delta0} / (n^{1/2} h^{1/2}).

#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphon_cpd/error.hpp"
#include "graphon_cpd/estim.hpp"
#include "graphon_cpd/netcore.hpp"
#include "graphon_cpd/parallel.hpp"

namespace graphon_cpd {

struct DetectorParams {
  std::size_t h = 1;
  double B0 = 3.0;
  double D0 = 0.25;
  double delta0 = 0.1;

  /// Throws parameter_error unless the constants are positive and 2h <= T.
  void validate(std::size_t T) const {
    if (h < 1) throw parameter_error("window h must be >= 1");
    if (2 * h > T) {
      throw parameter_error("window h=" + std::to_string(h) + " violates 2h <= T (T=" +
                            std::to_string(T) + ")");
    }
    if (!(B0 > 0.0) || !std::isfinite(B0)) throw parameter_error("B0 must be a positive real");
    if (!(D0 > 0.0)) throw parameter_error("D0 must be positive");
    if (!(delta0 > 0.0) || !std::isfinite(delta0)) throw parameter_error("delta0 must be positive");
  }

  friend bool operator==(const DetectorParams&, const DetectorParams&) = default;
};

/// floor(sqrt(x)) computed exactly.
inline std::size_t isqrt(std::size_t x) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

/// h = floor(sqrt(T)), B0 = 3, D0 = 0.25, delta0 = 0.1.
inline DetectorParams default_params(std::size_t T, std::size_t n) {
  if (T < 4) throw parameter_error("default parameters need T >= 4");
  if (n < 3) throw parameter_error("default parameters need n >= 3");
  DetectorParams p;
  p.h = isqrt(T);
  return p;
}

/// Warning text when h is too wide for a known minimum segment length.
inline std::optional<std::string> min_gap_warning(const DetectorParams& p, std::size_t min_gap) {
  if (2 * p.h < min_gap) return std::nullopt;
  return "window h=" + std::to_string(p.h) + " is not below half the minimum segment length " +
         std::to_string(min_gap) + "; nearby change-points may merge";
}

/// D(t,h) for t in [h, T-h].
struct ScanProfile {
  std::size_t T = 0;
  std::size_t h = 0;
  std::vector<double> values;

  [[nodiscard]] std::size_t first() const noexcept { return h; }
  [[nodiscard]] std::size_t last() const noexcept { return T - h; }
  [[nodiscard]] bool contains(std::size_t t) const noexcept { return t >= first() && t <= last(); }
  [[nodiscard]] double at(std::size_t t) const {
    if (!contains(t)) throw range_error("scan index outside [h, T-h]");
    return values[t - h];
  }

  friend bool operator==(const ScanProfile&, const ScanProfile&) = default;
};

inline ScanProfile scan_profile(const AdjacencySequence& seq, const DetectorParams& params,
                                Exec exec = {}) {
  const std::size_t T = seq.T();
  const std::size_t n = seq.n();
  const std::size_t h = params.h;
  params.validate(T);
  if (n < 3) throw parameter_error("scan needs n >= 3");

  ScanProfile profile{T, h, std::vector<double>(T - 2 * h + 1, 0.0)};

  // Window s covers [s, s+h-1]. D(t) pairs windows t-h+1 and t+1; each worker
  // walks its windows in ascending s and keeps the last h estimates.
  parallel_chunks(profile.values.size(), exec, [&](std::size_t begin, std::size_t end) {
    const std::size_t t_lo = h + begin;
    const std::size_t t_hi = h + end - 1;
    const std::size_t s_lo = t_lo - h + 1;
    const std::size_t s_hi = t_hi + 1;
    auto needed = [&](std::size_t s) {
      return (s >= t_lo - h + 1 && s <= t_hi - h + 1) || (s >= t_lo + 1 && s <= t_hi + 1);
    };

    WindowCounts counts(seq, s_lo, s_lo + h - 1);
    std::deque<std::pair<std::size_t, LinkProbMatrix>> recent;
    for (std::size_t s = s_lo; s <= s_hi; ++s) {
      if (s > s_lo) counts.slide();
      if (!needed(s)) continue;
      recent.emplace_back(s, mnbs_fit(counts.average(), h, params.B0, Exec{1}).estimate);
      const std::size_t t = s - 1;
      if (t >= t_lo && t <= t_hi) {
        const std::size_t left = t - h + 1;
        const LinkProbMatrix* left_est = nullptr;
        for (const auto& [key, est] : recent) {
          if (key == left) left_est = &est;
        }
        profile.values[t - h] = dist_2inf_sq(*left_est, recent.back().second);
      }
      while (!recent.empty() && recent.front().first + h <= s) recent.pop_front();
    }
  });
  return profile;
}

/// h-local maximizers: D(x) >= D(t) for every t in [x-h+1, x+h-1] inside
/// the scan domain. Qualifying points closer than h to an already kept
/// point are dropped, so a flat peak reports its smallest t.
inline std::vector<std::size_t> local_maximizers(const ScanProfile& profile) {
  std::vector<std::size_t> kept;
  if (profile.values.empty()) return kept;
  const std::size_t h = profile.h;
  const std::size_t lo = profile.first();
  const std::size_t hi = profile.last();
  for (std::size_t x = lo; x <= hi; ++x) {
    const double dx = profile.at(x);
    const std::size_t from = (x >= lo + h - 1) ? x - h + 1 : lo;
    const std::size_t to = std::min(hi, x + h - 1);
    bool dominates = true;
    for (std::size_t t = from; t <= to && dominates; ++t) dominates = dx >= profile.at(t);
    if (!dominates) continue;
    if (!kept.empty() && x - kept.back() < h) continue;
    kept.push_back(x);
  }
  return kept;
}

/// D0 (log n)^{1/2 + delta0} / (n^{1/2} h^{1/2}).
inline double threshold_value(std::size_t n, const DetectorParams& params) {
  if (n < 3) throw parameter_error("threshold needs n >= 3");
  const auto nn = static_cast<double>(n);
  const auto hh = static_cast<double>(params.h);
  return params.D0 * std::pow(std::log(nn), 0.5 + params.delta0) / (std::sqrt(nn) * std::sqrt(hh));
}

/// Local maximizers whose scan value strictly exceeds `threshold`.
inline std::vector<std::size_t> threshold_changepoints(const ScanProfile& profile,
                                                       const std::vector<std::size_t>& maxima,
                                                       double threshold) {
  std::vector<std::size_t> out;
  for (std::size_t t : maxima) {
    if (profile.at(t) > threshold) out.push_back(t);
  }
  return out;
}

struct ChangePointReport {
  DetectorParams params;
  std::size_t n = 0;
  double threshold = 0.0;
  std::vector<std::size_t> local_max;
  std::vector<std::size_t> changepoints;
  ScanProfile scan;

  [[nodiscard]] std::size_t T() const noexcept { return scan.T; }
  [[nodiscard]] std::vector<double> changepoint_scores() const {
    std::vector<double> out;
    out.reserve(changepoints.size());
    for (std::size_t t : changepoints) out.push_back(scan.at(t));
    return out;
  }

  friend bool operator==(const ChangePointReport&, const ChangePointReport&) = default;
};

inline ChangePointReport detect(const AdjacencySequence& seq, const DetectorParams& params,
                                Exec exec = {}) {
  ChangePointReport report;
  report.params = params;
  report.n = seq.n();
  report.scan = scan_profile(seq, params, exec);
  report.threshold = threshold_value(seq.n(), params);
  report.local_max = local_maximizers(report.scan);
  report.changepoints = threshold_changepoints(report.scan, report.local_max, report.threshold);
  return report;
}

}  // namespace graphon_cpd
