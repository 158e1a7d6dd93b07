#pragma once

// Link-probability estimation from a window of snapshots.
//
// MNBS: rows of the window average are smoothed over a data-driven
// neighborhood of structurally similar nodes. The neighborhood of node i
// collects the nodes whose distance
//     d(i, i') = max_{k != i, i'} |(A^2/n)_{ik} - (A^2/n)_{i'k}|
// is at most the lower q-quantile of i's distances, with
//     q = B0 log n / (n^{1/2} omega),   omega = min(n^{1/2}, (w log n)^{1/2})
// for a window of w snapshots.
//
// MUSVT: spectral truncation of the window average at (2 + eta) (n/w)^{1/2},
// clipped to [0, 1].

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphon_cpd/error.hpp"
#include "graphon_cpd/netcore.hpp"
#include "graphon_cpd/parallel.hpp"

namespace graphon_cpd {

struct EstimatorConfig {
  double B0 = 3.0;
  double eta = 0.01;

  void validate() const {
    if (!(B0 > 0.0) || !std::isfinite(B0)) throw parameter_error("B0 must be a positive real");
    if (!(eta > 0.0 && eta < 1.0)) throw parameter_error("eta must lie in (0,1)");
  }
};

/// Per-node neighbor lists (0-based, ascending, never containing the node).
struct NeighborSets {
  std::vector<std::vector<std::size_t>> members;

  [[nodiscard]] std::size_t n() const noexcept { return members.size(); }
  [[nodiscard]] const std::vector<std::size_t>& operator[](std::size_t i) const {
    return members[i];
  }
  [[nodiscard]] std::size_t min_size() const noexcept {
    std::size_t m = members.empty() ? 0 : members.front().size();
    for (const auto& s : members) m = std::min(m, s.size());
    return m;
  }

  friend bool operator==(const NeighborSets&, const NeighborSets&) = default;
};

/// A^2 / n with each inner product summed in ascending index order.
inline SquareMatrix<double> normalized_square(const SymMatrix& abar, Exec exec = {}) {
  const std::size_t n = abar.n();
  SquareMatrix<double> g(n, 0.0);
  const auto nn = static_cast<double>(n);
  parallel_for(n, exec, [&](std::size_t i) {
    const auto ri = abar.row(i);
    for (std::size_t k = i; k < n; ++k) {
      const auto rk = abar.row(k);
      double s = 0.0;
      for (std::size_t l = 0; l < n; ++l) s += ri[l] * rk[l];
      g(i, k) = s / nn;
    }
  });
  detail::mirror_upper(g);
  return g;
}

/// Node distance matrix d(i, i') built from one A^2 product. Needs n >= 3.
inline SymMatrix pairwise_distance(const SymMatrix& abar, Exec exec = {}) {
  const std::size_t n = abar.n();
  if (n < 3) throw parameter_error("pairwise_distance needs n >= 3");
  const SquareMatrix<double> g = normalized_square(abar, exec);
  SquareMatrix<double> d(n, 0.0);
  parallel_for(n, exec, [&](std::size_t i) {
    const auto gi = g.row(i);
    for (std::size_t ip = i + 1; ip < n; ++ip) {
      const auto gp = g.row(ip);
      double worst = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == ip) continue;
        worst = std::max(worst, std::abs(gi[k] - gp[k]));
      }
      d(i, ip) = worst;
    }
  });
  return SymMatrix::from_upper(std::move(d));
}

/// Rank of the quantile cut: max(1, ceil(q (n - 1))), capped at n - 1.
inline std::size_t quantile_rank(std::size_t n, double q) {
  const double raw = std::ceil(q * static_cast<double>(n - 1));
  auto m = static_cast<std::size_t>(std::max(1.0, raw));
  return std::min(m, n - 1);
}

/// Lower empirical q-quantile neighborhoods; ties at the cut are kept.
inline NeighborSets neighborhoods(const SymMatrix& dist, double q) {
  if (!(q > 0.0 && q <= 1.0)) throw parameter_error("quantile q must lie in (0,1]");
  const std::size_t n = dist.n();
  if (n < 2) throw parameter_error("neighborhoods need n >= 2");
  const std::size_t m = quantile_rank(n, q);

  NeighborSets out;
  out.members.resize(n);
  std::vector<double> others(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pos = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i) others[pos++] = dist(i, k);
    }
    std::nth_element(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(m - 1),
                     others.end());
    const double cut = others[m - 1];
    auto& members = out.members[i];
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i && dist(i, k) <= cut) members.push_back(k);
    }
  }
  return out;
}

/// Bandwidth omega = min(n^{1/2}, (w log n)^{1/2}) for a window of w snapshots.
inline double mnbs_bandwidth(std::size_t n, std::size_t window) {
  const auto nn = static_cast<double>(n);
  return std::min(std::sqrt(nn), std::sqrt(static_cast<double>(window) * std::log(nn)));
}

/// Neighborhood quantile min(1, B0 log n / (n^{1/2} omega)).
inline double mnbs_q(std::size_t n, double omega, double B0) {
  if (n < 3) throw parameter_error("mnbs_q needs n >= 3");
  if (!(omega > 0.0)) throw parameter_error("omega must be positive");
  if (!(B0 > 0.0)) throw parameter_error("B0 must be positive");
  const auto nn = static_cast<double>(n);
  return std::min(1.0, B0 * std::log(nn) / (std::sqrt(nn) * omega));
}

/// Averages rows of A-bar over each neighborhood, then symmetrizes.
inline LinkProbMatrix mnbs_smooth(const SymMatrix& abar, const NeighborSets& nbhd,
                                  Exec exec = {}) {
  const std::size_t n = abar.n();
  if (nbhd.n() != n) throw dimension_error("neighbor sets and matrix sizes differ");
  for (std::size_t i = 0; i < n; ++i) {
    if (nbhd[i].empty()) throw parameter_error("empty neighborhood for node " + std::to_string(i));
  }
  SquareMatrix<double> raw(n, 0.0);
  parallel_for(n, exec, [&](std::size_t i) {
    auto out = raw.row(i);
    for (std::size_t ip : nbhd[i]) {
      const auto src = abar.row(ip);
      for (std::size_t j = 0; j < n; ++j) out[j] += src[j];
    }
    const auto size = static_cast<double>(nbhd[i].size());
    for (double& v : out) v /= size;
  });
  SquareMatrix<double> sym(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) sym(i, j) = (raw(i, j) + raw(j, i)) / 2.0;
  }
  return LinkProbMatrix::from_upper(std::move(sym));
}

/// Everything produced by one MNBS fit.
struct MnbsFit {
  LinkProbMatrix estimate;
  NeighborSets neighbors;
  double omega = 0.0;
  double q = 0.0;
};

/// MNBS from a precomputed window average of `window` snapshots.
inline MnbsFit mnbs_fit(const SymMatrix& abar, std::size_t window, double B0, Exec exec = {}) {
  const std::size_t n = abar.n();
  if (n < 3) throw parameter_error("MNBS needs n >= 3");
  if (window < 1) throw parameter_error("window length must be >= 1");
  MnbsFit fit;
  fit.omega = mnbs_bandwidth(n, window);
  fit.q = mnbs_q(n, fit.omega, B0);
  fit.neighbors = neighborhoods(pairwise_distance(abar, exec), fit.q);
  fit.estimate = mnbs_smooth(abar, fit.neighbors, exec);
  return fit;
}

/// MNBS estimate of P from snapshots [from, to] (1-based, inclusive).
inline LinkProbMatrix mnbs_estimate(const AdjacencySequence& seq, std::size_t from, std::size_t to,
                                    const EstimatorConfig& cfg = {}, Exec exec = {}) {
  cfg.validate();
  return mnbs_fit(average_adjacency(seq, from, to), to - from + 1, cfg.B0, exec).estimate;
}

/// Spectral cutoff (2 + eta) (n / window)^{1/2}.
inline double musvt_cutoff(std::size_t n, std::size_t window, double eta) {
  return (2.0 + eta) * std::sqrt(static_cast<double>(n) / static_cast<double>(window));
}

/// MUSVT estimate from a window average over `window` snapshots.
inline LinkProbMatrix musvt_estimate(const SymMatrix& abar, std::size_t window, double eta) {
  const std::size_t n = abar.n();
  if (n < 1) throw parameter_error("MUSVT needs n >= 1");
  if (window < 1) throw parameter_error("window length must be >= 1");
  if (!(eta > 0.0 && eta < 1.0)) throw parameter_error("eta must lie in (0,1)");

  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd a(dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = abar(i, j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
  if (eig.info() != Eigen::Success) {
    throw numeric_error("eigendecomposition of the window average failed");
  }
  const double cutoff = musvt_cutoff(n, window, eta);
  const auto& values = eig.eigenvalues();
  const auto& vectors = eig.eigenvectors();
  Eigen::MatrixXd kept = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    if (std::abs(values(c)) >= cutoff) {
      kept.noalias() += values(c) * vectors.col(c) * vectors.col(c).transpose();
    }
  }
  SquareMatrix<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto ii = static_cast<Eigen::Index>(i);
      const auto jj = static_cast<Eigen::Index>(j);
      const double v = 0.5 * (kept(ii, jj) + kept(jj, ii));
      out(i, j) = std::clamp(v, 0.0, 1.0);
    }
  }
  return LinkProbMatrix::from_upper(std::move(out));
}

}  // namespace graphon_cpd
