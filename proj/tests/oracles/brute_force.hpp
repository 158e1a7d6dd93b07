#pragma once

// Slow reference implementations used only by tests. Each follows the
// defining formula literally on plain nested vectors.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<double>>;

template <class M>
Mat to_mat(const M& m) {
  Mat out(m.n(), std::vector<double>(m.n()));
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) out[i][j] = static_cast<double>(m(i, j));
  }
  return out;
}

/// d(i,i') = max_{k != i,i'} |(A^2/n)_{ik} - (A^2/n)_{i'k}|.
inline Mat pairwise_distance(const Mat& a) {
  const std::size_t n = a.size();
  Mat sq(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t lo = std::min(i, k);
      const std::size_t hi = std::max(i, k);
      double s = 0.0;
      for (std::size_t l = 0; l < n; ++l) s += a[lo][l] * a[hi][l];
      sq[i][k] = s / static_cast<double>(n);
    }
  }
  Mat d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t ip = 0; ip < n; ++ip) {
      if (i == ip) continue;
      double best = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == ip) continue;
        const double diff = std::fabs(sq[i][k] - sq[ip][k]);
        if (diff > best) best = diff;
      }
      d[i][ip] = best;
    }
  }
  return d;
}

/// Lower q-quantile neighborhoods by sorting every row.
inline std::vector<std::vector<std::size_t>> neighborhoods(const Mat& d, double q) {
  const std::size_t n = d.size();
  std::size_t m = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n - 1)));
  if (m < 1) m = 1;
  if (m > n - 1) m = n - 1;
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> vals;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i) vals.push_back(d[i][k]);
    }
    std::sort(vals.begin(), vals.end());
    const double cut = vals[m - 1];
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i && d[i][k] <= cut) out[i].push_back(k);
    }
  }
  return out;
}

/// Raw neighborhood row averages, then (P + P^T) / 2.
inline Mat mnbs_smooth(const Mat& a, const std::vector<std::vector<std::size_t>>& nb) {
  const std::size_t n = a.size();
  Mat raw(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t ip : nb[i]) s += a[ip][j];
      raw[i][j] = s / static_cast<double>(nb[i].size());
    }
  }
  Mat out(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t lo = std::min(i, j);
      const std::size_t hi = std::max(i, j);
      out[i][j] = (raw[lo][hi] + raw[hi][lo]) / 2.0;
    }
  }
  return out;
}

/// Values indexed by t - h, domain [h, T - h].
inline std::vector<std::size_t> local_maximizers(const std::vector<double>& values, std::size_t h) {
  const long lo = static_cast<long>(h);
  const long hi = lo + static_cast<long>(values.size()) - 1;
  const long hh = static_cast<long>(h);
  auto at = [&](long t) { return values[static_cast<std::size_t>(t - lo)]; };
  std::vector<long> qualifying;
  for (long x = lo; x <= hi; ++x) {
    bool ok = true;
    for (long t = x - hh + 1; t <= x + hh - 1; ++t) {
      if (t < lo || t > hi) continue;
      if (at(t) > at(x)) ok = false;
    }
    if (ok) qualifying.push_back(x);
  }
  std::vector<std::size_t> kept;
  long last = std::numeric_limits<long>::min() / 2;
  for (long x : qualifying) {
    if (x - last >= hh) {
      kept.push_back(static_cast<std::size_t>(x));
      last = x;
    }
  }
  return kept;
}

/// sup_{b in to} inf_{a in from} |a - b|.
inline double sup_inf(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
  double sup = 0.0;
  for (std::size_t b : to) {
    double inf = std::numeric_limits<double>::infinity();
    for (std::size_t a : from) {
      inf = std::min(inf, std::fabs(static_cast<double>(a) - static_cast<double>(b)));
    }
    sup = std::max(sup, inf);
  }
  return sup;
}

struct Boysen {
  std::optional<double> xi1;
  std::optional<double> xi2;
};

inline Boysen boysen(const std::vector<std::size_t>& est, const std::vector<std::size_t>& truth,
                     std::size_t T) {
  if (truth.empty() && est.empty()) return {0.0, 0.0};
  if (est.empty()) {
    return {static_cast<double>(*std::max_element(truth.begin(), truth.end())), std::nullopt};
  }
  if (truth.empty()) return {0.0, sup_inf({0, T}, est)};
  return {sup_inf(est, truth), sup_inf(truth, est)};
}

}  // namespace oracle
