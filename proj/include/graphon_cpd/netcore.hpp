#pragma once

// Dense containers for dynamic networks, window averaging of snapshots and
// the two normalized matrix distances.
//
// Conventions: node ids are 0-based; time indices are 1-based and windows
// are inclusive, so the window [from, to] holds to - from + 1 snapshots.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphon_cpd/error.hpp"

namespace graphon_cpd {

/// Row-major n x n matrix.
template <class T>
class SquareMatrix {
 public:
  using value_type = T;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

  [[nodiscard]] std::size_t n() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  [[nodiscard]] std::span<T> row(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }
  [[nodiscard]] std::span<const T> row(std::size_t i) const noexcept {
    return {data_.data() + i * n_, n_};
  }

  [[nodiscard]] std::span<T> data() noexcept { return data_; }
  [[nodiscard]] std::span<const T> data() const noexcept { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

/// Anything with n() and (i, j) element access returning a real.
template <class M>
concept DenseMatrixLike = requires(const M& m, std::size_t i) {
  { m.n() } -> std::convertible_to<std::size_t>;
  { m(i, i) } -> std::convertible_to<double>;
};

namespace detail {

template <class T>
void mirror_upper(SquareMatrix<T>& m) {
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
  }
}

}  // namespace detail

/// One symmetric binary snapshot A^(t). Self-edges are allowed.
class AdjacencySnapshot {
 public:
  AdjacencySnapshot() = default;
  explicit AdjacencySnapshot(std::size_t n) : m_(n, 0) {
    if (n == 0) throw parameter_error("adjacency snapshot needs n >= 1");
  }

  /// Builds from a dense 0/1 matrix; the upper triangle is authoritative.
  static AdjacencySnapshot from_upper(SquareMatrix<std::uint8_t> m) {
    if (m.n() == 0) throw parameter_error("adjacency snapshot needs n >= 1");
    for (std::size_t i = 0; i < m.n(); ++i) {
      for (std::size_t j = i; j < m.n(); ++j) {
        if (m(i, j) > 1) throw data_error("adjacency entries must be 0 or 1");
      }
    }
    detail::mirror_upper(m);
    AdjacencySnapshot s;
    s.m_ = std::move(m);
    return s;
  }

  [[nodiscard]] std::size_t n() const noexcept { return m_.n(); }
  [[nodiscard]] std::uint8_t operator()(std::size_t i, std::size_t j) const noexcept {
    return m_(i, j);
  }

  void set_edge(std::size_t i, std::size_t j, bool present) {
    if (i >= n() || j >= n()) throw range_error("node id out of range");
    const auto v = static_cast<std::uint8_t>(present ? 1 : 0);
    m_(i, j) = v;
    m_(j, i) = v;
  }

  [[nodiscard]] const SquareMatrix<std::uint8_t>& matrix() const noexcept { return m_; }

  friend bool operator==(const AdjacencySnapshot&, const AdjacencySnapshot&) = default;

 private:
  SquareMatrix<std::uint8_t> m_;
};

/// Ordered snapshots A^(1..T) sharing one node count.
class AdjacencySequence {
 public:
  AdjacencySequence() = default;
  explicit AdjacencySequence(std::vector<AdjacencySnapshot> snapshots)
      : snapshots_(std::move(snapshots)) {
    if (snapshots_.empty()) throw parameter_error("adjacency sequence needs T >= 1");
    const std::size_t n = snapshots_.front().n();
    for (const auto& s : snapshots_) {
      if (s.n() != n) throw dimension_error("all snapshots must share the node count");
    }
  }

  [[nodiscard]] std::size_t n() const noexcept {
    return snapshots_.empty() ? 0 : snapshots_.front().n();
  }
  [[nodiscard]] std::size_t T() const noexcept { return snapshots_.size(); }

  /// 1-based access.
  [[nodiscard]] const AdjacencySnapshot& snapshot(std::size_t t) const {
    if (t < 1 || t > T()) throw range_error("time index out of range");
    return snapshots_[t - 1];
  }
  [[nodiscard]] const std::vector<AdjacencySnapshot>& snapshots() const noexcept {
    return snapshots_;
  }

  friend bool operator==(const AdjacencySequence&, const AdjacencySequence&) = default;

 private:
  std::vector<AdjacencySnapshot> snapshots_;
};

/// Dense real symmetric matrix (e.g. the window average A-bar).
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n, double fill = 0.0) : m_(n, fill) {}

  /// Mirrors the upper triangle of `m` into the lower one.
  static SymMatrix from_upper(SquareMatrix<double> m) {
    detail::mirror_upper(m);
    SymMatrix s;
    s.m_ = std::move(m);
    return s;
  }

  [[nodiscard]] std::size_t n() const noexcept { return m_.n(); }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
  [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept { return m_.row(i); }
  [[nodiscard]] const SquareMatrix<double>& matrix() const noexcept { return m_; }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  SquareMatrix<double> m_;
};

/// Symmetric matrix of link probabilities, every entry in [0, 1].
class LinkProbMatrix {
 public:
  LinkProbMatrix() = default;

  static LinkProbMatrix from_upper(SquareMatrix<double> m) {
    for (std::size_t i = 0; i < m.n(); ++i) {
      for (std::size_t j = i; j < m.n(); ++j) {
        const double v = m(i, j);
        if (!(v >= 0.0 && v <= 1.0)) {
          throw parameter_error("link probability outside [0,1] at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
        }
      }
    }
    LinkProbMatrix p;
    p.s_ = SymMatrix::from_upper(std::move(m));
    return p;
  }

  static LinkProbMatrix constant(std::size_t n, double value) {
    return from_upper(SquareMatrix<double>(n, value));
  }

  [[nodiscard]] std::size_t n() const noexcept { return s_.n(); }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept { return s_(i, j); }
  [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept { return s_.row(i); }
  [[nodiscard]] const SymMatrix& sym() const noexcept { return s_; }
  [[nodiscard]] const SquareMatrix<double>& matrix() const noexcept { return s_.matrix(); }

  friend bool operator==(const LinkProbMatrix&, const LinkProbMatrix&) = default;

 private:
  SymMatrix s_;
};

inline void check_window(const AdjacencySequence& seq, std::size_t from, std::size_t to) {
  if (from < 1 || to > seq.T() || from > to) {
    throw range_error("window [" + std::to_string(from) + "," + std::to_string(to) +
                      "] invalid for T=" + std::to_string(seq.T()));
  }
}

/// Entrywise mean of A^(from..to), summed in ascending t.
inline SymMatrix average_adjacency(const AdjacencySequence& seq, std::size_t from, std::size_t to) {
  check_window(seq, from, to);
  const std::size_t n = seq.n();
  SquareMatrix<double> sum(n, 0.0);
  for (std::size_t t = from; t <= to; ++t) {
    const auto& a = seq.snapshot(t).matrix().data();
    auto s = sum.data();
    for (std::size_t k = 0; k < s.size(); ++k) s[k] += static_cast<double>(a[k]);
  }
  const auto w = static_cast<double>(to - from + 1);
  for (double& v : sum.data()) v /= w;
  return SymMatrix::from_upper(std::move(sum));
}

/// Integer edge counts over a sliding window. Because counts are exact, the
/// derived average is bitwise identical to average_adjacency.
class WindowCounts {
 public:
  WindowCounts(const AdjacencySequence& seq, std::size_t from, std::size_t to)
      : seq_(&seq), from_(from), to_(to), counts_(seq.n(), 0) {
    check_window(seq, from, to);
    for (std::size_t t = from; t <= to; ++t) add(t, +1);
  }

  [[nodiscard]] std::size_t from() const noexcept { return from_; }
  [[nodiscard]] std::size_t to() const noexcept { return to_; }
  [[nodiscard]] std::size_t length() const noexcept { return to_ - from_ + 1; }

  /// Moves the window one step right: drops `from`, adds `to + 1`.
  void slide() {
    if (to_ + 1 > seq_->T()) throw range_error("cannot slide window past T");
    add(from_, -1);
    ++from_;
    ++to_;
    add(to_, +1);
  }

  [[nodiscard]] SymMatrix average() const {
    const std::size_t n = counts_.n();
    SquareMatrix<double> avg(n);
    const auto w = static_cast<double>(length());
    auto dst = avg.data();
    auto src = counts_.data();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = static_cast<double>(src[k]) / w;
    return SymMatrix::from_upper(std::move(avg));
  }

 private:
  void add(std::size_t t, int sign) {
    const auto& a = seq_->snapshot(t).matrix().data();
    auto c = counts_.data();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += sign * static_cast<std::int32_t>(a[k]);
  }

  const AdjacencySequence* seq_;
  std::size_t from_;
  std::size_t to_;
  SquareMatrix<std::int32_t> counts_;
};

namespace detail {

template <DenseMatrixLike P, DenseMatrixLike Q>
void require_same_size(const P& p, const Q& q) {
  if (p.n() != q.n()) {
    throw dimension_error("matrix sizes differ: " + std::to_string(p.n()) + " vs " +
                          std::to_string(q.n()));
  }
  if (p.n() == 0) throw dimension_error("empty matrices");
}

}  // namespace detail

/// Squared normalized 2,inf distance: max_i ||P_i. - Q_i.||^2 / n.
template <DenseMatrixLike P, DenseMatrixLike Q>
double dist_2inf_sq(const P& p, const Q& q) {
  detail::require_same_size(p, q);
  const std::size_t n = p.n();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double d = static_cast<double>(p(i, j)) - static_cast<double>(q(i, j));
      row += d * d;
    }
    worst = std::max(worst, row / static_cast<double>(n));
  }
  return worst;
}

/// Normalized 2,inf distance: max_i n^{-1/2} ||P_i. - Q_i.||_2.
template <DenseMatrixLike P, DenseMatrixLike Q>
double dist_2inf(const P& p, const Q& q) {
  return std::sqrt(dist_2inf_sq(p, q));
}

/// Squared normalized Frobenius distance: ||P - Q||_F^2 / n^2.
template <DenseMatrixLike P, DenseMatrixLike Q>
double dist_frob_sq(const P& p, const Q& q) {
  detail::require_same_size(p, q);
  const std::size_t n = p.n();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = static_cast<double>(p(i, j)) - static_cast<double>(q(i, j));
      total += d * d;
    }
  }
  const auto nn = static_cast<double>(n);
  return total / (nn * nn);
}

/// Normalized Frobenius distance: n^{-1} ||P - Q||_F.
template <DenseMatrixLike P, DenseMatrixLike Q>
double dist_frob(const P& p, const Q& q) {
  return std::sqrt(dist_frob_sq(p, q));
}

}  // namespace graphon_cpd
