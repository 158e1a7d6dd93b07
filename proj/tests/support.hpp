#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "graphon_cpd.hpp"

namespace testing_support {

using namespace graphon_cpd;

/// Random symmetric 0/1 sequence with i.i.d. Bernoulli(p) upper triangle.
inline AdjacencySequence random_sequence(std::size_t n, std::size_t T, std::uint64_t seed,
                                         double p = 0.5) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<AdjacencySnapshot> snaps;
  for (std::size_t t = 0; t < T; ++t) {
    SquareMatrix<std::uint8_t> m(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) m(i, j) = coin(rng) ? 1 : 0;
    }
    snaps.push_back(AdjacencySnapshot::from_upper(std::move(m)));
  }
  return AdjacencySequence(std::move(snaps));
}

/// T draws from a fixed probability matrix.
inline AdjacencySequence sample_from(const LinkProbMatrix& p, std::size_t T, std::uint64_t seed) {
  std::vector<AdjacencySnapshot> snaps;
  for (std::size_t t = 1; t <= T; ++t) {
    snaps.push_back(sample_snapshot(p, SnapshotStream{seed, static_cast<std::uint32_t>(t)}));
  }
  return AdjacencySequence(std::move(snaps));
}

inline SymMatrix to_sym(const SquareMatrix<double>& m) { return SymMatrix::from_upper(m); }

}  // namespace testing_support
