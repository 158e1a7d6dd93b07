#pragma once

// Synthetic dynamic networks: stochastic block models, graphons and the
// benchmark change-point scenarios with their ground truth.
//
// Node i below is 1-based where the block memberships are written out, to
// keep the floor arithmetic readable; storage is 0-based.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "graphon_cpd/error.hpp"
#include "graphon_cpd/netcore.hpp"
#include "graphon_cpd/parallel.hpp"
#include "graphon_cpd/random.hpp"

namespace graphon_cpd {

enum class SbmId { I = 1, II, III, IV, V, VI, VII, VIII, IX, X, XI };
enum class GraphonId { I = 1, II, III };

using ModelId = std::variant<SbmId, GraphonId>;

namespace detail {

inline constexpr std::array<std::string_view, 11> roman = {"I",   "II", "III",  "IV", "V", "VI",
                                                           "VII", "VIII", "IX", "X",  "XI"};

inline std::optional<int> parse_roman(std::string_view s, int max) {
  for (int k = 0; k < max; ++k) {
    if (roman[static_cast<std::size_t>(k)] == s) return k + 1;
  }
  return std::nullopt;
}

}  // namespace detail

inline std::string to_string(SbmId id) {
  return "SBM-" + std::string(detail::roman[static_cast<std::size_t>(id) - 1]);
}
inline std::string to_string(GraphonId id) {
  return "Graphon-" + std::string(detail::roman[static_cast<std::size_t>(id) - 1]);
}
inline std::string to_string(const ModelId& id) {
  return std::visit([](auto v) { return to_string(v); }, id);
}

inline std::optional<ModelId> parse_model_id(std::string_view s) {
  if (s.starts_with("SBM-")) {
    if (auto k = detail::parse_roman(s.substr(4), 11)) return ModelId{static_cast<SbmId>(*k)};
  } else if (s.starts_with("Graphon-")) {
    if (auto k = detail::parse_roman(s.substr(8), 3)) return ModelId{static_cast<GraphonId>(*k)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Stochastic block models

/// Block membership (1-based block labels, 0-based nodes) and connectivity.
struct SbmSpec {
  SbmId id = SbmId::I;
  std::size_t KB = 0;
  std::vector<std::size_t> membership;
  std::vector<std::vector<double>> Lambda;
};

/// floor(n^{3/4}) without floating-point drift: largest m with m^4 <= n^3.
inline std::size_t floor_pow_three_quarters(std::size_t n) {
  if (n >= (std::uint64_t{1} << 21)) throw parameter_error("n too large for exact n^{3/4}");
  auto m = static_cast<std::size_t>(std::pow(static_cast<double>(n), 0.75));
  const std::uint64_t n3 = std::uint64_t{n} * n * n;
  auto fourth = [](std::uint64_t v) { return v * v * v * v; };
  while (m > 0 && fourth(m) > n3) --m;
  while (fourth(m + 1) <= n3) ++m;
  return m;
}

inline SbmSpec sbm_spec(SbmId id, std::size_t n, double delta) {
  if (n < 1) throw parameter_error("SBM needs n >= 1");
  const double d = delta;
  const std::size_t third = n / 3;

  auto two_blocks = [&](std::size_t boundary) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 1; i <= n; ++i) m[i - 1] = i <= boundary ? 1 : 2;
    return m;
  };
  auto three_blocks = [&] {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 1; i <= n; ++i) m[i - 1] = i <= third ? 1 : (i <= 2 * third ? 2 : 3);
    return m;
  };

  using L = std::vector<std::vector<double>>;
  const L lambda1 = {{0.6, 0.6 - d, 0.3}, {0.6 - d, 0.6, 0.3}, {0.3, 0.3, 0.6}};
  const L lambda2 = {{0.6 + d, 0.6, 0.3}, {0.6, 0.6 + d, 0.3}, {0.3, 0.3, 0.6}};
  const L lambda3 = {{0.6, 0.3}, {0.3, 0.6}};
  const L lambda4 = {{0.6 + d, 0.6 - d, 0.3}, {0.6 - d, 0.6 + d, 0.3}, {0.3, 0.3, 0.6}};
  const L lambda5 = {{0.6, 0.6 - d}, {0.6 - d, 0.6}};

  SbmSpec spec;
  spec.id = id;
  switch (id) {
    case SbmId::I:
      spec.membership = two_blocks(2 * third);
      spec.Lambda = lambda3;
      break;
    case SbmId::II: {
      if (!(d >= 0.0 && d <= 1.0)) {
        throw parameter_error("SBM-II needs delta in [0,1], got " + std::to_string(d));
      }
      const auto part = static_cast<std::size_t>(std::floor(static_cast<double>(n) * (1.0 - d) / 3.0));
      spec.membership = two_blocks(2 * part);
      spec.Lambda = lambda3;
      break;
    }
    case SbmId::III:
      spec.membership = three_blocks();
      spec.Lambda = lambda1;
      break;
    case SbmId::IV:
      spec.membership = three_blocks();
      spec.Lambda = lambda2;
      break;
    case SbmId::V:
      spec.membership = three_blocks();
      spec.Lambda = lambda4;
      break;
    case SbmId::VI:
      spec.membership = two_blocks(2 * third);
      spec.Lambda = lambda5;
      break;
    case SbmId::VII:
      // 2 floor(n/3) - 1 can be negative for n < 3; clamp to no first block.
      spec.membership = two_blocks(third == 0 ? 0 : 2 * third - 1);
      spec.Lambda = lambda5;
      break;
    case SbmId::VIII:
      spec.membership = two_blocks(floor_pow_three_quarters(n));
      spec.Lambda = lambda3;
      break;
    case SbmId::IX:
      spec.membership = two_blocks(floor_pow_three_quarters(n));
      spec.Lambda = {{0.6 - d, 0.3}, {0.3, 0.6}};
      break;
    case SbmId::X:
      spec.membership = two_blocks(n / 2);
      spec.Lambda = lambda5;
      break;
    case SbmId::XI: {
      std::vector<std::size_t> m(n);
      for (std::size_t i = 1; i <= n; ++i) m[i - 1] = (i % 2 == 1) ? 1 : 2;
      spec.membership = std::move(m);
      spec.Lambda = lambda5;
      break;
    }
  }
  spec.KB = spec.Lambda.size();
  for (const auto& row : spec.Lambda) {
    for (double v : row) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw parameter_error(to_string(id) + " block probability " + std::to_string(v) +
                              " outside [0,1]");
      }
    }
  }
  return spec;
}

/// P_ij = Lambda[M(i)][M(j)].
inline LinkProbMatrix sbm_matrix(const SbmSpec& spec) {
  const std::size_t n = spec.membership.size();
  SquareMatrix<double> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      p(i, j) = spec.Lambda[spec.membership[i] - 1][spec.membership[j] - 1];
    }
  }
  return LinkProbMatrix::from_upper(std::move(p));
}

inline LinkProbMatrix sbm_matrix(SbmId id, std::size_t n, double delta) {
  return sbm_matrix(sbm_spec(id, n, delta));
}

// ---------------------------------------------------------------------------
// Graphons

/// Diagonal block count of Graphon-I: floor(log n), at least 1.
inline std::size_t graphon1_blocks(std::size_t n) {
  const auto kb = static_cast<std::size_t>(std::floor(std::log(static_cast<double>(n))));
  return std::max<std::size_t>(1, kb);
}

/// f(u, v) for the three test graphons. `kb` is only used by Graphon-I.
inline double graphon_value(GraphonId id, double u, double v, std::size_t kb) {
  switch (id) {
    case GraphonId::I: {
      const auto k = static_cast<double>(kb);
      auto block = [&](double x) {
        return std::min(kb, static_cast<std::size_t>(std::floor(x * k)) + 1);
      };
      const std::size_t bu = block(u);
      if (bu == block(v)) return static_cast<double>(bu) / (k + 1.0);
      return 0.3 / (k + 1.0);
    }
    case GraphonId::II:
      return std::sin(5.0 * std::numbers::pi * (u + v - 1.0) + 1.0) / 2.0 + 0.5;
    case GraphonId::III: {
      const double r = u * u + v * v;
      if (r == 0.0) return 0.15;
      return r / 3.0 * std::cos(1.0 / r) + 0.15;
    }
  }
  return 0.0;
}

/// P_ij = f(xi_i, xi_j).
inline LinkProbMatrix graphon_matrix(GraphonId id, std::span<const double> xi) {
  const std::size_t n = xi.size();
  if (n < 1) throw parameter_error("graphon matrix needs n >= 1");
  for (double x : xi) {
    if (!(x >= 0.0 && x <= 1.0)) throw parameter_error("latent positions must lie in [0,1]");
  }
  const std::size_t kb = graphon1_blocks(n);
  SquareMatrix<double> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) p(i, j) = graphon_value(id, xi[i], xi[j], kb);
  }
  return LinkProbMatrix::from_upper(std::move(p));
}

/// Uniform latent positions drawn from the seed's latent substream.
inline std::vector<double> latent_positions(std::size_t n, std::uint64_t seed) {
  std::vector<double> xi(n);
  for (std::size_t i = 0; i < n; ++i) {
    xi[i] = uniform_at(seed, 0, static_cast<std::uint32_t>(i), 0, StreamTag::latent_positions);
  }
  return xi;
}

// ---------------------------------------------------------------------------
// Sampling

/// Upper triangle (diagonal included) drawn as independent Bernoulli(P_ij).
inline AdjacencySnapshot sample_snapshot(const LinkProbMatrix& p, const SnapshotStream& stream) {
  const std::size_t n = p.n();
  SquareMatrix<std::uint8_t> a(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double u = stream.uniform(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      a(i, j) = u < p(i, j) ? 1 : 0;
    }
  }
  return AdjacencySnapshot::from_upper(std::move(a));
}

// ---------------------------------------------------------------------------
// Scenarios

/// How a segment's Delta_nT depends on (n, T).
enum class DeltaRule {
  none,          // model has no Delta parameter
  slow,          // 1 / (n^{1/6} T^{1/8})
  fast,          // 2 / (n^{1/3} T^{1/4})
  time_only,     // 1 / T^{1/8}
};

inline double delta_value(DeltaRule rule, std::size_t n, std::size_t T) {
  const auto nn = static_cast<double>(n);
  const auto tt = static_cast<double>(T);
  switch (rule) {
    case DeltaRule::none: return 0.0;
    case DeltaRule::slow: return 1.0 / (std::pow(nn, 1.0 / 6.0) * std::pow(tt, 1.0 / 8.0));
    case DeltaRule::fast: return 2.0 / (std::pow(nn, 1.0 / 3.0) * std::pow(tt, 1.0 / 4.0));
    case DeltaRule::time_only: return 1.0 / std::pow(tt, 1.0 / 8.0);
  }
  return 0.0;
}

struct SegmentModel {
  ModelId model;
  DeltaRule rule = DeltaRule::none;
};

/// A named scenario: equal-length segments, one model each.
struct ScenarioDef {
  std::string id;
  std::vector<SegmentModel> segments;
};

inline const std::vector<ScenarioDef>& change_scenarios() {
  using enum SbmId;
  static const std::vector<ScenarioDef> defs = {
      {"DSBM-I", {{III, DeltaRule::slow}, {I, DeltaRule::none}}},
      {"DSBM-II", {{III, DeltaRule::slow}, {V, DeltaRule::slow}}},
      {"DSBM-III", {{VI, DeltaRule::slow}, {VII, DeltaRule::slow}}},
      {"DSBM-IV", {{I, DeltaRule::none}, {II, DeltaRule::fast}}},
      {"DSBM-V", {{VIII, DeltaRule::none}, {IX, DeltaRule::time_only}}},
      {"DSBM-VI", {{X, DeltaRule::slow}, {XI, DeltaRule::slow}}},
      {"MDSBM-I",
       {{II, DeltaRule::fast}, {I, DeltaRule::none}, {III, DeltaRule::slow}, {V, DeltaRule::slow}}},
      {"MDSBM-II",
       {{II, DeltaRule::fast},
        {I, DeltaRule::none},
        {III, DeltaRule::slow},
        {I, DeltaRule::none},
        {IV, DeltaRule::slow}}},
  };
  return defs;
}

inline constexpr std::string_view nochange_prefix = "NOCHANGE-";

/// Looks up a scenario id: a change scenario or NOCHANGE-<model>.
inline ScenarioDef scenario_def(std::string_view id) {
  for (const auto& def : change_scenarios()) {
    if (def.id == id) return def;
  }
  if (id.starts_with(nochange_prefix)) {
    if (auto model = parse_model_id(id.substr(nochange_prefix.size()))) {
      // Delta-parameterized models use the slow rule when held fixed.
      DeltaRule rule = DeltaRule::none;
      if (const auto* sbm = std::get_if<SbmId>(&*model)) {
        switch (*sbm) {
          case SbmId::I:
          case SbmId::VIII: rule = DeltaRule::none; break;
          default: rule = DeltaRule::slow; break;
        }
      }
      return {std::string(id), {{*model, rule}}};
    }
  }
  throw parameter_error("unknown scenario id '" + std::string(id) + "'");
}

/// Delta_nT of segment `segment` (0-based) of a scenario.
inline double delta_nT(std::string_view scenario, std::size_t n, std::size_t T,
                       std::size_t segment = 0) {
  if (n < 1 || T < 1) throw parameter_error("delta_nT needs positive n and T");
  const ScenarioDef def = scenario_def(scenario);
  if (segment >= def.segments.size()) throw range_error("segment index out of range");
  return delta_value(def.segments[segment].rule, n, T);
}

struct ScenarioSpec {
  std::string id;
  std::size_t n = 0;
  std::size_t T = 0;
  std::uint64_t seed = 0;
};

struct GroundTruth {
  std::vector<std::size_t> changepoints;
  std::vector<LinkProbMatrix> segments;
};

/// Segment matrices P_1..P_{J+1} of a scenario (graphons use the seed's
/// latent positions, shared by all segments).
inline std::vector<LinkProbMatrix> segment_matrices(const ScenarioSpec& spec) {
  const ScenarioDef def = scenario_def(spec.id);
  std::vector<LinkProbMatrix> out;
  std::optional<std::vector<double>> xi;
  for (const auto& seg : def.segments) {
    if (const auto* sbm = std::get_if<SbmId>(&seg.model)) {
      out.push_back(sbm_matrix(*sbm, spec.n, delta_value(seg.rule, spec.n, spec.T)));
    } else {
      if (!xi) xi = latent_positions(spec.n, spec.seed);
      out.push_back(graphon_matrix(std::get<GraphonId>(seg.model), *xi));
    }
  }
  return out;
}

/// Samples the scenario. Snapshot t uses substream (seed, t).
inline std::pair<AdjacencySequence, GroundTruth> scenario_sequence(const ScenarioSpec& spec,
                                                                   Exec exec = {}) {
  if (spec.n < 6) throw parameter_error("scenarios need n >= 6");
  const ScenarioDef def = scenario_def(spec.id);
  const std::size_t parts = def.segments.size();
  if (spec.T < parts || spec.T % parts != 0) {
    throw parameter_error(spec.id + " needs T divisible by " + std::to_string(parts) +
                          ", got T=" + std::to_string(spec.T));
  }
  GroundTruth truth;
  truth.segments = segment_matrices(spec);
  const std::size_t len = spec.T / parts;
  for (std::size_t j = 1; j < parts; ++j) truth.changepoints.push_back(j * len);

  std::vector<AdjacencySnapshot> snaps(spec.T);
  parallel_for(spec.T, exec, [&](std::size_t k) {
    const std::size_t t = k + 1;
    const std::size_t segment = (t - 1) / len;
    snaps[k] = sample_snapshot(truth.segments[segment],
                               SnapshotStream{spec.seed, static_cast<std::uint32_t>(t)});
  });
  return {AdjacencySequence(std::move(snaps)), std::move(truth)};
}

}  // namespace graphon_cpd
