// Simulates a two-segment dynamic SBM and runs the detector on it.

#include <iostream>

#include "graphon_cpd.hpp"

int main() {
  using namespace graphon_cpd;

  const ScenarioSpec spec{"DSBM-I", 100, 100, 7};
  const auto [seq, truth] = scenario_sequence(spec);

  const DetectorParams params = default_params(seq.T(), seq.n());
  const ChangePointReport report = detect(seq, params);

  std::cout << "threshold " << format_real(report.threshold) << '\n';
  std::cout << "estimated";
  for (auto t : report.changepoints) std::cout << ' ' << t;
  std::cout << "\ntruth    ";
  for (auto t : truth.changepoints) std::cout << ' ' << t;
  const BoysenResult d = boysen(report.changepoints, truth.changepoints, seq.T());
  std::cout << "\nboysen   " << boysen_json(d) << '\n';

  const LinkProbMatrix fit = mnbs_estimate(seq, 1, 50);
  std::cout << "d2inf^2 to truth on [1,50]: "
            << format_real(dist_2inf_sq(fit, truth.segments.front())) << '\n';
  return 0;
}
