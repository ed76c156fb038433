#ifndef MODLAB_RUNNER_HPP
#define MODLAB_RUNNER_HPP

#include <string>
#include <vector>

#include "modlab/modular.hpp"
#include "modlab/scenario.hpp"

namespace modlab {

/// Machine-readable verification results for one scenario.
struct Report {
  std::string scenario;
  std::vector<CheckRecord> checks;
  std::vector<double> delta_spectrum;  // ascending
  Eigen::Index dim_algebra = 0;
  Eigen::Index dim_commutant = 0;
  Eigen::Index dim_center = 0;

  int passed() const;
  int failed() const;
  /// Deterministic serialization (no timing fields), diffable as a golden file.
  std::string to_json() const;
};

/// Builds the scenario's model and runs the full check battery of the
/// relevant modules plus the universal modular battery.
Report run_scenario(const Scenario& sc);

/// Aggregate over the built-in scenarios whose tags match the filter
/// (empty filter keeps all), ordered by scenario name.
std::vector<Report> run_suite(const std::string& filter = "");

std::string format_report_text(const Report& rep);

}  // namespace modlab

#endif
