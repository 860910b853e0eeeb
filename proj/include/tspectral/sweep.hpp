#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tspectral/bounds.hpp"

namespace tspectral {

/// Outcome of a randomized property sweep.
struct SweepResult {
  std::string property;
  Index trials = 0;
  Index passed = 0;
  /// False for properties that are only recorded (relax-bounds, geodesic-midpoint).
  bool asserted = true;
  /// Smallest margin seen over all trials; negative means a violation.
  double worst_margin = 0.0;
  /// First failing trial, or empty.
  std::string first_failure;
  /// Free-form summary of auxiliary quantities (for example the largest
  /// symmetrization residual of relax-bounds).
  std::string notes;
  /// Reports of the trials that failed, where the property has one.
  std::vector<BoundReport> violations;

  [[nodiscard]] Index failed() const { return trials - passed; }
  [[nodiscard]] bool ok() const { return !asserted || passed == trials; }
};

struct SweepOptions {
  Index trials = 100;
  std::uint64_t seed = 0;
  /// Random partial isometries tried per (H, k) in the kyfan sweep.
  Index isometry_samples = 200;
  /// Random B per trial in the ratio sweep.
  Index ratio_samples = 1;
  /// Mixing weight of the concavity sweep.
  double concavity_weight = 0.3;
};

/// vn-bounds, hermitian-bounds, sandwich, ratio, kyfan, concavity,
/// bw-metric-axioms, relax-bounds, geodesic-midpoint.
const std::vector<std::string>& sweep_names();

/// DomainError for an unknown property.
SweepResult run_sweep(const std::string& property, const SweepOptions& options);

}  // namespace tspectral
