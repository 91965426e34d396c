// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "optimize.hpp"

namespace fermi {

/// Statistics of the maximal Slater overlap over random states.
struct EnsembleReport {
  int particles = 0;
  int orbitals = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> sample_seeds;
  std::vector<double> values;
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
  double bound_2_over_d2 = 0.0;
  int violations = 0;  // samples below 2/d^2 - 1e-8
};

/// Draws `samples` random states and optimizes each; deterministic per
/// seed regardless of worker count (per-sample seeds are pre-derived and
/// results are aggregated in sample order). workers == 0 picks a default.
EnsembleReport run_ensemble(int particles, int orbitals, int samples,
                            const OptimizerConfig& cfg = {}, int workers = 0);

/// CSV persistence: header "sample_index,seed,value", one row per sample.
void write_ensemble_csv(const EnsembleReport& report, const std::string& path);
std::string ensemble_csv_text(const EnsembleReport& report);

}  // namespace fermi
