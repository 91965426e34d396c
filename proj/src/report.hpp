// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "ensemble.hpp"
#include "fock.hpp"
#include "optimize.hpp"

namespace fermi {

// Machine-readable "key: value" reports with numbers at 15 significant
// digits; line order is fixed so outputs diff stably. The schema is
// documented in the project README.

struct AnalyzeOptions {
  double envelope_tol = 1e-10;
  double bd_tol = 1e-8;
};

std::string report_analyze(const FermionState& state,
                           const std::string& source,
                           const AnalyzeOptions& opts = {});

std::string report_approximate(const FermionState& state,
                               const std::string& source, int rank,
                               const OptimizerConfig& cfg);

std::string report_reduce(const FermionState& state, const std::string& source,
                          const OptimizerConfig& cfg);

std::string report_canonical36(const FermionState& state,
                               const std::string& source,
                               const OptimizerConfig& cfg);

std::string report_ensemble(const EnsembleReport& report,
                            const std::string& csv_path);

std::string report_examples(const FermionState& state, const std::string& name,
                            const std::string& out_path);

}  // namespace fermi
