// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "ensemble.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "rng.hpp"
#include "subsets.hpp"

namespace fermi {

EnsembleReport run_ensemble(int particles, int orbitals, int samples,
                            const OptimizerConfig& cfg, int workers) {
  if (particles < 1 || particles > orbitals)
    fail(ErrorCode::BadShape, "run_ensemble: need 0 < N <= d");
  if (samples < 1) fail(ErrorCode::BadShape, "run_ensemble: samples >= 1");
  if (binomial(orbitals, particles) > 1e4)
    fail(ErrorCode::TooLarge, "run_ensemble: C(d,N) above the 1e4 guard");

  EnsembleReport report;
  report.particles = particles;
  report.orbitals = orbitals;
  report.samples = samples;
  report.seed = cfg.seed;
  report.bound_2_over_d2 = 2.0 / (double(orbitals) * orbitals);
  report.sample_seeds.resize(samples);
  report.values.assign(samples, 0.0);
  for (int i = 0; i < samples; ++i)
    report.sample_seeds[i] = derive_seed(cfg.seed, i);

  auto run_sample = [&](int i) {
    std::uint64_t s = report.sample_seeds[i];
    FermionState state = random_state(particles, orbitals, derive_seed(s, 0));
    OptimizerConfig sample_cfg = cfg;
    sample_cfg.seed = derive_seed(s, 1);
    report.values[i] = optimize_slater(state, sample_cfg).value;
  };

  if (workers <= 0)
    workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
  workers = std::max(1, std::min(workers, samples));

  if (workers == 1) {
    for (int i = 0; i < samples; ++i) run_sample(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int i = w; i < samples; i += workers) run_sample(i);
      });
    for (std::thread& t : pool) t.join();
  }

  report.min = *std::min_element(report.values.begin(), report.values.end());
  report.max = *std::max_element(report.values.begin(), report.values.end());
  report.mean =
      std::accumulate(report.values.begin(), report.values.end(), 0.0) /
      samples;
  report.violations = 0;
  for (double v : report.values)
    if (v < report.bound_2_over_d2 - 1e-8) ++report.violations;
  return report;
}

std::string ensemble_csv_text(const EnsembleReport& report) {
  std::ostringstream out;
  out << "sample_index,seed,value\n";
  char buf[64];
  for (int i = 0; i < report.samples; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", report.values[i]);
    out << i << ',' << report.sample_seeds[i] << ',' << buf << '\n';
  }
  return out.str();
}

void write_ensemble_csv(const EnsembleReport& report,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << ensemble_csv_text(report);
  if (!out) fail(ErrorCode::IoError, "error while writing '" + path + "'");
}

}  // namespace fermi
