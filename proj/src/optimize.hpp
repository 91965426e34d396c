// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>

#include "fock.hpp"

namespace fermi {

struct OptimizerConfig {
  int restarts = 32;
  int max_iterations = 2000;
  double tol = 1e-12;  // stop when I improves by less than this per sweep
  std::uint64_t seed = 0;
  // Step policy for the Riemannian ascent (M > N).
  double step_init = 1.0;
  double step_shrink = 0.5;
  double step_min = 1e-12;
};

struct ApproximationResult {
  double value = 0.0;  // achieved projection weight, in [0, 1]
  Matrix frame;        // d x M orthonormal columns
  int iterations = 0;
  int restarts_used = 0;
  bool converged = false;
};

/// Projection weight of the state onto the span of all Slater determinants
/// built from the frame columns: sum over C(M,N) column subsets of
/// |<phi_{j1} ^ ... ^ phi_{jN} | Psi>|^2. Reduces to |overlap|^2 at M = N.
double subspace_weight(const FermionState& state, const Matrix& frame);

/// Euclidean gradient G of subspace_weight with respect to the frame
/// entries, computed from determinant cofactors. Normalized so that the
/// directional derivative along a perturbation H is Re tr(G^dagger H).
Matrix subspace_weight_gradient(const FermionState& state,
                                const Matrix& frame);

/// One cyclic pass of alternating orbital updates on a d x N frame: each
/// slot is replaced by the normalized projection of the interior
/// contraction against the other slots, which maximizes |overlap| for
/// that slot exactly. Returns |overlap|^2 after the pass; never decreases
/// it. `fallback_seed` feeds the random replacement used when a projected
/// contraction vanishes.
double alternating_sweep(const FermionState& state, Matrix& frame,
                         std::uint64_t fallback_seed);

/// Best Slater-determinant approximation (M = N) by multi-start
/// alternating sweeps. Non-convergence is reported through the flag, not
/// an error.
ApproximationResult optimize_slater(const FermionState& state,
                                    const OptimizerConfig& cfg = {});

/// Best M-dimensional orbital subspace. Closed-form fast paths: M = d is
/// the whole space, M = d-1 drops the least occupied natural orbital,
/// M = N is optimize_slater, M = N+1 extends the optimal Slater frame.
/// Intermediate ranks use Riemannian gradient ascent warm-started from
/// the M-1 solution, so values are non-decreasing in M by construction.
ApproximationResult optimize_subspace(const FermionState& state, int rank,
                                      const OptimizerConfig& cfg = {});

/// Multi-start Riemannian ascent without any of the fast paths; exposed
/// so closed forms can be validated against the generic path.
ApproximationResult optimize_subspace_ascent(const FermionState& state,
                                             int rank,
                                             const OptimizerConfig& cfg,
                                             std::span<const Matrix>
                                                 extra_starts = {});

/// Exact M = d-1 solution: drop the least occupied natural orbital.
ApproximationResult exact_rank_dminus1(const FermionState& state);

/// Random-search lower bound on the maximal weight: best subspace_weight
/// over `samples` Haar frames, the best few polished by stochastic
/// hill climbing. Deliberately gradient-free so it stays independent of
/// the main optimizers. Guarded to d <= 8 (throws TooLarge).
double brute_force_oracle(const FermionState& state, int rank, int samples,
                          std::uint64_t seed);

}  // namespace fermi
