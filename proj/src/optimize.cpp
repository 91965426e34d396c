// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "optimize.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

#include "rdm.hpp"
#include "rng.hpp"

namespace fermi {

namespace {

constexpr double kDegenerateNorm = 1e-13;  // projected contraction ~ 0
constexpr double kOrbitalTol = 1e-10;      // per-sweep orbital movement
constexpr double kArmijo = 1e-4;

Matrix gather(const Matrix& m, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows.size(); ++r)
      out(r, c) = m(rows[r] - 1, cols[c] - 1);
  return out;
}

void check_rank(const FermionState& state, int rank) {
  if (rank < state.particles() || rank > state.orbitals())
    fail(ErrorCode::BadRank, "rank M must satisfy N <= M <= d (got M=" +
                                 std::to_string(rank) + ")");
}

/// Thin-QR retraction back onto the orthonormal frames.
Matrix retract(const Matrix& m) {
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
}

/// Cofactor matrix (transpose of the adjugate): cof(i,p) is the signed
/// minor obtained by deleting row i and column p.
Matrix cofactors(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  Matrix cof(n, n);
  if (n == 1) {
    cof(0, 0) = 1.0;
    return cof;
  }
  Matrix minor(n - 1, n - 1);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p) {
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == p) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      double sign = ((i + p) % 2 == 0) ? 1.0 : -1.0;
      cof(i, p) = sign * det_small(minor);
    }
  return cof;
}

}  // namespace

double subspace_weight(const FermionState& state, const Matrix& frame) {
  const int n = state.particles();
  const int m = static_cast<int>(frame.cols());
  if (frame.rows() != state.orbitals())
    fail(ErrorCode::ShapeMismatch, "subspace_weight: frame rows != d");
  check_rank(state, m);
  require_orthonormal(frame);

  double total = 0.0;
  for (const OrbitalIndexSet& cols : all_subsets(m, n)) {
    std::vector<int> col_idx = cols.indices();
    Complex o(0.0, 0.0);
    for (const auto& [key, value] : state.terms())
      o += std::conj(det_small(gather(frame, key.indices(), col_idx))) * value;
    total += std::norm(o);
  }
  return total;
}

Matrix subspace_weight_gradient(const FermionState& state,
                                const Matrix& frame) {
  const int n = state.particles();
  const int m = static_cast<int>(frame.cols());
  if (frame.rows() != state.orbitals())
    fail(ErrorCode::ShapeMismatch, "subspace_weight_gradient: frame rows != d");
  check_rank(state, m);

  Matrix grad = Matrix::Zero(frame.rows(), m);
  for (const OrbitalIndexSet& cols : all_subsets(m, n)) {
    std::vector<int> col_idx = cols.indices();
    Complex o(0.0, 0.0);
    for (const auto& [key, value] : state.terms())
      o += std::conj(det_small(gather(frame, key.indices(), col_idx))) * value;
    if (std::abs(o) == 0.0) continue;
    for (const auto& [key, value] : state.terms()) {
      std::vector<int> row_idx = key.indices();
      Matrix cof = cofactors(gather(frame, row_idx, col_idx));
      for (int i = 0; i < n; ++i)
        for (int p = 0; p < n; ++p)
          grad(row_idx[i] - 1, col_idx[p] - 1) +=
              2.0 * std::conj(o) * value * std::conj(cof(i, p));
    }
  }
  return grad;
}

double alternating_sweep(const FermionState& state, Matrix& frame,
                         std::uint64_t fallback_seed) {
  const int d = state.orbitals();
  const int n = state.particles();
  if (frame.rows() != d || frame.cols() != n)
    fail(ErrorCode::ShapeMismatch, "alternating_sweep: frame must be d x N");

  double value = 0.0;
  for (int slot = 0; slot < n; ++slot) {
    std::vector<Vector> partial;
    partial.reserve(n - 1);
    for (int c = 0; c < n; ++c)
      if (c != slot) partial.push_back(frame.col(c));

    Vector v = n == 1 ? [&] {
      // Single-particle states: the contraction is the state itself.
      Vector w = Vector::Zero(d);
      for (const auto& [key, amp] : state.terms())
        w(key.indices()[0] - 1) = amp;
      return w;
    }()
                      : interior_contraction(state, partial);

    // Project out the other slots (twice, for numerical stability).
    for (int pass = 0; pass < 2; ++pass)
      for (const Vector& phi : partial) v -= phi * phi.dot(v);

    double norm = v.norm();
    if (norm < kDegenerateNorm) {
      // Degenerate update: any unit vector orthogonal to the other
      // slots keeps the overlap; pick one at random and continue.
      Rng rng(fallback_seed);
      Vector r = rng.unit_vector(d);
      for (int pass = 0; pass < 2; ++pass)
        for (const Vector& phi : partial) r -= phi * phi.dot(r);
      norm = r.norm();
      frame.col(slot) = r / norm;
      value = 0.0;
      continue;
    }
    // The full overlap is (-1)^slot (phi_slot, v); carrying that parity
    // into the update makes the overlap real positive after every slot,
    // so converged frames are genuine fixed points (no sign 2-cycles).
    double parity = (slot % 2 == 0) ? 1.0 : -1.0;
    frame.col(slot) = parity * v / norm;
    // |overlap| after this slot update equals ||projected v||.
    value = norm * norm;
  }
  return value;
}

namespace {

struct SweepOutcome {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

SweepOutcome run_alternating(const FermionState& state, Matrix& frame,
                             const OptimizerConfig& cfg,
                             std::uint64_t noise_seed) {
  SweepOutcome out;
  double prev = std::norm(overlap(frame, state));
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    Matrix before = frame;
    double value = alternating_sweep(state, frame,
                                     derive_seed(noise_seed, iter));
    ++out.iterations;
    double delta = value - prev;
    double moved = (frame - before).cwiseAbs().maxCoeff();
    prev = value;
    if ((iter & 0xff) == 0xff) frame = retract(frame);
    if (delta < cfg.tol && moved < kOrbitalTol) {
      out.converged = true;
      break;
    }
  }
  frame = retract(frame);
  out.value = std::norm(overlap(frame, state));
  return out;
}

}  // namespace

ApproximationResult optimize_slater(const FermionState& state,
                                    const OptimizerConfig& cfg) {
  const int d = state.orbitals();
  const int n = state.particles();
  if (!state.is_normalized(1e-10))
    fail(ErrorCode::NotNormalized, "optimize_slater: state is not normalized");

  ApproximationResult best;
  best.restarts_used = std::max(1, cfg.restarts);
  for (int r = 0; r < best.restarts_used; ++r) {
    std::uint64_t restart_seed = derive_seed(cfg.seed, r);
    Rng rng(restart_seed);
    Matrix frame = rng.haar_frame(d, n);
    SweepOutcome outcome =
        run_alternating(state, frame, cfg, derive_seed(restart_seed, 1));
    if (outcome.value > best.value || r == 0) {
      best.value = outcome.value;
      best.frame = frame;
      best.iterations = outcome.iterations;
      best.converged = outcome.converged;
    }
  }
  return best;
}

namespace {

/// One Riemannian ascent run from a given start; monotone by backtracking.
SweepOutcome ascend(const FermionState& state, Matrix& frame,
                    const OptimizerConfig& cfg) {
  SweepOutcome out;
  double value = subspace_weight(state, frame);
  double step = cfg.step_init;
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    Matrix grad = subspace_weight_gradient(state, frame);
    // Tangent projection on the complex Stiefel manifold.
    Matrix ftg = frame.adjoint() * grad;
    Matrix tangent = grad - frame * ((ftg + Matrix(ftg.adjoint())) / 2.0);
    double tnorm2 = tangent.squaredNorm();
    ++out.iterations;
    if (tnorm2 < 1e-20) {
      out.converged = true;
      break;
    }
    double s = step;
    bool accepted = false;
    while (s >= cfg.step_min) {
      Matrix trial = retract(frame + s * tangent);
      double trial_value = subspace_weight(state, trial);
      if (trial_value >= value + kArmijo * s * tnorm2) {
        double delta = trial_value - value;
        frame = trial;
        value = trial_value;
        accepted = true;
        step = std::min(s * 2.0, cfg.step_init);
        if (delta < cfg.tol) out.converged = true;
        break;
      }
      s *= cfg.step_shrink;
    }
    if (!accepted) {
      // No improving step exists at the minimum step size.
      out.converged = true;
      break;
    }
    if (out.converged) break;
  }
  out.value = value;
  return out;
}

}  // namespace

ApproximationResult optimize_subspace_ascent(const FermionState& state,
                                             int rank,
                                             const OptimizerConfig& cfg,
                                             std::span<const Matrix>
                                                 extra_starts) {
  check_rank(state, rank);
  const int d = state.orbitals();

  ApproximationResult best;
  int restarts = std::max(1, cfg.restarts);
  best.restarts_used = restarts;
  bool first = true;
  for (const Matrix& start : extra_starts) {
    Matrix frame = retract(start);
    SweepOutcome outcome = ascend(state, frame, cfg);
    if (first || outcome.value > best.value) {
      best.value = outcome.value;
      best.frame = frame;
      best.iterations = outcome.iterations;
      best.converged = outcome.converged;
      first = false;
    }
  }
  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(cfg.seed, r));
    Matrix frame = rng.haar_frame(d, rank);
    SweepOutcome outcome = ascend(state, frame, cfg);
    if (first || outcome.value > best.value) {
      best.value = outcome.value;
      best.frame = frame;
      best.iterations = outcome.iterations;
      best.converged = outcome.converged;
      first = false;
    }
  }
  return best;
}

namespace {

/// Extends a d x M frame by one orthonormal column chosen from the natural
/// orbitals of the residual left after projecting the state onto the
/// frame's determinant span.
Matrix extend_frame(const FermionState& state, const Matrix& frame) {
  const int d = state.orbitals();
  Matrix candidates;
  if (frame.cols() == state.particles()) {
    FermionState s = slater_amplitudes(frame);
    Complex o = inner_product(s, state);
    FermionState residual = state;
    for (const auto& [key, value] : s.terms())
      residual.set_amplitude(key, residual.amplitude(key) - o * value);
    if (residual.norm() > 1e-12)
      candidates = natural_orbitals(one_particle_rdm(residual, true)).orbitals;
  }
  if (candidates.size() == 0)
    candidates = natural_orbitals(state).orbitals;

  for (int c = 0; c < candidates.cols(); ++c) {
    Vector v = candidates.col(c);
    v -= frame * (frame.adjoint() * v);
    v -= frame * (frame.adjoint() * v);
    if (v.norm() > 1e-8) {
      Matrix out(d, frame.cols() + 1);
      out.leftCols(frame.cols()) = frame;
      out.col(frame.cols()) = v / v.norm();
      return out;
    }
  }
  // Fall back to any completion direction.
  Matrix comp = orthonormal_completion(frame);
  Matrix out(d, frame.cols() + 1);
  out.leftCols(frame.cols()) = frame;
  out.col(frame.cols()) = comp.col(0);
  return out;
}

}  // namespace

ApproximationResult optimize_subspace(const FermionState& state, int rank,
                                      const OptimizerConfig& cfg) {
  check_rank(state, rank);
  const int d = state.orbitals();
  const int n = state.particles();
  if (!state.is_normalized(1e-10))
    fail(ErrorCode::NotNormalized, "optimize_subspace: state is not normalized");

  if (rank == d) {
    ApproximationResult res;
    res.frame = Matrix::Identity(d, d);
    res.value = subspace_weight(state, res.frame);
    res.converged = true;
    res.restarts_used = 0;
    return res;
  }
  if (rank == n) return optimize_slater(state, cfg);
  if (rank == d - 1) return exact_rank_dminus1(state);
  if (rank == n + 1) {
    ApproximationResult base = optimize_slater(state, cfg);
    ApproximationResult res;
    res.frame = extend_frame(state, base.frame);
    res.value = subspace_weight(state, res.frame);
    res.iterations = base.iterations;
    res.restarts_used = base.restarts_used;
    res.converged = base.converged;
    return res;
  }

  // Intermediate rank: warm start from the M-1 solution (a frame extension
  // never loses weight, so values stay monotone in M) plus random restarts.
  ApproximationResult below = optimize_subspace(state, rank - 1, cfg);
  Matrix warm = extend_frame(state, below.frame);
  ApproximationResult res =
      optimize_subspace_ascent(state, rank, cfg, std::span(&warm, 1));
  res.converged = res.converged || below.converged;
  return res;
}

ApproximationResult exact_rank_dminus1(const FermionState& state) {
  const int d = state.orbitals();
  const int n = state.particles();
  if (d <= n) fail(ErrorCode::BadRank, "exact_rank_dminus1: requires d > N");
  if (!state.is_normalized(1e-10))
    fail(ErrorCode::NotNormalized, "exact_rank_dminus1: state is not normalized");

  NaturalOrbitalDecomposition dec = natural_orbitals(state);
  ApproximationResult res;
  res.frame = dec.orbitals.leftCols(d - 1);
  res.value = subspace_weight(state, res.frame);
  res.converged = true;
  res.restarts_used = 0;
  return res;
}

double brute_force_oracle(const FermionState& state, int rank, int samples,
                          std::uint64_t seed) {
  const int d = state.orbitals();
  if (d > 8)
    fail(ErrorCode::TooLarge, "brute_force_oracle: guarded to d <= 8");
  check_rank(state, rank);

  Rng rng(derive_seed(seed, 0));
  const int keep = 4;
  std::vector<std::pair<double, Matrix>> top;
  for (int s = 0; s < samples; ++s) {
    Matrix frame = rng.haar_frame(d, rank);
    double w = subspace_weight(state, frame);
    if (static_cast<int>(top.size()) < keep) {
      top.emplace_back(w, frame);
      std::sort(top.begin(), top.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
    } else if (w > top.back().first) {
      top.back() = {w, frame};
      std::sort(top.begin(), top.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
    }
  }

  // Stochastic hill climbing: random tangent rays with an adaptive step.
  // Gradient-free on purpose; shares only the objective with the main
  // optimizers.
  double best = top.empty() ? 0.0 : top.front().first;
  int polish_budget = 6000;
  for (auto& [w, frame] : top) {
    double sigma = 0.2;
    int stale = 0;
    double current = w;
    for (int it = 0; it < polish_budget; ++it) {
      Matrix trial = retract(frame + sigma * rng.gaussian_matrix(d, rank));
      double tw = subspace_weight(state, trial);
      if (tw > current) {
        current = tw;
        frame = trial;
        sigma = std::min(sigma * 1.4, 0.4);
        stale = 0;
      } else if (++stale >= 10) {
        sigma = std::max(sigma * 0.5, 1e-8);
        stale = 0;
      }
    }
    best = std::max(best, current);
  }
  return best;
}

}  // namespace fermi
