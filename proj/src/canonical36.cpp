// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "canonical36.hpp"

#include <algorithm>
#include <cmath>

#include "rng.hpp"

namespace fermi {

namespace {

constexpr double kForbiddenTol = 1e-7;

int count_in_first_triple(const OrbitalIndexSet& key) {
  int c = 0;
  for (int idx : key.indices())
    if (idx <= 3) ++c;
  return c;
}

}  // namespace

CanonicalForm36 canonicalize36(const FermionState& state,
                               const Matrix& optimal_frame) {
  if (state.particles() != 3 || state.orbitals() != 6)
    fail(ErrorCode::WrongShape, "canonicalize36: requires (N, d) = (3, 6)");
  if (optimal_frame.rows() != 6 || optimal_frame.cols() != 3)
    fail(ErrorCode::ShapeMismatch, "canonicalize36: frame must be 6 x 3");
  require_orthonormal(optimal_frame);

  // Coordinates over (f1, f2, f3, g1, g2, g3).
  Matrix completion = orthonormal_completion(optimal_frame);
  Matrix full_basis(6, 6);
  full_basis.leftCols(3) = optimal_frame;
  full_basis.rightCols(3) = completion;
  FermionState coords = rotate_basis(state, full_basis.adjoint());

  auto amp = [&](int i, int j, int k) {
    std::array<int, 3> idx{i, j, k};
    auto [key, sign] = OrbitalIndexSet::canonicalize(idx);
    return double(sign) * coords.amplitude(key);
  };

  // First-order optimality of the frame: no term may mix two frame
  // orbitals with one completion orbital.
  double worst = 0.0;
  for (const auto& [key, value] : coords.terms())
    if (count_in_first_triple(key) == 2)
      worst = std::max(worst, std::abs(value));
  if (worst > kForbiddenTol)
    fail(ErrorCode::NotOptimal,
         "canonicalize36: frame is not locally optimal (mixed coefficient " +
             std::to_string(worst) + ")");

  Complex a = amp(1, 2, 3);
  Complex c = amp(4, 5, 6);

  // b(i, m) couples f_i to the dual completion 2-vectors
  // (g2^g3, g3^g1, g1^g2).
  Eigen::Matrix3cd b;
  for (int i = 1; i <= 3; ++i) {
    b(i - 1, 0) = amp(i, 5, 6);
    b(i - 1, 1) = amp(i, 6, 4);
    b(i - 1, 2) = amp(i, 4, 5);
  }

  Eigen::JacobiSVD<Eigen::Matrix3cd> svd(
      b, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3cd u = svd.matrixU();
  Eigen::Matrix3cd v = svd.matrixV();
  Eigen::Vector3d sigma = svd.singularValues();

  // e_k = sum_i U_ik f_i; h_k = sum_j V_jk g_j (the dual of the rotated
  // 2-vector H_k is exactly the k-th column of V).
  CanonicalForm36 form;
  form.basis = Matrix(6, 6);
  form.basis.leftCols(3) = optimal_frame * u;
  form.basis.rightCols(3) = completion * v;

  Complex det_u = u.determinant();
  Complex det_v = v.determinant();
  form.A = a * std::conj(det_u);
  form.B = sigma(0) * std::conj(det_v);
  form.C = sigma(1) * std::conj(det_v);
  form.D = sigma(2) * std::conj(det_v);
  form.E = c * std::conj(det_v);

  // Phase convention: rotate e1 so that A is real non-negative. Both A
  // and B carry e1, so they are rescaled together.
  if (std::abs(form.A) > 1e-15) {
    Complex phase = form.A / std::abs(form.A);
    form.basis.col(0) *= phase;
    form.A /= phase;
    form.B /= phase;
  }
  return form;
}

FermionState canonical_reconstruct(const CanonicalForm36& form) {
  auto wedge = [&](int x, int y, int z) {
    Matrix cols(6, 3);
    cols.col(0) = form.basis.col(x);
    cols.col(1) = form.basis.col(y);
    cols.col(2) = form.basis.col(z);
    return slater_amplitudes(cols);
  };
  // Columns: e1 e2 e3 h1 h2 h3 = 0 1 2 3 4 5.
  struct Term {
    Complex coeff;
    int x, y, z;
  };
  const Term terms[] = {
      {form.A, 0, 1, 2}, {form.B, 0, 4, 5}, {form.C, 1, 5, 3},
      {form.D, 2, 3, 4}, {form.E, 3, 4, 5},
  };
  FermionState out(3, 6);
  for (const Term& t : terms) {
    if (std::abs(t.coeff) == 0.0) continue;
    FermionState part = wedge(t.x, t.y, t.z);
    for (const auto& [key, value] : part.terms())
      out.set_amplitude(key, out.amplitude(key) + t.coeff * value);
  }
  return out;
}

BlockReport verify_bd_blocks(const CanonicalForm36& form) {
  const Complex A = form.A, B = form.B, C = form.C, D = form.D, E = form.E;
  auto sq = [](Complex z) { return std::norm(z); };

  BlockReport report;
  report.blocks[0] << sq(A) + sq(B), std::conj(E) * B, E * std::conj(B),
      sq(C) + sq(D) + sq(E);
  report.blocks[1] << sq(A) + sq(C), std::conj(E) * C, E * std::conj(C),
      sq(B) + sq(D) + sq(E);
  report.blocks[2] << sq(A) + sq(D), std::conj(E) * D, E * std::conj(D),
      sq(B) + sq(C) + sq(E);

  report.max_trace_error = 0.0;
  for (int k = 0; k < 3; ++k) {
    report.traces[k] = std::real(report.blocks[k].trace());
    report.max_trace_error =
        std::max(report.max_trace_error, std::abs(report.traces[k] - 1.0));
  }
  return report;
}

namespace {

struct PairedProblem {
  // Amplitude and reordering sign for each of the eight slot choices;
  // index bit k set means slot k takes the second pair member.
  std::array<Complex, 8> signed_amplitudes;
};

PairedProblem build_paired_problem(
    const FermionState& state,
    const std::array<std::pair<int, int>, 3>& pairing) {
  std::array<bool, 7> used{};
  for (const auto& [p, q] : pairing) {
    if (p < 1 || p > 6 || q < 1 || q > 6 || p == q)
      fail(ErrorCode::BadShape, "paired ansatz: invalid pairing");
    if (used[p] || used[q])
      fail(ErrorCode::BadShape, "paired ansatz: pairing must partition 1..6");
    used[p] = used[q] = true;
  }

  PairedProblem problem;
  double pattern_norm = 0.0;
  for (int choice = 0; choice < 8; ++choice) {
    std::array<int, 3> idx;
    for (int slot = 0; slot < 3; ++slot)
      idx[slot] = (choice >> slot) & 1 ? pairing[slot].second
                                       : pairing[slot].first;
    auto [key, sign] = OrbitalIndexSet::canonicalize(idx);
    Complex amp = state.amplitude(key);
    problem.signed_amplitudes[choice] = double(sign) * amp;
    pattern_norm += std::norm(amp);
  }
  double outside = state.squared_norm() - pattern_norm;
  if (outside > 1e-10)
    fail(ErrorCode::NotPaired,
         "paired ansatz: state has weight " + std::to_string(outside) +
             " outside the eight-term pattern");
  return problem;
}

/// <S|Psi> as a function of the slot parameters.
Complex paired_overlap(const PairedProblem& problem,
                       const std::array<Complex, 3>& alpha,
                       const std::array<Complex, 3>& beta) {
  Complex total(0.0, 0.0);
  for (int choice = 0; choice < 8; ++choice) {
    Complex w(1.0, 0.0);
    for (int slot = 0; slot < 3; ++slot)
      w *= (choice >> slot) & 1 ? beta[slot] : alpha[slot];
    total += std::conj(w) * problem.signed_amplitudes[choice];
  }
  return total;
}

}  // namespace

PairedResult paired_ansatz_optimize(
    const FermionState& state,
    const std::array<std::pair<int, int>, 3>& pairing,
    const OptimizerConfig& cfg) {
  if (state.particles() != 3 || state.orbitals() != 6)
    fail(ErrorCode::WrongShape, "paired_ansatz_optimize: requires (3, 6)");
  PairedProblem problem = build_paired_problem(state, pairing);

  const int restarts = std::max(1, cfg.restarts);
  std::array<Complex, 3> best_alpha{}, best_beta{};
  double best_value = -1.0;
  int best_iterations = 0;
  bool best_converged = false;

  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(cfg.seed ^ 0x70617273ULL, r));
    std::array<Complex, 3> alpha, beta;
    for (int slot = 0; slot < 3; ++slot) {
      Complex x = rng.complex_normal();
      Complex y = rng.complex_normal();
      double n = std::sqrt(std::norm(x) + std::norm(y));
      alpha[slot] = x / n;
      beta[slot] = y / n;
    }

    double prev = std::norm(paired_overlap(problem, alpha, beta));
    int iterations = 0;
    bool converged = false;
    for (int sweep = 0; sweep < cfg.max_iterations; ++sweep) {
      double moved = 0.0;
      for (int slot = 0; slot < 3; ++slot) {
        // <S|Psi> = conj(alpha_slot) X + conj(beta_slot) Y; the exact
        // maximizer over the unit disk pair is (X, Y) normalized.
        Complex x(0.0, 0.0), y(0.0, 0.0);
        for (int choice = 0; choice < 8; ++choice) {
          Complex w(1.0, 0.0);
          for (int other = 0; other < 3; ++other) {
            if (other == slot) continue;
            w *= (choice >> other) & 1 ? beta[other] : alpha[other];
          }
          Complex term = std::conj(w) * problem.signed_amplitudes[choice];
          if ((choice >> slot) & 1)
            y += term;
          else
            x += term;
        }
        double n = std::sqrt(std::norm(x) + std::norm(y));
        if (n < 1e-15) continue;  // slot does not affect the overlap
        Complex na = x / n, nb = y / n;
        moved = std::max(moved, std::abs(na - alpha[slot]));
        moved = std::max(moved, std::abs(nb - beta[slot]));
        alpha[slot] = na;
        beta[slot] = nb;
      }
      ++iterations;
      double value = std::norm(paired_overlap(problem, alpha, beta));
      if (value - prev < cfg.tol && moved < 1e-12) {
        converged = true;
        prev = value;
        break;
      }
      prev = value;
    }

    if (prev > best_value) {
      best_value = prev;
      best_alpha = alpha;
      best_beta = beta;
      best_iterations = iterations;
      best_converged = converged;
    }
  }

  // Slot phases are gauge: make every alpha real non-negative.
  for (int slot = 0; slot < 3; ++slot) {
    double mag = std::abs(best_alpha[slot]);
    if (mag > 1e-15) {
      Complex phase = best_alpha[slot] / mag;
      best_alpha[slot] /= phase;
      best_beta[slot] /= phase;
    }
  }

  PairedResult result;
  result.value = best_value;
  result.ansatz.pairing = pairing;
  result.ansatz.alpha = best_alpha;
  result.ansatz.beta = best_beta;
  result.iterations = best_iterations;
  result.converged = best_converged;
  result.frame = Matrix::Zero(6, 3);
  for (int slot = 0; slot < 3; ++slot) {
    result.frame(pairing[slot].first - 1, slot) = best_alpha[slot];
    result.frame(pairing[slot].second - 1, slot) = best_beta[slot];
  }
  return result;
}

}  // namespace fermi
