// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rdm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fermi {

Matrix one_particle_rdm(const FermionState& state, bool allow_unnormalized) {
  if (!allow_unnormalized && !state.is_normalized(1e-10))
    fail(ErrorCode::NotNormalized,
         "one_particle_rdm: state is not normalized (norm^2 = " +
             std::to_string(state.squared_norm()) + ")");

  const int d = state.orbitals();
  Matrix rho = Matrix::Zero(d, d);
  for (const auto& [key, value] : state.terms()) {
    for (int k : key.indices()) {
      rho(k - 1, k - 1) += std::norm(value);
      double sign_jk = removal_sign(key, k);
      OrbitalIndexSet hole = key.without(k);
      for (int l = 1; l <= d; ++l) {
        if (l == k || hole.contains(l)) continue;
        OrbitalIndexSet partner = hole.with(l);
        Complex other = state.amplitude(partner);
        if (other == Complex(0.0, 0.0)) continue;
        double sign_kl = removal_sign(partner, l);
        rho(k - 1, l - 1) += sign_jk * sign_kl * value * std::conj(other);
      }
    }
  }
  // Hermitian by construction; fold rounding noise anyway.
  rho = (rho + Matrix(rho.adjoint())) / 2.0;
  return rho;
}

NaturalOrbitalDecomposition natural_orbitals(const Matrix& rho) {
  if (rho.rows() != rho.cols())
    fail(ErrorCode::NotHermitian, "natural_orbitals: matrix is not square");
  Matrix dev = rho - Matrix(rho.adjoint());
  if (dev.cwiseAbs().maxCoeff() > 1e-10)
    fail(ErrorCode::NotHermitian, "natural_orbitals: matrix is not Hermitian");

  const int d = static_cast<int>(rho.rows());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
  // Descending order.
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());

  Eigen::VectorXd occ(d);
  Matrix orbitals(d, d);
  for (int i = 0; i < d; ++i) {
    occ(i) = solver.eigenvalues()(order[i]);
    orbitals.col(i) = solver.eigenvectors().col(order[i]);
  }

  auto dominant_index = [&](int col) {
    int best = 0;
    double best_mag = -1.0;
    for (int r = 0; r < d; ++r) {
      double mag = std::abs(orbitals(r, col));
      if (mag > best_mag + 1e-12) {
        best_mag = mag;
        best = r;
      }
    }
    return best;
  };

  // Deterministic ordering inside degenerate clusters.
  int start = 0;
  while (start < d) {
    int end = start + 1;
    while (end < d && occ(end - 1) - occ(end) < 1e-9) ++end;
    if (end - start > 1) {
      std::vector<int> cols(end - start);
      std::iota(cols.begin(), cols.end(), start);
      std::stable_sort(cols.begin(), cols.end(), [&](int a, int b) {
        return dominant_index(a) < dominant_index(b);
      });
      Matrix tmp(d, end - start);
      Eigen::VectorXd tmpocc(end - start);
      for (int i = 0; i < end - start; ++i) {
        tmp.col(i) = orbitals.col(cols[i]);
        tmpocc(i) = occ(cols[i]);
      }
      orbitals.middleCols(start, end - start) = tmp;
      occ.segment(start, end - start) = tmpocc;
    }
    start = end;
  }

  // Phase: dominant component real positive.
  for (int c = 0; c < d; ++c) {
    int r = dominant_index(c);
    Complex z = orbitals(r, c);
    if (std::abs(z) > 0) orbitals.col(c) *= std::conj(z) / std::abs(z);
  }

  return {occ, orbitals};
}

NaturalOrbitalDecomposition natural_orbitals(const FermionState& state) {
  return natural_orbitals(one_particle_rdm(state));
}

int envelope_rank(const FermionState& state, double tol) {
  NaturalOrbitalDecomposition dec = natural_orbitals(state);
  int rank = 0;
  for (int i = 0; i < dec.occupations.size(); ++i)
    if (dec.occupations(i) > tol) ++rank;
  return rank;
}

BorlandDennisReport borland_dennis_check(const Eigen::VectorXd& occupations,
                                         double tol) {
  if (occupations.size() != 6)
    fail(ErrorCode::WrongShape,
         "borland_dennis_check: expected exactly six occupations");
  BorlandDennisReport report;
  report.tol = tol;
  report.sum_1_6 = occupations(0) + occupations(5);
  report.sum_2_5 = occupations(1) + occupations(4);
  report.sum_3_4 = occupations(2) + occupations(3);
  report.slack = occupations(4) + occupations(5) - occupations(3);
  report.satisfied = std::abs(report.sum_1_6 - 1.0) <= tol &&
                     std::abs(report.sum_2_5 - 1.0) <= tol &&
                     std::abs(report.sum_3_4 - 1.0) <= tol &&
                     report.slack >= -tol;
  return report;
}

BorlandDennisReport borland_dennis_check(const NaturalOrbitalDecomposition& dec,
                                         double tol) {
  return borland_dennis_check(dec.occupations, tol);
}

}  // namespace fermi
