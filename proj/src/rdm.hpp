// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "fock.hpp"

namespace fermi {

/// Occupation numbers (descending) and the unitary of natural orbitals
/// (column i belongs to occupation i).
struct NaturalOrbitalDecomposition {
  Eigen::VectorXd occupations;
  Matrix orbitals;
};

/// Borland-Dennis constraint data for six occupations summing to three:
/// the three pair sums that must equal one and the inequality slack
/// lambda5 + lambda6 - lambda4 that must be non-negative.
struct BorlandDennisReport {
  double sum_1_6 = 0.0;
  double sum_2_5 = 0.0;
  double sum_3_4 = 0.0;
  double slack = 0.0;
  double tol = 0.0;
  bool satisfied = false;
};

/// One-particle reduced density matrix with trace-N convention:
/// rho_kk = sum_{J containing k} |C_J|^2 and, for k != l,
/// rho_kl = sum over (J, K = J\{k} u {l}) of
///          sign(J,k) sign(K,l) C_J conj(C_K),
/// with sign(J,k) = (-1)^(position of k in J - 1).
/// Throws NotNormalized unless the state is normalized to 1e-10 or
/// `allow_unnormalized` is set.
Matrix one_particle_rdm(const FermionState& state,
                        bool allow_unnormalized = false);

/// Eigendecomposition of a Hermitian matrix sorted by descending
/// eigenvalue. Each orbital's phase makes its largest-magnitude component
/// real positive; within a degenerate cluster (gap < 1e-9) orbitals are
/// ordered by the index of their dominant component.
NaturalOrbitalDecomposition natural_orbitals(const Matrix& rho);
NaturalOrbitalDecomposition natural_orbitals(const FermionState& state);

/// Number of occupations above `tol`; equals N exactly when the state is
/// a single Slater determinant.
int envelope_rank(const FermionState& state, double tol = 1e-10);

BorlandDennisReport borland_dennis_check(const Eigen::VectorXd& occupations,
                                         double tol = 1e-8);
BorlandDennisReport borland_dennis_check(const NaturalOrbitalDecomposition& dec,
                                         double tol = 1e-8);

}  // namespace fermi
