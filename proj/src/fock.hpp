// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "subsets.hpp"

namespace fermi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerances shared across the library.
inline constexpr double kNormTol = 1e-12;         // normalization invariant
inline constexpr double kOrthoTol = 1e-10;        // orthonormality invariant
inline constexpr double kOrthoHardTol = 1e-8;     // hard orthonormality error
inline constexpr double kUnitaryHardTol = 1e-8;   // hard unitarity error
inline constexpr double kZeroStateTol = 1e-14;

/// N-fermion wave function on d orbitals, stored as a sparse map from
/// sorted orbital index sets to complex amplitudes. Absent keys mean
/// amplitude zero. Immutable once built (the mutators are construction
/// helpers); all free functions below treat states as values.
class FermionState {
 public:
  FermionState(int particles, int orbitals);

  int particles() const { return particles_; }
  int orbitals() const { return orbitals_; }

  /// Amplitude of a sorted index set; zero when absent.
  Complex amplitude(const OrbitalIndexSet& key) const;

  /// Sets the amplitude of a sorted key (validated against (N, d)).
  /// Zero amplitudes erase the key.
  void set_amplitude(const OrbitalIndexSet& key, Complex value);

  /// Accumulates a wedge monomial given in arbitrary index order; the
  /// amplitude is multiplied by the sign of the sorting permutation.
  void add_term(std::span<const int> indices, Complex value);
  void add_term(std::initializer_list<int> indices, Complex value) {
    add_term(std::span<const int>(indices.begin(), indices.size()), value);
  }

  const std::map<OrbitalIndexSet, Complex>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Keys in lexicographic index order (the map itself is mask-ordered).
  std::vector<OrbitalIndexSet> sorted_keys() const;

  double squared_norm() const;
  double norm() const;
  bool is_normalized(double tol = kNormTol) const;

 private:
  void validate_key(const OrbitalIndexSet& key) const;

  int particles_;
  int orbitals_;
  std::map<OrbitalIndexSet, Complex> terms_;
};

/// Rescales to unit norm, preserving relative phases. Throws ZeroState if
/// the amplitude norm is below 1e-14.
FermionState normalize(const FermionState& state);

/// Hermitian inner product, conjugate-linear in the first argument.
/// Throws ShapeMismatch when (N, d) differ.
Complex inner_product(const FermionState& a, const FermionState& b);

/// Maximum deviation of the column Gram matrix from the identity.
double frame_orthonormality_error(const Matrix& frame);

/// Throws NotOrthonormal when the Gram deviation exceeds `hard_tol`.
void require_orthonormal(const Matrix& frame, double hard_tol = kOrthoHardTol);

/// Expands the Slater determinant of an orthonormal d x N frame into basis
/// amplitudes: C_J = det(frame[J, :]). Cauchy-Binet keeps the result
/// normalized.
FermionState slater_amplitudes(const Matrix& frame);

/// <phi_1 ^ ... ^ phi_N | Psi> for an orthonormal d x N frame.
Complex overlap(const Matrix& frame, const FermionState& state);

/// Contraction of the state against N-1 orbitals: returns v with
/// v_k = <e_k ^ phi_2 ^ ... ^ phi_N | Psi>, so that
/// <phi_1 ^ ... ^ phi_N | Psi> = (phi_1, v) for any phi_1.
Vector interior_contraction(const FermionState& state,
                            const std::vector<Vector>& partial);
Vector interior_contraction(const FermionState& state, const Matrix& partial);

/// Change of basis: C'_J = sum_K det(U[J,K]) C_K for a d x d unitary U.
FermionState rotate_basis(const FermionState& state, const Matrix& unitary);

/// i.i.d. complex-Gaussian amplitudes over all C(d,N) index sets,
/// normalized; deterministic per seed.
FermionState random_state(int particles, int orbitals, std::uint64_t seed);

/// Orthonormal completion of a d x M frame to the remaining d-M columns.
Matrix orthonormal_completion(const Matrix& frame);

/// d x d unitary whose first column is the given unit vector; the rest is
/// a deterministic Gram-Schmidt completion against coordinate vectors, so
/// basis-aligned inputs produce permutation-like bases.
Matrix basis_with_first(const Vector& first);

/// Determinant of a small square complex matrix (closed forms up to 3x3).
Complex det_small(const Matrix& m);

}  // namespace fermi
