// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <utility>

#include "fock.hpp"
#include "optimize.hpp"

namespace fermi {

/// Five-coefficient canonical form of a three-in-six state adapted to its
/// optimal Slater determinant:
///   Psi = A e1^e2^e3 + B e1^h2^h3 + C e2^h3^h1 + D e3^h1^h2 + E h1^h2^h3
/// with {e1,e2,e3,h1,h2,h3} orthonormal and e1^e2^e3 the optimal Slater
/// approximation. A is real non-negative by convention, so A^2 is the
/// achieved maximal overlap weight.
struct CanonicalForm36 {
  Matrix basis;  // 6 x 6, columns ordered (e1, e2, e3, h1, h2, h3)
  Complex A, B, C, D, E;
};

/// Builds the canonical form from a converged optimal frame. Expands the
/// state over the frame and a completion, checks that the mixed
/// two-frame/one-completion coefficients vanish (first-order optimality;
/// NotOptimal above 1e-7), and rotates both triples through the SVD of
/// the remaining 3x3 coefficient block.
CanonicalForm36 canonicalize36(const FermionState& state,
                               const Matrix& optimal_frame);

/// Reassembles the state encoded by a canonical form.
FermionState canonical_reconstruct(const CanonicalForm36& form);

/// The three 2x2 blocks of the one-particle reduced density matrix in the
/// pair basis {e_k, h_k}; each block has unit trace, which is what forces
/// the occupation pair sums to one.
struct BlockReport {
  std::array<Eigen::Matrix2cd, 3> blocks;
  std::array<double, 3> traces;
  double max_trace_error;
};

BlockReport verify_bd_blocks(const CanonicalForm36& form);

/// Slater determinant restricted to one orbital drawn from each of three
/// fixed basis pairs: (a1 e_p1 + b1 e_q1) ^ (a2 e_p2 + b2 e_q2) ^ ...
struct PairedAnsatz {
  std::array<std::pair<int, int>, 3> pairing;
  std::array<Complex, 3> alpha;
  std::array<Complex, 3> beta;
};

struct PairedResult {
  double value = 0.0;
  PairedAnsatz ansatz;
  Matrix frame;  // 6 x 3 assembled orbitals
  int iterations = 0;
  bool converged = false;
};

/// Maximizes |<S|Psi>|^2 over the paired family by multi-start cyclic
/// exact slot updates (each slot is a closed-form 2-vector maximization).
/// The state must live on the eight index sets generated by the pairing;
/// any amplitude outside that pattern above 1e-10 throws NotPaired.
PairedResult paired_ansatz_optimize(
    const FermionState& state,
    const std::array<std::pair<int, int>, 3>& pairing,
    const OptimizerConfig& cfg = {});

}  // namespace fermi
