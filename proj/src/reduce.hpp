// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "fock.hpp"
#include "optimize.hpp"

namespace fermi {

/// Divide-and-conquer decomposition of a state ahead of optimization.
///
/// Factor nodes peel off an orbital occupied with probability one (the
/// child has N-1 particles on d-1 orbitals, expressed in a rotated basis
/// whose first column is the factored orbital). Branch nodes split on a
/// pair of basis orbitals that every term contains either both of or
/// neither of: child_without avoids the pair, child_with has it factored
/// off (N-2 particles), both renormalized with their weights recorded.
struct ReductionTree {
  enum class Kind { Leaf, Factor, Branch };

  Kind kind = Kind::Leaf;
  FermionState state;  // node state (normalized), node-local coordinates

  // Factor node: basis B with B.col(0) = factored orbital.
  Matrix factor_basis;
  std::unique_ptr<ReductionTree> child;

  // Branch node (pair indices are node-local, 1-based).
  int pair_i = 0;
  int pair_j = 0;
  double weight_without = 0.0;
  double weight_with = 0.0;
  std::unique_ptr<ReductionTree> child_without;
  std::unique_ptr<ReductionTree> child_with;

  // Filled by evaluate_tree.
  double imax = -1.0;
  Matrix optimal_frame;

  explicit ReductionTree(FermionState s) : state(std::move(s)) {}

  int leaf_count() const;
  int depth() const;
};

/// Natural orbitals whose occupation is within `tol` of one.
std::vector<Vector> find_certain_orbitals(const FermionState& state,
                                          double tol = 1e-10);

/// Removes an orbital occupied with probability one: rotates it into the
/// first coordinate, drops that index, and renormalizes. Throws NotCertain
/// when the occupation of `f` is below 1 - tol.
FermionState factor_out(const FermionState& state, const Vector& f,
                        double tol = 1e-10);

/// All basis-orbital pairs (i, j), i < j, such that every term of the
/// state contains both or neither. Detection is basis-dependent by design.
std::vector<std::pair<int, int>> find_simultaneous_pairs(
    const FermionState& state);

struct BranchParts {
  FermionState without_part;  // N particles on d-2 orbitals
  FermionState with_part;     // N-2 particles on d-2 orbitals
  double weight_without = 0.0;
  double weight_with = 0.0;
};

/// Splits on a simultaneous pair; the maximal weight of the parent is
/// max(weight_without * imax(without), weight_with * imax(with)).
BranchParts branch(const FermionState& state, int i, int j);

/// Greedy recursive reduction: factor every certain orbital, then branch
/// on the lexicographically first simultaneous pair that splits the terms
/// non-trivially; leaves are irreducible.
ReductionTree decompose_full(const FermionState& state);

/// Reassembles the original state represented by the tree.
FermionState reconstruct(const ReductionTree& tree);

/// Computes imax and an optimal frame for every node bottom-up; leaves use
/// closed forms where available (N <= 1, d = N, d = N+1) and the
/// alternating optimizer otherwise.
void evaluate_tree(ReductionTree& tree, const OptimizerConfig& cfg = {});

/// Orthonormal frame whose Slater determinant equals the state up to a
/// unit phase; only valid for d = N+1 where every state is decomposable.
/// Built from the N fully occupied natural orbitals.
Matrix slater_form_nplus1(const FermionState& state);

}  // namespace fermi
