// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "reduce.hpp"

#include <algorithm>
#include <cmath>

#include "rdm.hpp"

namespace fermi {

int ReductionTree::leaf_count() const {
  switch (kind) {
    case Kind::Leaf:
      return 1;
    case Kind::Factor:
      return child->leaf_count();
    case Kind::Branch:
      return child_without->leaf_count() + child_with->leaf_count();
  }
  return 0;
}

int ReductionTree::depth() const {
  switch (kind) {
    case Kind::Leaf:
      return 1;
    case Kind::Factor:
      return 1 + child->depth();
    case Kind::Branch:
      return 1 + std::max(child_without->depth(), child_with->depth());
  }
  return 0;
}

std::vector<Vector> find_certain_orbitals(const FermionState& state,
                                          double tol) {
  NaturalOrbitalDecomposition dec = natural_orbitals(state);
  std::vector<Vector> out;
  for (int i = 0; i < dec.occupations.size(); ++i)
    if (dec.occupations(i) >= 1.0 - tol) out.push_back(dec.orbitals.col(i));
  return out;
}

namespace {

/// Shifts every orbital index down by one after dropping index 1.
FermionState drop_first_orbital(const FermionState& state) {
  const int d = state.orbitals();
  const int n = state.particles();
  FermionState out(n - 1, d - 1);
  for (const auto& [key, value] : state.terms()) {
    if (!key.contains(1)) continue;  // residual weight outside f; dropped
    std::vector<int> idx;
    for (int j : key.indices())
      if (j != 1) idx.push_back(j - 1);
    out.set_amplitude(OrbitalIndexSet::from_sorted(idx), value);
  }
  return out;
}

}  // namespace

FermionState factor_out(const FermionState& state, const Vector& f,
                        double tol) {
  if (f.size() != state.orbitals())
    fail(ErrorCode::ShapeMismatch, "factor_out: orbital dimension mismatch");
  if (state.particles() < 1)
    fail(ErrorCode::BadShape, "factor_out: no particles to factor");

  Matrix rho = one_particle_rdm(state);
  double occupation = std::real(Complex(f.adjoint() * rho * f));
  if (occupation < 1.0 - tol)
    fail(ErrorCode::NotCertain,
         "factor_out: orbital occupation " + std::to_string(occupation) +
             " is below certainty");

  Matrix basis = basis_with_first(f);
  FermionState rotated = rotate_basis(state, basis.adjoint());
  return normalize(drop_first_orbital(rotated));
}

std::vector<std::pair<int, int>> find_simultaneous_pairs(
    const FermionState& state) {
  const int d = state.orbitals();
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      bool ok = true;
      for (const auto& [key, value] : state.terms())
        if (key.contains(i) != key.contains(j)) {
          ok = false;
          break;
        }
      if (ok) out.emplace_back(i, j);
    }
  return out;
}

namespace {

/// Relabels indices after removing orbitals i and j from the basis.
std::vector<int> relabel_without(const OrbitalIndexSet& key, int i, int j) {
  std::vector<int> idx;
  for (int k : key.indices()) {
    if (k == i || k == j) continue;
    int shift = (k > i ? 1 : 0) + (k > j ? 1 : 0);
    idx.push_back(k - shift);
  }
  return idx;
}

}  // namespace

BranchParts branch(const FermionState& state, int i, int j) {
  const int d = state.orbitals();
  const int n = state.particles();
  if (i < 1 || j < 1 || i >= j || j > d)
    fail(ErrorCode::BadShape, "branch: invalid pair");
  if (n < 2) fail(ErrorCode::BadShape, "branch: needs at least two particles");
  for (const auto& [key, value] : state.terms())
    if (key.contains(i) != key.contains(j))
      fail(ErrorCode::NotSimultaneous,
           "branch: orbitals (" + std::to_string(i) + "," + std::to_string(j) +
               ") are not simultaneously occupied");

  BranchParts parts{FermionState(n, d - 2), FermionState(n - 2, d - 2), 0.0,
                    0.0};
  for (const auto& [key, value] : state.terms()) {
    if (key.contains(i)) {
      // Sign from moving e_i then e_j to the front of the monomial.
      int sign = removal_sign(key, i) * removal_sign(key.without(i), j);
      parts.with_part.set_amplitude(
          OrbitalIndexSet::from_sorted(relabel_without(key, i, j)),
          double(sign) * value);
      parts.weight_with += std::norm(value);
    } else {
      parts.without_part.set_amplitude(
          OrbitalIndexSet::from_sorted(relabel_without(key, i, j)), value);
      parts.weight_without += std::norm(value);
    }
  }
  if (parts.weight_with > 0)
    parts.with_part = normalize(parts.with_part);
  if (parts.weight_without > 0)
    parts.without_part = normalize(parts.without_part);
  return parts;
}

namespace {

FermionState lift_with_first_orbital(const FermionState& child, int d) {
  // Inverse of drop_first_orbital: prefix orbital 1.
  FermionState out(child.particles() + 1, d);
  for (const auto& [key, value] : child.terms()) {
    std::vector<int> idx{1};
    for (int k : key.indices()) idx.push_back(k + 1);
    out.set_amplitude(OrbitalIndexSet::from_sorted(idx), value);
  }
  return out;
}

FermionState embed_after_pair(const FermionState& child, int d, int i, int j,
                              bool add_pair) {
  // Inverse of the branch relabeling; optionally wedges e_i ^ e_j back on.
  FermionState out(child.particles() + (add_pair ? 2 : 0), d);
  for (const auto& [key, value] : child.terms()) {
    std::vector<int> idx;
    for (int k : key.indices()) {
      int shift = 0;
      int restored = k;
      // Undo the downward relabeling: positions at or above i (then j)
      // were shifted down by one each.
      if (restored >= i) ++restored, ++shift;
      if (restored >= j) ++restored;
      idx.push_back(restored);
    }
    Complex amp = value;
    if (add_pair) {
      OrbitalIndexSet base = OrbitalIndexSet::from_sorted(idx);
      OrbitalIndexSet full = base.with(i).with(j);
      int sign = removal_sign(full, i) * removal_sign(full.without(i), j);
      out.set_amplitude(full, double(sign) * amp);
      continue;
    }
    out.set_amplitude(OrbitalIndexSet::from_sorted(idx), amp);
  }
  return out;
}

ReductionTree decompose_node(FermionState state) {
  state = normalize(state);

  // Full shells and trivial particle counts are closed-form leaves.
  if (state.particles() == 0 || state.particles() == state.orbitals())
    return ReductionTree(state);

  if (state.particles() >= 1) {
    std::vector<Vector> certain = find_certain_orbitals(state);
    if (!certain.empty()) {
      ReductionTree node(state);
      node.kind = ReductionTree::Kind::Factor;
      node.factor_basis = basis_with_first(certain.front());
      FermionState rotated = rotate_basis(state, node.factor_basis.adjoint());
      FermionState reduced = normalize(drop_first_orbital(rotated));
      node.child = std::make_unique<ReductionTree>(
          decompose_node(std::move(reduced)));
      return node;
    }
  }

  if (state.particles() >= 2) {
    for (const auto& [i, j] : find_simultaneous_pairs(state)) {
      bool any_with = false, any_without = false;
      for (const auto& [key, value] : state.terms())
        (key.contains(i) ? any_with : any_without) = true;
      if (!any_with || !any_without) continue;  // trivial split
      BranchParts parts = branch(state, i, j);
      ReductionTree node(state);
      node.kind = ReductionTree::Kind::Branch;
      node.pair_i = i;
      node.pair_j = j;
      node.weight_without = parts.weight_without;
      node.weight_with = parts.weight_with;
      node.child_without = std::make_unique<ReductionTree>(
          decompose_node(std::move(parts.without_part)));
      node.child_with = std::make_unique<ReductionTree>(
          decompose_node(std::move(parts.with_part)));
      return node;
    }
  }

  return ReductionTree(state);
}

}  // namespace

ReductionTree decompose_full(const FermionState& state) {
  return decompose_node(normalize(state));
}

FermionState reconstruct(const ReductionTree& tree) {
  switch (tree.kind) {
    case ReductionTree::Kind::Leaf:
      return tree.state;
    case ReductionTree::Kind::Factor: {
      FermionState lifted = lift_with_first_orbital(reconstruct(*tree.child),
                                                    tree.state.orbitals());
      return rotate_basis(lifted, tree.factor_basis);
    }
    case ReductionTree::Kind::Branch: {
      const int d = tree.state.orbitals();
      FermionState out(tree.state.particles(), d);
      if (tree.weight_without > 0) {
        FermionState part = embed_after_pair(reconstruct(*tree.child_without),
                                             d, tree.pair_i, tree.pair_j,
                                             false);
        double scale = std::sqrt(tree.weight_without);
        for (const auto& [key, value] : part.terms())
          out.set_amplitude(key, out.amplitude(key) + scale * value);
      }
      if (tree.weight_with > 0) {
        FermionState part = embed_after_pair(reconstruct(*tree.child_with), d,
                                             tree.pair_i, tree.pair_j, true);
        double scale = std::sqrt(tree.weight_with);
        for (const auto& [key, value] : part.terms())
          out.set_amplitude(key, out.amplitude(key) + scale * value);
      }
      return out;
    }
  }
  fail(ErrorCode::BadShape, "reconstruct: corrupt tree");
}

namespace {

/// Closed-form optimal frames for trivially solvable leaves, empty
/// optional otherwise.
bool leaf_closed_form(const FermionState& state, double& value,
                      Matrix& frame) {
  const int d = state.orbitals();
  const int n = state.particles();
  if (n == 0) {
    value = 1.0;
    frame = Matrix(d, 0);
    return true;
  }
  if (n == 1) {
    Vector v = Vector::Zero(d);
    for (const auto& [key, amp] : state.terms()) v(key.indices()[0] - 1) = amp;
    frame = Matrix(d, 1);
    frame.col(0) = v / v.norm();
    value = 1.0;
    return true;
  }
  if (d == n) {
    frame = Matrix::Identity(d, n);
    value = subspace_weight(state, frame);
    return true;
  }
  if (d == n + 1) {
    frame = slater_form_nplus1(state);
    value = std::norm(overlap(frame, state));
    return true;
  }
  return false;
}

}  // namespace

void evaluate_tree(ReductionTree& tree, const OptimizerConfig& cfg) {
  switch (tree.kind) {
    case ReductionTree::Kind::Leaf: {
      double value = 0.0;
      Matrix frame;
      if (!leaf_closed_form(tree.state, value, frame)) {
        ApproximationResult res = optimize_slater(tree.state, cfg);
        value = res.value;
        frame = res.frame;
      }
      tree.imax = value;
      tree.optimal_frame = frame;
      return;
    }
    case ReductionTree::Kind::Factor: {
      evaluate_tree(*tree.child, cfg);
      tree.imax = tree.child->imax;
      const int d = tree.state.orbitals();
      const Matrix& child_frame = tree.child->optimal_frame;
      Matrix lifted = Matrix::Zero(d, child_frame.cols() + 1);
      lifted(0, 0) = 1.0;
      lifted.block(1, 1, d - 1, child_frame.cols()) = child_frame;
      tree.optimal_frame = tree.factor_basis * lifted;
      return;
    }
    case ReductionTree::Kind::Branch: {
      evaluate_tree(*tree.child_without, cfg);
      evaluate_tree(*tree.child_with, cfg);
      double score_without = tree.weight_without * tree.child_without->imax;
      double score_with = tree.weight_with * tree.child_with->imax;
      const int d = tree.state.orbitals();
      const int i = tree.pair_i;
      const int j = tree.pair_j;

      auto embed_rows = [&](const Matrix& m) {
        Matrix out = Matrix::Zero(d, m.cols());
        for (int r = 0; r < m.rows(); ++r) {
          int restored = r + 1;
          if (restored >= i) ++restored;
          if (restored >= j) ++restored;
          out.row(restored - 1) = m.row(r);
        }
        return out;
      };

      if (score_without >= score_with) {
        tree.imax = score_without;
        tree.optimal_frame = embed_rows(tree.child_without->optimal_frame);
      } else {
        tree.imax = score_with;
        Matrix inner = embed_rows(tree.child_with->optimal_frame);
        Matrix frame(d, inner.cols() + 2);
        frame.setZero();
        frame(i - 1, 0) = 1.0;
        frame(j - 1, 1) = 1.0;
        frame.rightCols(inner.cols()) = inner;
        tree.optimal_frame = frame;
      }
      return;
    }
  }
}

Matrix slater_form_nplus1(const FermionState& state) {
  const int d = state.orbitals();
  const int n = state.particles();
  if (d != n + 1)
    fail(ErrorCode::WrongShape, "slater_form_nplus1: requires d = N + 1");
  FermionState normalized_state =
      state.is_normalized(1e-10) ? state : normalize(state);
  NaturalOrbitalDecomposition dec = natural_orbitals(normalized_state);
  // Every state here is decomposable, so the occupations are N ones and a
  // zero; the supporting frame is the fully occupied natural orbitals.
  return dec.orbitals.leftCols(n);
}

}  // namespace fermi
