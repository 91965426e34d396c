// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "fock.hpp"

#include <algorithm>
#include <cmath>

#include "rng.hpp"

namespace fermi {

FermionState::FermionState(int particles, int orbitals)
    : particles_(particles), orbitals_(orbitals) {
  if (particles < 0 || orbitals < 1 || orbitals > 64 || particles > orbitals)
    fail(ErrorCode::BadShape,
         "invalid shape: N=" + std::to_string(particles) +
             ", d=" + std::to_string(orbitals));
}

void FermionState::validate_key(const OrbitalIndexSet& key) const {
  if (key.size() != particles_ || key.max_index() > orbitals_)
    fail(ErrorCode::BadShape, "index set does not fit (N=" +
                                  std::to_string(particles_) +
                                  ", d=" + std::to_string(orbitals_) + ")");
}

Complex FermionState::amplitude(const OrbitalIndexSet& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

void FermionState::set_amplitude(const OrbitalIndexSet& key, Complex value) {
  validate_key(key);
  if (value == Complex(0.0, 0.0))
    terms_.erase(key);
  else
    terms_[key] = value;
}

void FermionState::add_term(std::span<const int> indices, Complex value) {
  auto [key, sign] = OrbitalIndexSet::canonicalize(indices);
  validate_key(key);
  Complex next = amplitude(key) + double(sign) * value;
  set_amplitude(key, next);
}

std::vector<OrbitalIndexSet> FermionState::sorted_keys() const {
  std::vector<OrbitalIndexSet> keys;
  keys.reserve(terms_.size());
  for (const auto& [key, value] : terms_) keys.push_back(key);
  std::sort(keys.begin(), keys.end(),
            [](const OrbitalIndexSet& a, const OrbitalIndexSet& b) {
              return a.indices() < b.indices();
            });
  return keys;
}

double FermionState::squared_norm() const {
  double total = 0.0;
  for (const auto& [key, value] : terms_) total += std::norm(value);
  return total;
}

double FermionState::norm() const { return std::sqrt(squared_norm()); }

bool FermionState::is_normalized(double tol) const {
  return std::abs(squared_norm() - 1.0) <= tol;
}

FermionState normalize(const FermionState& state) {
  double n = state.norm();
  if (n < kZeroStateTol)
    fail(ErrorCode::ZeroState, "cannot normalize the zero state");
  FermionState out(state.particles(), state.orbitals());
  for (const auto& [key, value] : state.terms())
    out.set_amplitude(key, value / n);
  return out;
}

Complex inner_product(const FermionState& a, const FermionState& b) {
  if (a.particles() != b.particles() || a.orbitals() != b.orbitals())
    fail(ErrorCode::ShapeMismatch, "inner_product: states have different (N, d)");
  // Iterate the smaller support.
  const FermionState& small = a.term_count() <= b.term_count() ? a : b;
  Complex sum(0.0, 0.0);
  for (const auto& [key, value] : small.terms())
    sum += std::conj(a.amplitude(key)) * b.amplitude(key);
  return sum;
}

double frame_orthonormality_error(const Matrix& frame) {
  Matrix gram = frame.adjoint() * frame;
  gram -= Matrix::Identity(frame.cols(), frame.cols());
  return gram.cwiseAbs().maxCoeff();
}

void require_orthonormal(const Matrix& frame, double hard_tol) {
  if (frame.cols() == 0) return;
  if (frame_orthonormality_error(frame) > hard_tol)
    fail(ErrorCode::NotOrthonormal,
         "frame columns are not orthonormal (deviation above " +
             std::to_string(hard_tol) + ")");
}

Complex det_small(const Matrix& m) {
  switch (m.rows()) {
    case 0:
      return Complex(1.0, 0.0);
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default:
      return m.determinant();
  }
}

namespace {

constexpr double kEnumGuard = 2e6;  // cap on C(d,N) enumerations

Matrix gather(const Matrix& m, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows.size(); ++r)
      out(r, c) = m(rows[r] - 1, cols[c] - 1);
  return out;
}

}  // namespace

FermionState slater_amplitudes(const Matrix& frame) {
  const int d = static_cast<int>(frame.rows());
  const int n = static_cast<int>(frame.cols());
  if (n < 1 || n > d)
    fail(ErrorCode::BadShape, "slater_amplitudes: frame must be d x N, N <= d");
  require_orthonormal(frame);
  if (binomial(d, n) > kEnumGuard)
    fail(ErrorCode::TooLarge, "slater_amplitudes: C(d,N) too large");

  std::vector<int> all_cols(n);
  for (int i = 0; i < n; ++i) all_cols[i] = i + 1;

  FermionState out(n, d);
  for (const OrbitalIndexSet& key : all_subsets(d, n)) {
    Complex c = det_small(gather(frame, key.indices(), all_cols));
    if (std::abs(c) > 0) out.set_amplitude(key, c);
  }
  return out;
}

Complex overlap(const Matrix& frame, const FermionState& state) {
  const int d = state.orbitals();
  const int n = state.particles();
  if (frame.rows() != d || frame.cols() != n)
    fail(ErrorCode::ShapeMismatch, "overlap: frame shape does not match state");
  require_orthonormal(frame);

  std::vector<int> all_cols(n);
  for (int i = 0; i < n; ++i) all_cols[i] = i + 1;

  Complex sum(0.0, 0.0);
  for (const auto& [key, value] : state.terms())
    sum += std::conj(det_small(gather(frame, key.indices(), all_cols))) * value;
  return sum;
}

Vector interior_contraction(const FermionState& state,
                            const std::vector<Vector>& partial) {
  const int d = state.orbitals();
  const int n = state.particles();
  if (static_cast<int>(partial.size()) != n - 1)
    fail(ErrorCode::ShapeMismatch,
         "interior_contraction: need exactly N-1 orbitals");
  for (const Vector& phi : partial)
    if (phi.size() != d)
      fail(ErrorCode::ShapeMismatch,
           "interior_contraction: orbital dimension mismatch");

  // v_k = sum_{J contains k} C_J (-1)^(p+1) det(minor_p), where A is the
  // (N-1) x N matrix A[i][p] = conj(phi_{i+1}[j_p]) and minor_p deletes
  // column p. This is the first-row Laplace expansion of the overlap
  // determinant with e_k in the first slot.
  Vector v = Vector::Zero(d);
  for (const auto& [key, value] : state.terms()) {
    std::vector<int> idx = key.indices();
    Matrix a(n - 1, n);
    for (int i = 0; i < n - 1; ++i)
      for (int p = 0; p < n; ++p) a(i, p) = std::conj(partial[i](idx[p] - 1));
    for (int p = 0; p < n; ++p) {
      Matrix minor(n - 1, n - 1);
      for (int q = 0, col = 0; q < n; ++q) {
        if (q == p) continue;
        minor.col(col++) = a.col(q);
      }
      double sign = (p % 2 == 0) ? 1.0 : -1.0;
      v(idx[p] - 1) += value * sign * det_small(minor);
    }
  }
  return v;
}

Vector interior_contraction(const FermionState& state, const Matrix& partial) {
  std::vector<Vector> cols;
  cols.reserve(partial.cols());
  for (int c = 0; c < partial.cols(); ++c) cols.push_back(partial.col(c));
  return interior_contraction(state, cols);
}

FermionState rotate_basis(const FermionState& state, const Matrix& unitary) {
  const int d = state.orbitals();
  const int n = state.particles();
  if (unitary.rows() != d || unitary.cols() != d)
    fail(ErrorCode::ShapeMismatch, "rotate_basis: U must be d x d");
  Matrix gram = unitary.adjoint() * unitary;
  gram -= Matrix::Identity(d, d);
  if (gram.cwiseAbs().maxCoeff() > kUnitaryHardTol)
    fail(ErrorCode::NotUnitary, "rotate_basis: matrix is not unitary");
  if (binomial(d, n) > kEnumGuard)
    fail(ErrorCode::TooLarge, "rotate_basis: C(d,N) too large");

  FermionState out(n, d);
  for (const OrbitalIndexSet& target : all_subsets(d, n)) {
    std::vector<int> rows = target.indices();
    Complex sum(0.0, 0.0);
    for (const auto& [key, value] : state.terms())
      sum += det_small(gather(unitary, rows, key.indices())) * value;
    if (std::abs(sum) > 1e-300) out.set_amplitude(target, sum);
  }
  return out;
}

FermionState random_state(int particles, int orbitals, std::uint64_t seed) {
  if (particles < 1 || particles > orbitals)
    fail(ErrorCode::BadShape, "random_state: need 0 < N <= d");
  if (binomial(orbitals, particles) > kEnumGuard)
    fail(ErrorCode::TooLarge, "random_state: C(d,N) too large");
  Rng rng(seed);
  FermionState out(particles, orbitals);
  for (const OrbitalIndexSet& key : all_subsets(orbitals, particles))
    out.set_amplitude(key, rng.complex_normal());
  return normalize(out);
}

Matrix orthonormal_completion(const Matrix& frame) {
  const int d = static_cast<int>(frame.rows());
  const int m = static_cast<int>(frame.cols());
  require_orthonormal(frame);
  Matrix out(d, d - m);
  int filled = 0;
  // Gram-Schmidt coordinate vectors against the frame; deterministic and
  // alignment-preserving for basis-aligned frames.
  for (int k = 0; k < d && filled < d - m; ++k) {
    Vector v = Vector::Zero(d);
    v(k) = 1.0;
    v -= frame * (frame.adjoint() * v);
    if (filled > 0) {
      auto accepted = out.leftCols(filled);
      v -= accepted * (accepted.adjoint() * v);
      v -= accepted * (accepted.adjoint() * v);  // second pass for stability
    }
    double n = v.norm();
    if (n > 1e-6) out.col(filled++) = v / n;
  }
  if (filled < d - m)
    fail(ErrorCode::BadShape, "orthonormal_completion: frame is rank-deficient");
  return out;
}

Matrix basis_with_first(const Vector& first) {
  const int d = static_cast<int>(first.size());
  Vector f = first;
  double n = f.norm();
  if (n < 1e-12) fail(ErrorCode::BadShape, "basis_with_first: zero vector");
  f /= n;
  Matrix out(d, d);
  out.col(0) = f;
  out.rightCols(d - 1) = orthonormal_completion(f);
  return out;
}

}  // namespace fermi
