// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

namespace fermi {

/// splitmix64 step; used to derive independent sub-seeds so that parallel
/// and serial runs agree bit for bit.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

/// Deterministic RNG with the complex-Gaussian and Haar-frame draws the
/// library needs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }

  std::complex<double> complex_normal() {
    double re = normal_(engine_);
    double im = normal_(engine_);
    return {re, im};
  }

  Eigen::MatrixXcd gaussian_matrix(int rows, int cols) {
    Eigen::MatrixXcd m(rows, cols);
    for (int c = 0; c < cols; ++c)
      for (int r = 0; r < rows; ++r) m(r, c) = complex_normal();
    return m;
  }

  /// Haar-distributed d x m frame with orthonormal columns (QR of a
  /// Gaussian matrix, R-diagonal phases absorbed).
  Eigen::MatrixXcd haar_frame(int rows, int cols) {
    Eigen::MatrixXcd g = gaussian_matrix(rows, cols);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q =
        qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
    Eigen::MatrixXcd r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    for (int c = 0; c < cols; ++c) {
      std::complex<double> diag = r(c, c);
      if (std::abs(diag) > 0) q.col(c) *= diag / std::abs(diag);
    }
    return q;
  }

  Eigen::MatrixXcd haar_unitary(int dim) { return haar_frame(dim, dim); }

  Eigen::VectorXcd unit_vector(int dim) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = complex_normal();
    double n = v.norm();
    while (n < 1e-12) {  // astronomically unlikely; regenerate
      for (int i = 0; i < dim; ++i) v(i) = complex_normal();
      n = v.norm();
    }
    return v / n;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace fermi
