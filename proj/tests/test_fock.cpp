// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "fock.hpp"
#include "oracle.hpp"
#include "rng.hpp"

using namespace fermi;
using testutil::basis_state;

namespace {

Matrix coordinate_frame(int d, std::initializer_list<int> cols) {
  Matrix f = Matrix::Zero(d, cols.size());
  int c = 0;
  for (int idx : cols) f(idx - 1, c++) = 1.0;
  return f;
}

}  // namespace

TEST_CASE("normalize scales amplitudes and preserves phases") {
  FermionState s(3, 6);
  s.add_term({1, 2, 3}, 2.0);
  FermionState n = normalize(s);
  CHECK(std::abs(n.amplitude(OrbitalIndexSet::from_sorted(
            std::vector<int>{1, 2, 3})) -
        Complex(1.0, 0.0)) < 1e-15);

  FermionState two(3, 6);
  two.add_term({1, 2, 3}, 1.0);
  two.add_term({4, 5, 6}, 1.0);
  FermionState n2 = normalize(two);
  for (const auto& [key, amp] : n2.terms())
    CHECK(std::abs(amp - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);

  FermionState pyth(2, 4);
  pyth.add_term({1, 2}, 3.0);
  pyth.add_term({3, 4}, 4.0);
  FermionState n3 = normalize(pyth);
  CHECK(std::abs(n3.amplitude(OrbitalIndexSet::from_sorted(
            std::vector<int>{1, 2})) -
        Complex(0.6, 0.0)) < 1e-15);
  CHECK(std::abs(n3.amplitude(OrbitalIndexSet::from_sorted(
            std::vector<int>{3, 4})) -
        Complex(0.8, 0.0)) < 1e-15);
}

TEST_CASE("normalize rejects the zero state") {
  FermionState zero(3, 6);
  CHECK_THROWS_AS(normalize(zero), Error);
  try {
    normalize(zero);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroState);
  }
}

TEST_CASE("unsorted terms are canonicalized with the permutation sign") {
  FermionState even(3, 6);
  even.add_term({3, 1, 2}, 1.0);  // even permutation
  CHECK(even.amplitude(OrbitalIndexSet::from_sorted(std::vector<int>{1, 2, 3}))
            .real() == doctest::Approx(1.0));

  FermionState odd(3, 6);
  odd.add_term({2, 1, 3}, 1.0);  // odd permutation
  CHECK(odd.amplitude(OrbitalIndexSet::from_sorted(std::vector<int>{1, 2, 3}))
            .real() == doctest::Approx(-1.0));

  FermionState dup(3, 6);
  CHECK_THROWS_AS(dup.add_term({1, 1, 2}, 1.0), Error);
}

TEST_CASE("inner product on basis states and Slater pairs") {
  FermionState a = basis_state(6, {1, 2, 3});
  CHECK(std::abs(inner_product(a, a) - Complex(1.0, 0.0)) < 1e-15);

  FermionState b = basis_state(6, {1, 2, 4});
  CHECK(std::abs(inner_product(a, b)) < 1e-15);

  // Swapping two orbitals of a frame flips the determinant sign.
  FermionState phi = slater_amplitudes(coordinate_frame(4, {1, 2}));
  FermionState psi = slater_amplitudes(coordinate_frame(4, {2, 1}));
  CHECK(inner_product(phi, psi).real() == doctest::Approx(-1.0));

  FermionState other(3, 7);
  other.add_term({1, 2, 3}, 1.0);
  CHECK_THROWS_AS(inner_product(a, other), Error);
}

TEST_CASE("inner product is conjugate symmetric") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    FermionState a = random_state(3, 6, derive_seed(11, seed));
    FermionState b = random_state(3, 6, derive_seed(12, seed));
    Complex ab = inner_product(a, b);
    Complex ba = inner_product(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-14);
  }
}

TEST_CASE("slater_amplitudes on coordinate frames") {
  FermionState s = slater_amplitudes(coordinate_frame(6, {1, 2, 3}));
  CHECK(s.term_count() == 1);
  CHECK(s.amplitude(OrbitalIndexSet::from_sorted(std::vector<int>{1, 2, 3}))
            .real() == doctest::Approx(1.0));

  FermionState swapped = slater_amplitudes(coordinate_frame(6, {2, 1, 3}));
  CHECK(swapped
            .amplitude(OrbitalIndexSet::from_sorted(std::vector<int>{1, 2, 3}))
            .real() == doctest::Approx(-1.0));
}

TEST_CASE("slater_amplitudes of a mixed frame matches brute-force minors") {
  // phi1 = (e1 + e4)/sqrt(2), phi2 = e2, phi3 = e3 in d = 6.
  Matrix frame = Matrix::Zero(6, 3);
  frame(0, 0) = frame(3, 0) = 1.0 / std::sqrt(2.0);
  frame(1, 1) = 1.0;
  frame(2, 2) = 1.0;
  FermionState s = slater_amplitudes(frame);

  // Frozen values computed by direct 3x3 determinants over all 20 subsets.
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(s.amplitude(OrbitalIndexSet::from_sorted(std::vector<int>{1, 2, 3}))
            .real() == doctest::Approx(r).epsilon(1e-12));
  CHECK(s.amplitude(OrbitalIndexSet::from_sorted(std::vector<int>{2, 3, 4}))
            .real() == doctest::Approx(r).epsilon(1e-12));
  CHECK(s.term_count() == 2);

  // Full cross-check against the independent Laplace-expansion oracle.
  for (const OrbitalIndexSet& key : all_subsets(6, 3)) {
    Matrix sub(3, 3);
    std::vector<int> rows = key.indices();
    for (int c = 0; c < 3; ++c)
      for (int rr = 0; rr < 3; ++rr) sub(rr, c) = frame(rows[rr] - 1, c);
    CHECK(std::abs(s.amplitude(key) - testutil::laplace_det(sub)) < 1e-13);
  }
  CHECK(s.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Cauchy-Binet: Slater expansions of random frames are normalized") {
  for (auto [d, n] : {std::pair{4, 2}, std::pair{6, 3}, std::pair{7, 4}}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      Rng rng(derive_seed(21, seed * 10 + d));
      Matrix frame = rng.haar_frame(d, n);
      FermionState s = slater_amplitudes(frame);
      CHECK(std::abs(s.squared_norm() - 1.0) < 1e-10);
      CHECK(std::abs(overlap(frame, s) - Complex(1.0, 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("slater_amplitudes rejects non-orthonormal frames") {
  Matrix frame = Matrix::Zero(6, 3);
  frame(0, 0) = 1.0;
  frame(0, 1) = 1.0;  // duplicate column
  frame(2, 2) = 1.0;
  CHECK_THROWS_AS(slater_amplitudes(frame), Error);
}

TEST_CASE("overlap on basis states") {
  FermionState psi = basis_state(6, {1, 2, 3});
  CHECK(std::abs(overlap(coordinate_frame(6, {1, 2, 3}), psi) -
                 Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(overlap(coordinate_frame(6, {1, 2, 4}), psi)) < 1e-15);
}

TEST_CASE("overlap of the paired frame with the degenerate three-term state") {
  // phi_i = sqrt(2/3) e_i + sqrt(1/3) e_{7-i}; the three-term (3,6) state
  // with all occupations 2/3 and 1/3 has |overlap| = 2/3 with it.
  FermionState psi(3, 6);
  const double amp = 1.0 / std::sqrt(3.0);
  psi.add_term({1, 2, 4}, amp);
  psi.add_term({1, 5, 3}, amp);
  psi.add_term({6, 2, 3}, amp);
  psi = normalize(psi);

  Matrix frame = Matrix::Zero(6, 3);
  const double a = std::sqrt(2.0 / 3.0);
  const double b = std::sqrt(1.0 / 3.0);
  for (int i = 0; i < 3; ++i) {
    frame(i, i) = a;
    frame(6 - i - 1, i) = b;
  }
  CHECK(std::abs(overlap(frame, psi)) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("interior contraction sign bookkeeping") {
  FermionState psi = basis_state(6, {1, 2, 3});

  std::vector<Vector> partial{coordinate_frame(6, {2}).col(0),
                              coordinate_frame(6, {3}).col(0)};
  Vector v = interior_contraction(psi, partial);
  CHECK(std::abs(v(0) - Complex(1.0, 0.0)) < 1e-15);
  for (int k = 1; k < 6; ++k) CHECK(std::abs(v(k)) < 1e-15);

  std::vector<Vector> partial2{coordinate_frame(6, {1}).col(0),
                               coordinate_frame(6, {2}).col(0)};
  Vector v2 = interior_contraction(psi, partial2);
  CHECK(std::abs(v2(2) - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("interior contraction of the two-determinant state") {
  // a = b = 1/sqrt(2): contraction against (e2, e3) leaves e1/sqrt(2).
  FermionState ghz(3, 6);
  ghz.add_term({1, 2, 3}, 1.0);
  ghz.add_term({4, 5, 6}, 1.0);
  ghz = normalize(ghz);

  std::vector<Vector> partial{coordinate_frame(6, {2}).col(0),
                              coordinate_frame(6, {3}).col(0)};
  Vector v = interior_contraction(ghz, partial);

  // Independent check: v_k must be the brute-force overlap of
  // (e_k, e_2, e_3) with the state, for every k.
  for (int k = 1; k <= 6; ++k) {
    Matrix frame = Matrix::Zero(6, 3);
    frame(k - 1, 0) = 1.0;
    frame(1, 1) = 1.0;
    frame(2, 2) = 1.0;
    Complex expected = testutil::naive_overlap(frame, ghz);
    CHECK(std::abs(v(k - 1) - expected) < 1e-13);
  }
  CHECK(std::abs(v(0) - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-13);
}

TEST_CASE("interior contraction linearizes the overlap in the first slot") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    FermionState psi = random_state(3, 7, derive_seed(31, seed));
    Rng rng(derive_seed(32, seed));
    Matrix frame = rng.haar_frame(7, 3);
    std::vector<Vector> partial{frame.col(1), frame.col(2)};
    Vector v = interior_contraction(psi, partial);
    Complex via_contraction = frame.col(0).dot(v);  // (phi_1, v)
    Complex direct = overlap(frame, psi);
    CHECK(std::abs(via_contraction - direct) < 1e-10);
  }
}

TEST_CASE("interior contraction validates shapes") {
  FermionState psi = basis_state(6, {1, 2, 3});
  std::vector<Vector> too_few{coordinate_frame(6, {2}).col(0)};
  CHECK_THROWS_AS(interior_contraction(psi, too_few), Error);
}

TEST_CASE("rotate_basis identity and permutations") {
  FermionState psi = basis_state(6, {1, 2, 3});
  FermionState same = rotate_basis(psi, Matrix::Identity(6, 6));
  CHECK(testutil::state_distance(psi, same) < 1e-15);

  // Swap orbitals 3 and 4: |123> -> |124> with sign +1.
  Matrix perm = Matrix::Identity(6, 6);
  perm(2, 2) = perm(3, 3) = 0.0;
  perm(3, 2) = perm(2, 3) = 1.0;
  FermionState moved = rotate_basis(psi, perm);
  CHECK(moved.amplitude(OrbitalIndexSet::from_sorted(std::vector<int>{1, 2, 4}))
            .real() == doctest::Approx(1.0));
  CHECK(moved.term_count() == 1);
}

TEST_CASE("rotate_basis preserves norm for random unitaries") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    FermionState psi = random_state(3, 6, derive_seed(41, seed));
    Rng rng(derive_seed(42, seed));
    Matrix u = rng.haar_unitary(6);
    FermionState rotated = rotate_basis(psi, u);
    CHECK(std::abs(rotated.squared_norm() - 1.0) < 1e-10);
    // Rotating back recovers the state.
    FermionState back = rotate_basis(rotated, Matrix(u.adjoint()));
    CHECK(testutil::state_distance(psi, back) < 1e-10);
  }
}

TEST_CASE("rotate_basis rejects non-unitary matrices") {
  FermionState psi = basis_state(6, {1, 2, 3});
  Matrix bad = Matrix::Identity(6, 6) * 1.5;
  CHECK_THROWS_AS(rotate_basis(psi, bad), Error);
}

TEST_CASE("random_state is deterministic and shape-checked") {
  FermionState a = random_state(3, 6, 7);
  FermionState b = random_state(3, 6, 7);
  CHECK(testutil::state_distance(a, b) == 0.0);
  CHECK(a.is_normalized());

  FermionState tiny = random_state(2, 2, 123);
  CHECK(tiny.term_count() == 1);
  CHECK(std::abs(std::abs(tiny.amplitude(OrbitalIndexSet::from_sorted(
            std::vector<int>{1, 2}))) -
        1.0) < 1e-12);

  CHECK_THROWS_AS(random_state(3, 2, 0), Error);
}

TEST_CASE("random_state occupations average to N/d") {
  const int samples = 1000;
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(6);
  for (int s = 0; s < samples; ++s) {
    FermionState psi = random_state(3, 6, derive_seed(51, s));
    for (const auto& [key, amp] : psi.terms())
      for (int idx : key.indices()) mean(idx - 1) += std::norm(amp);
  }
  mean /= samples;
  for (int i = 0; i < 6; ++i) CHECK(std::abs(mean(i) - 0.5) < 0.05);
}

TEST_CASE("orthonormal completion spans the complement") {
  Rng rng(99);
  Matrix frame = rng.haar_frame(6, 3);
  Matrix comp = orthonormal_completion(frame);
  Matrix full(6, 6);
  full.leftCols(3) = frame;
  full.rightCols(3) = comp;
  CHECK(frame_orthonormality_error(full) < 1e-10);
}
