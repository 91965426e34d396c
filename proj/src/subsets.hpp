// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace fermi {

/// Sorted set of 1-based orbital indices, stored as a 64-bit occupation
/// mask (bit i-1 set means orbital i is occupied). Supports up to 64
/// orbitals, which covers every regime this library targets.
class OrbitalIndexSet {
 public:
  OrbitalIndexSet() = default;

  /// Builds from strictly increasing 1-based indices. Throws BadShape on
  /// violations.
  static OrbitalIndexSet from_sorted(std::span<const int> indices);

  /// Builds from arbitrary-order indices, returning the permutation sign
  /// needed to sort them. Duplicates throw BadShape; wedge products with a
  /// repeated orbital vanish, so they are never valid keys.
  static std::pair<OrbitalIndexSet, int> canonicalize(
      std::span<const int> indices);

  std::vector<int> indices() const;
  int size() const { return static_cast<int>(__builtin_popcountll(mask_)); }
  bool empty() const { return mask_ == 0; }
  bool contains(int orbital) const {
    return (mask_ >> (orbital - 1)) & 1ULL;
  }
  /// 1-based position of `orbital` within the sorted index list.
  int position_of(int orbital) const;
  int max_index() const;
  std::uint64_t bits() const { return mask_; }

  OrbitalIndexSet without(int orbital) const;
  OrbitalIndexSet with(int orbital) const;

  friend auto operator<=>(const OrbitalIndexSet&,
                          const OrbitalIndexSet&) = default;

 private:
  explicit OrbitalIndexSet(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

/// All N-subsets of {1..d} in lexicographic order.
std::vector<OrbitalIndexSet> all_subsets(int d, int n);

/// Sign (-1)^(pos-1) picked up when moving `orbital` to the front of the
/// wedge monomial indexed by J. Requires J.contains(orbital).
int removal_sign(const OrbitalIndexSet& J, int orbital);

/// Binomial coefficient with saturation, used for size guards.
double binomial(int n, int k);

}  // namespace fermi
