// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "subsets.hpp"

#include <algorithm>
#include <numeric>

namespace fermi {

OrbitalIndexSet OrbitalIndexSet::from_sorted(std::span<const int> indices) {
  std::uint64_t mask = 0;
  int prev = 0;
  for (int idx : indices) {
    if (idx < 1 || idx > 64)
      fail(ErrorCode::BadShape, "orbital index out of range [1,64]: " +
                                    std::to_string(idx));
    if (idx <= prev)
      fail(ErrorCode::BadShape, "orbital indices must be strictly increasing");
    mask |= 1ULL << (idx - 1);
    prev = idx;
  }
  return OrbitalIndexSet(mask);
}

std::pair<OrbitalIndexSet, int> OrbitalIndexSet::canonicalize(
    std::span<const int> indices) {
  std::vector<int> sorted(indices.begin(), indices.end());
  // Count inversions to get the permutation sign of the sort.
  int sign = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[i] == sorted[j])
        fail(ErrorCode::BadShape,
             "duplicate orbital index " + std::to_string(sorted[i]));
      if (sorted[i] > sorted[j]) sign = -sign;
    }
  std::sort(sorted.begin(), sorted.end());
  return {from_sorted(sorted), sign};
}

std::vector<int> OrbitalIndexSet::indices() const {
  std::vector<int> out;
  out.reserve(size());
  std::uint64_t m = mask_;
  while (m) {
    int bit = __builtin_ctzll(m);
    out.push_back(bit + 1);
    m &= m - 1;
  }
  return out;
}

int OrbitalIndexSet::position_of(int orbital) const {
  // Number of occupied orbitals below `orbital`, plus one.
  std::uint64_t below = mask_ & ((1ULL << (orbital - 1)) - 1);
  return static_cast<int>(__builtin_popcountll(below)) + 1;
}

int OrbitalIndexSet::max_index() const {
  if (mask_ == 0) return 0;
  return 64 - __builtin_clzll(mask_);
}

OrbitalIndexSet OrbitalIndexSet::without(int orbital) const {
  return OrbitalIndexSet(mask_ & ~(1ULL << (orbital - 1)));
}

OrbitalIndexSet OrbitalIndexSet::with(int orbital) const {
  return OrbitalIndexSet(mask_ | (1ULL << (orbital - 1)));
}

std::vector<OrbitalIndexSet> all_subsets(int d, int n) {
  std::vector<OrbitalIndexSet> out;
  if (n < 0 || n > d) return out;
  if (n == 0) {
    out.push_back(OrbitalIndexSet{});
    return out;
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    out.push_back(OrbitalIndexSet::from_sorted(idx));
    // Advance to the next combination in lexicographic order.
    int i = n - 1;
    while (i >= 0 && idx[i] == d - n + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

int removal_sign(const OrbitalIndexSet& J, int orbital) {
  return (J.position_of(orbital) % 2 == 1) ? 1 : -1;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotCertain: return "NotCertain";
    case ErrorCode::NotSimultaneous: return "NotSimultaneous";
    case ErrorCode::NotOptimal: return "NotOptimal";
    case ErrorCode::NotPaired: return "NotPaired";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace fermi
