// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "fst_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace fermi {

namespace {

std::string where(const std::string& source, int line) {
  return source + ":" + std::to_string(line);
}

}  // namespace

FermionState parse_fst(std::istream& in, const std::string& source,
                       bool normalize_on_load) {
  std::string line;
  int line_no = 0;
  int d = 0, n = 0;
  bool have_header = false;
  FermionState state(1, 1);
  std::set<OrbitalIndexSet> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream tokens(line);
    if (!have_header) {
      std::string first;
      if (!(std::istringstream(line) >> first)) continue;  // blank line
      std::string rest;
      if (!(tokens >> d >> n) || (tokens >> rest))
        fail(ErrorCode::ParseError,
             where(source, line_no) + ": header must be exactly 'd N'");
      if (n < 1 || d < 1 || n > d || d > 64)
        fail(ErrorCode::ParseError,
             where(source, line_no) + ": invalid shape d=" +
                 std::to_string(d) + " N=" + std::to_string(n));
      state = FermionState(n, d);
      have_header = true;
      continue;
    }

    std::vector<int> indices(n);
    double re = 0.0, im = 0.0;
    bool blank = true;
    {
      std::istringstream probe(line);
      std::string tok;
      blank = !(probe >> tok);
    }
    if (blank) continue;
    for (int i = 0; i < n; ++i)
      if (!(tokens >> indices[i]))
        fail(ErrorCode::ParseError,
             where(source, line_no) + ": expected " + std::to_string(n) +
                 " orbital indices");
    if (!(tokens >> re >> im))
      fail(ErrorCode::ParseError,
           where(source, line_no) + ": expected 're im' amplitude pair");
    std::string rest;
    if (tokens >> rest)
      fail(ErrorCode::ParseError,
           where(source, line_no) + ": trailing tokens after amplitude");

    OrbitalIndexSet key;
    int sign = 1;
    try {
      std::tie(key, sign) = OrbitalIndexSet::canonicalize(indices);
      if (key.max_index() > d)
        fail(ErrorCode::ParseError, where(source, line_no) +
                                        ": orbital index exceeds d=" +
                                        std::to_string(d));
    } catch (const Error& e) {
      fail(ErrorCode::ParseError, where(source, line_no) + ": " + e.what());
    }
    if (!seen.insert(key).second)
      fail(ErrorCode::ParseError,
           where(source, line_no) + ": duplicate index set");
    state.set_amplitude(key, double(sign) * Complex(re, im));
  }

  if (!have_header)
    fail(ErrorCode::ParseError, source + ": missing 'd N' header line");
  if (normalize_on_load) state = normalize(state);
  return state;
}

FermionState load_fst(const std::string& path, bool normalize_on_load) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  return parse_fst(in, path, normalize_on_load);
}

void write_fst(const FermionState& state, std::ostream& out) {
  if (state.particles() < 1)
    fail(ErrorCode::BadShape, "write_fst: cannot serialize a 0-particle state");
  out << state.orbitals() << ' ' << state.particles() << '\n';
  char buf[64];
  for (const OrbitalIndexSet& key : state.sorted_keys()) {
    for (int idx : key.indices()) out << idx << ' ';
    Complex c = state.amplitude(key);
    std::snprintf(buf, sizeof buf, "%.17g %.17g", c.real(), c.imag());
    out << buf << '\n';
  }
}

void save_fst(const FermionState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  write_fst(state, out);
  if (!out) fail(ErrorCode::IoError, "error while writing '" + path + "'");
}

}  // namespace fermi
