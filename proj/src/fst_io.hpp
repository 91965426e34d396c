// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "fock.hpp"

namespace fermi {

// ".fst" state files (UTF-8 text):
//   line 1:        "d N"
//   data lines:    "j1 j2 ... jN re im"  (1-based, whitespace separated)
//   '#' starts a comment; blank lines are skipped.
// Index tuples may be unsorted (the sorting sign is applied); a repeated
// canonical index set across lines is an error.

FermionState parse_fst(std::istream& in, const std::string& source,
                       bool normalize_on_load);
FermionState load_fst(const std::string& path, bool normalize_on_load);

void write_fst(const FermionState& state, std::ostream& out);
void save_fst(const FermionState& state, const std::string& path);

}  // namespace fermi
