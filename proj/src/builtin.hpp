// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "fock.hpp"

namespace fermi {

/// Catalog of reference states. Accepted names (parameters optional,
/// defaults in parentheses):
///   ghz(a,b,N)        a|1..N> + b|N+1..2N>              (sqrt(2/3), sqrt(1/3), 3)
///   example2(a,b,N)   a|1,2..N> + b|1,N+1..2N-1>        (sqrt(2/3), sqrt(1/3), 3)
///   example3(a,b,c)   a|123> + b|345> + c|567>          (0.8, 0.5, sqrt(0.11))
///   example3b(a,b,c)  a|1234> + b|4567> + c|7891>       (0.8, 0.5, sqrt(0.11))
///   example4(a,b,c)   a|12> + b|23> + c|31>             (0.8, 0.5, sqrt(0.11))
///   eq36              (|124> + |153> + |623>) / sqrt(3)
///   fourterm          (|123> + |154> + |653> + |624>) / 2
///   cyclic            (|123> + |234> + ... + |612>) / sqrt(6)
/// All states are normalized. Throws UnknownName for anything else.
FermionState builtin_state(const std::string& name_spec);

std::vector<std::string> builtin_names();

}  // namespace fermi
