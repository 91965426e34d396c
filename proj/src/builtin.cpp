// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "builtin.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace fermi {

namespace {

struct NameSpec {
  std::string name;
  std::vector<double> args;
};

NameSpec parse_spec(const std::string& spec) {
  NameSpec out;
  auto open = spec.find('(');
  if (open == std::string::npos) {
    out.name = spec;
    return out;
  }
  if (spec.back() != ')')
    fail(ErrorCode::UnknownName, "malformed state name '" + spec + "'");
  out.name = spec.substr(0, open);
  std::string args = spec.substr(open + 1, spec.size() - open - 2);
  std::stringstream ss(args);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.args.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorCode::UnknownName,
           "bad numeric argument '" + tok + "' in '" + spec + "'");
    }
  }
  return out;
}

double arg_or(const NameSpec& s, std::size_t i, double fallback) {
  return i < s.args.size() ? s.args[i] : fallback;
}

FermionState ghz(double a, double b, int n) {
  if (n < 2) fail(ErrorCode::BadShape, "ghz: requires N >= 2");
  FermionState state(n, 2 * n);
  std::vector<int> first(n), second(n);
  std::iota(first.begin(), first.end(), 1);
  std::iota(second.begin(), second.end(), n + 1);
  state.add_term(first, a);
  state.add_term(second, b);
  return normalize(state);
}

FermionState example2(double a, double b, int n) {
  if (n < 3) fail(ErrorCode::BadShape, "example2: requires N >= 3");
  FermionState state(n, 2 * n - 1);
  std::vector<int> first(n), second(n);
  std::iota(first.begin(), first.end(), 1);
  second[0] = 1;
  std::iota(second.begin() + 1, second.end(), n + 1);
  state.add_term(first, a);
  state.add_term(second, b);
  return normalize(state);
}

}  // namespace

FermionState builtin_state(const std::string& name_spec) {
  const double root23 = std::sqrt(2.0 / 3.0);
  const double root13 = std::sqrt(1.0 / 3.0);
  const double c_default = std::sqrt(0.11);
  NameSpec spec = parse_spec(name_spec);

  if (spec.name == "ghz") {
    return ghz(arg_or(spec, 0, root23), arg_or(spec, 1, root13),
               static_cast<int>(arg_or(spec, 2, 3)));
  }
  if (spec.name == "example2") {
    return example2(arg_or(spec, 0, root23), arg_or(spec, 1, root13),
                    static_cast<int>(arg_or(spec, 2, 3)));
  }
  if (spec.name == "example3") {
    FermionState state(3, 7);
    state.add_term({1, 2, 3}, arg_or(spec, 0, 0.8));
    state.add_term({3, 4, 5}, arg_or(spec, 1, 0.5));
    state.add_term({5, 6, 7}, arg_or(spec, 2, c_default));
    return normalize(state);
  }
  if (spec.name == "example3b") {
    FermionState state(4, 9);
    state.add_term({1, 2, 3, 4}, arg_or(spec, 0, 0.8));
    state.add_term({4, 5, 6, 7}, arg_or(spec, 1, 0.5));
    state.add_term({7, 8, 9, 1}, arg_or(spec, 2, c_default));
    return normalize(state);
  }
  if (spec.name == "example4") {
    FermionState state(2, 3);
    state.add_term({1, 2}, arg_or(spec, 0, 0.8));
    state.add_term({2, 3}, arg_or(spec, 1, 0.5));
    state.add_term({3, 1}, arg_or(spec, 2, c_default));
    return normalize(state);
  }
  if (spec.name == "eq36") {
    FermionState state(3, 6);
    state.add_term({1, 2, 4}, root13);
    state.add_term({1, 5, 3}, root13);
    state.add_term({6, 2, 3}, root13);
    return normalize(state);
  }
  if (spec.name == "fourterm") {
    FermionState state(3, 6);
    state.add_term({1, 2, 3}, 0.5);
    state.add_term({1, 5, 4}, 0.5);
    state.add_term({6, 5, 3}, 0.5);
    state.add_term({6, 2, 4}, 0.5);
    return normalize(state);
  }
  if (spec.name == "cyclic") {
    FermionState state(3, 6);
    const double amp = 1.0 / std::sqrt(6.0);
    state.add_term({1, 2, 3}, amp);
    state.add_term({2, 3, 4}, amp);
    state.add_term({3, 4, 5}, amp);
    state.add_term({4, 5, 6}, amp);
    state.add_term({5, 6, 1}, amp);
    state.add_term({6, 1, 2}, amp);
    return normalize(state);
  }
  fail(ErrorCode::UnknownName, "unknown builtin state '" + name_spec + "'");
}

std::vector<std::string> builtin_names() {
  return {"ghz",      "example2", "example3", "example3b",
          "example4", "eq36",     "fourterm", "cyclic"};
}

}  // namespace fermi
