// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fermi {

/// Error categories surfaced through the C API as status codes.
enum class ErrorCode {
  ZeroState,
  ShapeMismatch,
  NotOrthonormal,
  NotUnitary,
  BadShape,
  NotNormalized,
  NotHermitian,
  WrongShape,
  BadRank,
  TooLarge,
  NotCertain,
  NotSimultaneous,
  NotOptimal,
  NotPaired,
  UnknownName,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace fermi
