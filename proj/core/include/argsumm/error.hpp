// Copyright 2026 The argsumm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace argsumm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration or usage (unknown enum value, missing endpoint, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data.
class DataError : public Error {
 public:
  using Error::Error;
};

/// The scorer backend failed or returned an invalid response.
class ScorerError : public Error {
 public:
  using Error::Error;
};

/// A library invariant was violated; always a defect.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace argsumm
