// Copyright 2026 The wqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace wqaoa {

// All library errors derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Problem too large for exhaustive or statevector treatment.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A rescaling was requested for an all-zero coefficient set.
class DegenerateScaleError : public Error {
 public:
  using Error::Error;
};

// The weight distribution lacks a moment the operation needs (Cauchy).
class UnsupportedMomentError : public Error {
 public:
  using Error::Error;
};

// Graph generation could not satisfy its constraints.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// An iterative numerical method failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration or input file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void fail_precondition(const std::string& what);

inline void require(bool condition, const char* what) {
  if (!condition) fail_precondition(what);
}

}  // namespace wqaoa
