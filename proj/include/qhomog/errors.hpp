// Copyright 2026 The qhomog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QHOMOG_ERRORS_HPP
#define QHOMOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qhomog {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operand dimensions are inconsistent (shape mismatch, wire out of range).
struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// Input violates a documented precondition (non-Hermitian, not PSD,
// parameter out of range, reservoir too small).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Experiment configuration is malformed (unknown field, bad value).
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// A numerical routine failed to meet its contract.
struct NumericalError : Error {
  explicit NumericalError(const std::string& what) : Error(what) {}
};

}  // namespace qhomog

#endif  // QHOMOG_ERRORS_HPP
