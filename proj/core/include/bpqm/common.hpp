// Copyright 2026 The bpqm-lab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Shared vocabulary types and error classes.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace bpqm {

/// Bit vector with one byte per entry (values 0 or 1).
using Bits = std::vector<std::uint8_t>;

inline constexpr double kPi = std::numbers::pi;

/**
 * @brief Base class of all library errors.
 */
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad matrices, out-of-range angles, unknown names.
class InvalidInput : public Error {
  public:
    using Error::Error;
};

/// A size guard (qubit count, code dimension, ...) was exceeded.
class GuardError : public Error {
  public:
    using Error::Error;
};

} // namespace bpqm
