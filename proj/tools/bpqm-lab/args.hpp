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
 * Parsing of the small value languages used on the command line.
 */
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bpqm/common.hpp"

namespace bpqm::cli {

/// "0.2pi", "pi", "pi/4" or plain radians. Throws InvalidInput.
double parse_theta(std::string_view text);

/// Comma separated list of parse_theta values, or "a..b:step" in either unit.
std::vector<double> parse_theta_list(std::string_view text);

/// "4..16" (step 1), "4..16:2" or "4,6,8".
std::vector<int> parse_int_list(std::string_view text);

/// String of 0/1 characters.
Bits parse_bits(std::string_view text);

} // namespace bpqm::cli
