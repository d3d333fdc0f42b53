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
 * Angle maps of the equality and check node rules.
 */
#pragma once

namespace bpqm::mpg {

/// Margin kept between computed cosines and +-1.
inline constexpr double kCosMargin = 1e-12;

/// Clamps a cosine into [-1 + margin, 1 - margin].
double clamp_cos(double c);

/// arccos(cos a * cos b).
double angle_ostar(double a, double b);

/// arccos((cos a + (-1)^l cos b) / (1 + (-1)^l cos a cos b)).
double angle_boxstar(double a, double b, int l);

/// (1 + (-1)^l cos a cos b) / 2.
double prob_boxstar(double a, double b, int l);

/// Cosine form of the check rule, used by the quantized decoder.
double cos_boxstar(double ca, double cb, int l);

} // namespace bpqm::mpg
