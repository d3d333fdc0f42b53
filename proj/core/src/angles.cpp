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
#include "bpqm/angles.hpp"

#include <algorithm>
#include <cmath>

namespace bpqm::mpg {

double clamp_cos(double c) {
    return std::clamp(c, -1.0 + kCosMargin, 1.0 - kCosMargin);
}

double angle_ostar(double a, double b) {
    return std::acos(clamp_cos(std::cos(a) * std::cos(b)));
}

double cos_boxstar(double ca, double cb, int l) {
    ca = clamp_cos(ca);
    cb = clamp_cos(cb);
    const double s = (l & 1) ? -1.0 : 1.0;
    return clamp_cos((ca + s * cb) / (1.0 + s * ca * cb));
}

double angle_boxstar(double a, double b, int l) {
    return std::acos(cos_boxstar(std::cos(a), std::cos(b), l));
}

double prob_boxstar(double a, double b, int l) {
    const double s = (l & 1) ? -1.0 : 1.0;
    return 0.5 * (1.0 + s * std::cos(a) * std::cos(b));
}

} // namespace bpqm::mpg
