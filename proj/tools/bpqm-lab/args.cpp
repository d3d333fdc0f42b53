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
#include "args.hpp"

#include <charconv>
#include <cmath>

namespace bpqm::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(std::string_view s, std::string_view whole) {
    double v = 0.0;
    const auto *end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != end || !std::isfinite(v)) {
        throw InvalidInput("not a number: '" + std::string(whole) + "'");
    }
    return v;
}

long parse_long(std::string_view s, std::string_view whole) {
    long v = 0;
    const auto *end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != end) {
        throw InvalidInput("not an integer: '" + std::string(whole) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return parts;
}

} // namespace

double parse_theta(std::string_view text) {
    const auto s = trim(text);
    const auto at = s.find("pi");
    if (at == std::string_view::npos) {
        return parse_double(s, text);
    }
    auto head = trim(s.substr(0, at));
    const auto tail = trim(s.substr(at + 2));
    if (!head.empty() && head.back() == '*') {
        head = trim(head.substr(0, head.size() - 1));
    }
    double v = head.empty() ? 1.0 : parse_double(head, text);
    if (!tail.empty()) {
        if (tail.front() != '/') {
            throw InvalidInput("bad angle: '" + std::string(text) + "'");
        }
        const double d = parse_double(trim(tail.substr(1)), text);
        if (d == 0.0) {
            throw InvalidInput("bad angle: '" + std::string(text) + "'");
        }
        v /= d;
    }
    return v * kPi;
}

std::vector<double> parse_theta_list(std::string_view text) {
    const auto s = trim(text);
    std::vector<double> out;
    if (const auto dots = s.find(".."); dots != std::string_view::npos) {
        const auto colon = s.find(':', dots);
        if (colon == std::string_view::npos) {
            throw InvalidInput("angle range needs a step, as in 0.05pi..0.45pi:0.05pi");
        }
        const double a = parse_theta(s.substr(0, dots));
        const double b = parse_theta(s.substr(dots + 2, colon - dots - 2));
        const double step = parse_theta(s.substr(colon + 1));
        if (step <= 0.0 || b < a) {
            throw InvalidInput("empty angle range: '" + std::string(text) + "'");
        }
        const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9));
        for (long i = 0; i <= count; ++i) {
            out.push_back(a + static_cast<double>(i) * step);
        }
        return out;
    }
    for (auto part : split(s, ',')) {
        out.push_back(parse_theta(part));
    }
    return out;
}

std::vector<int> parse_int_list(std::string_view text) {
    const auto s = trim(text);
    std::vector<int> out;
    if (const auto dots = s.find(".."); dots != std::string_view::npos) {
        const auto colon = s.find(':', dots);
        const long a = parse_long(trim(s.substr(0, dots)), text);
        const long b = parse_long(
            trim(s.substr(dots + 2, colon == std::string_view::npos ? std::string_view::npos
                                                                     : colon - dots - 2)),
            text);
        const long step =
            colon == std::string_view::npos ? 1 : parse_long(trim(s.substr(colon + 1)), text);
        if (step <= 0 || b < a) {
            throw InvalidInput("empty range: '" + std::string(text) + "'");
        }
        for (long v = a; v <= b; v += step) {
            out.push_back(static_cast<int>(v));
        }
        return out;
    }
    for (auto part : split(s, ',')) {
        out.push_back(static_cast<int>(parse_long(part, text)));
    }
    return out;
}

Bits parse_bits(std::string_view text) {
    Bits out;
    for (char c : trim(text)) {
        if (c != '0' && c != '1') {
            throw InvalidInput("not a bit string: '" + std::string(text) + "'");
        }
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (out.empty()) {
        throw InvalidInput("empty bit string");
    }
    return out;
}

} // namespace bpqm::cli
