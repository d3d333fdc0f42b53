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
 * Experiment sweeps producing CSV tables, and the worker pool running them.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "bpqm/codes.hpp"

namespace bpqm::experiments {

/// BPQM_THREADS when set to a positive integer, else hardware concurrency.
std::size_t default_threads();

/**
 * @brief Evaluates f(0..count-1) on up to `threads` workers and returns the
 * results in index order. The first exception thrown is rethrown.
 */
template <class F>
auto parallel_map(std::size_t count, std::size_t threads, F &&f)
    -> std::vector<decltype(f(std::size_t{}))> {
    using R = decltype(f(std::size_t{}));
    std::vector<R> out(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = count;
            }
        }
    };
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Round-trippable decimal rendering.
std::string format_number(double v);

/// 64-bit FNV-1a of `text`, as 16 hex digits.
std::string config_hash(const std::string &text);

/// Header, rows, then "# bpqm-lab <version> <config-hash>".
void write_csv(std::ostream &os, const Table &table, const std::string &config);

using Progress = std::function<void(const std::string &)>;

struct RunOptions {
    std::size_t threads{1};
    Progress progress;
};

/// Default channel-angle grid 0.05 pi, 0.10 pi, ..., 0.45 pi.
std::vector<double> default_theta_grid();

/// Columns B, theta, epsilon for bit r at the all-zero codeword.
Table fig12(const codes::BinaryLinearCode &code, double theta, const std::vector<int> &bits,
            std::size_t r, const RunOptions &opt);

/// Columns theta, target, decoder, success for the unrolled decoders.
Table fig16(const codes::BinaryLinearCode &code, const std::vector<double> &thetas,
            const std::vector<std::size_t> &hs, const std::vector<std::size_t> &bit_targets,
            bool block, const RunOptions &opt);

/// Columns theta_prime, decoder, success at fixed theta.
Table fig17(const codes::BinaryLinearCode &code, double theta,
            const std::vector<double> &theta_primes, std::size_t r, std::size_t h,
            const RunOptions &opt);

/// Default decoder-angle grid for fig17: 0.05 pi to 0.45 pi in steps of 0.005 pi.
std::vector<double> default_theta_prime_grid();

/// Columns theta, decoder, success for the subtree strategies and h=1, h=2.
Table fig19(const codes::BinaryLinearCode &code, const std::vector<double> &thetas,
            const RunOptions &opt);

/// Columns theta, target, decoder, success for a tree code: exact BPQM,
/// the quantum optimum and the classical MAP baseline.
Table custom(const codes::BinaryLinearCode &code, const std::vector<double> &thetas,
             const std::vector<std::size_t> &bit_targets, bool block, const RunOptions &opt);

} // namespace bpqm::experiments
