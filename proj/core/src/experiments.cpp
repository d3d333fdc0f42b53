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
#include "bpqm/experiments.hpp"

#include <charconv>
#include <cstdlib>
#include <cmath>
#include <ostream>
#include <sstream>

#include "bpqm/mpbpqm.hpp"
#include "bpqm/nontree.hpp"
#include "bpqm/oracles.hpp"
#include "bpqm/qsim.hpp"

namespace bpqm::experiments {

namespace {

using Row = std::vector<std::string>;
using Job = std::function<Row()>;

Table run_jobs(const std::string &label, std::vector<std::string> header,
               const std::vector<Job> &jobs, const RunOptions &opt) {
    std::atomic<std::size_t> done{0};
    std::mutex report;
    auto rows = parallel_map(jobs.size(), opt.threads, [&](std::size_t i) {
        Row row = jobs[i]();
        const auto d = ++done;
        if (opt.progress) {
            std::lock_guard lock(report);
            opt.progress(label + ": " + std::to_string(d) + "/" + std::to_string(jobs.size()));
        }
        return row;
    });
    return {std::move(header), std::move(rows)};
}

std::string target_name(std::size_t r) { return "x" + std::to_string(r + 1); }

std::vector<double> uniform(const codes::BinaryLinearCode &code, double theta) {
    return std::vector<double>(code.n(), theta);
}

} // namespace

std::size_t default_threads() {
    if (const char *env = std::getenv("BPQM_THREADS")) {
        std::size_t v = 0;
        const std::string s(env);
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec == std::errc{} && v > 0) {
            return v;
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::string format_number(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, res.ptr};
}

std::string config_hash(const std::string &text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

void write_csv(std::ostream &os, const Table &table, const std::string &config) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        os << (i ? "," : "") << table.header[i];
    }
    os << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << row[i];
        }
        os << '\n';
    }
    os << "# bpqm-lab " << BPQM_VERSION << ' ' << config_hash(config) << '\n';
}

std::vector<double> default_theta_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 9; ++i) {
        g.push_back(0.05 * i * kPi);
    }
    return g;
}

std::vector<double> default_theta_prime_grid() {
    std::vector<double> g;
    for (int i = 10; i <= 90; ++i) {
        g.push_back(0.005 * i * kPi);
    }
    return g;
}

Table fig12(const codes::BinaryLinearCode &code, double theta, const std::vector<int> &bits,
            std::size_t r, const RunOptions &opt) {
    const auto th = uniform(code, theta);
    const Bits zero(code.n(), 0);
    const double ideal = qsim::bpqm_bit_success_conditional(code, th, zero, r);
    std::vector<Job> jobs;
    for (int B : bits) {
        jobs.emplace_back([&, B] {
            const double eps = std::abs(ideal - mp::mp_bit_success(code, th, zero, r, B));
            return Row{std::to_string(B), format_number(theta), format_number(eps)};
        });
    }
    return run_jobs("fig12", {"B", "theta", "epsilon"}, jobs, opt);
}

Table fig16(const codes::BinaryLinearCode &code, const std::vector<double> &thetas,
            const std::vector<std::size_t> &hs, const std::vector<std::size_t> &bit_targets,
            bool block, const RunOptions &opt) {
    std::vector<Job> jobs;
    for (double t : thetas) {
        const std::string ts = format_number(t);
        for (auto r : bit_targets) {
            for (auto h : hs) {
                jobs.emplace_back([&code, t, ts, r, h] {
                    return Row{ts, target_name(r), "h" + std::to_string(h),
                               format_number(nontree::nontree_bit_success(
                                   code, t, r, h, nontree::ClonerSpec::enu()))};
                });
            }
            jobs.emplace_back([&code, t, ts, r] {
                return Row{ts, target_name(r), "classical_bitmap",
                           format_number(oracles::classical_map_success(
                               code, uniform(code, t), oracles::Target::bit_at(r)))};
            });
            jobs.emplace_back([&code, t, ts, r] {
                return Row{ts, target_name(r), "quantum_optimal",
                           format_number(
                               oracles::helstrom_bit_success(code, uniform(code, t), r))};
            });
        }
        if (!block) {
            continue;
        }
        for (auto h : hs) {
            jobs.emplace_back([&code, t, ts, h] {
                return Row{ts, "block", "h" + std::to_string(h),
                           format_number(nontree::nontree_block_success(
                               code, t, h, nontree::ClonerSpec::enu()))};
            });
        }
        jobs.emplace_back([&code, t, ts] {
            return Row{ts, "block", "classical_blockmap",
                       format_number(oracles::classical_map_success(
                           code, uniform(code, t), oracles::Target::block()))};
        });
        jobs.emplace_back([&code, t, ts] {
            return Row{ts, "block", "quantum_optimal",
                       format_number(oracles::pgm_block_success(code, uniform(code, t)))};
        });
    }
    return run_jobs("fig16", {"theta", "target", "decoder", "success"}, jobs, opt);
}

Table fig17(const codes::BinaryLinearCode &code, double theta,
            const std::vector<double> &theta_primes, std::size_t r, std::size_t h,
            const RunOptions &opt) {
    // Horizontal reference lines first, then one job per decoder angle.
    const double enu3 = nontree::nontree_bit_success(code, theta, r, 3, nontree::ClonerSpec::enu());
    const double enu2 = nontree::nontree_bit_success(code, theta, r, 2, nontree::ClonerSpec::enu());
    const double classical =
        oracles::classical_map_success(code, uniform(code, theta), oracles::Target::bit_at(r));
    std::vector<Job> jobs;
    for (double tp : theta_primes) {
        jobs.emplace_back([&code, theta, tp, r, h] {
            return Row{format_number(tp), "optimal_cloner",
                       format_number(nontree::nontree_bit_success(
                           code, theta, r, h, nontree::ClonerSpec::optimal(tp)))};
        });
    }
    auto table = run_jobs("fig17", {"theta_prime", "decoder", "success"}, jobs, opt);
    std::vector<Row> rows;
    for (std::size_t i = 0; i < theta_primes.size(); ++i) {
        const auto tp = format_number(theta_primes[i]);
        rows.push_back(std::move(table.rows[i]));
        rows.push_back({tp, "enu_h3", format_number(enu3)});
        rows.push_back({tp, "enu_h2", format_number(enu2)});
        rows.push_back({tp, "classical", format_number(classical)});
    }
    table.rows = std::move(rows);
    return table;
}

Table fig19(const codes::BinaryLinearCode &code, const std::vector<double> &thetas,
            const RunOptions &opt) {
    std::vector<Job> jobs;
    const auto strategies = nontree::code8_strategies();
    for (double t : thetas) {
        const std::string ts = format_number(t);
        for (const auto &s : strategies) {
            jobs.emplace_back([&code, t, ts, s] {
                return Row{ts, s.name,
                           format_number(nontree::subtree_bit_success(code, s, t, 0))};
            });
        }
        for (std::size_t h : {1, 2}) {
            jobs.emplace_back([&code, t, ts, h] {
                return Row{ts, "h" + std::to_string(h),
                           format_number(nontree::nontree_bit_success(
                               code, t, 0, h, nontree::ClonerSpec::enu()))};
            });
        }
    }
    return run_jobs("fig19", {"theta", "decoder", "success"}, jobs, opt);
}

Table custom(const codes::BinaryLinearCode &code, const std::vector<double> &thetas,
             const std::vector<std::size_t> &bit_targets, bool block, const RunOptions &opt) {
    std::vector<Job> jobs;
    for (double t : thetas) {
        const std::string ts = format_number(t);
        for (auto r : bit_targets) {
            jobs.emplace_back([&code, t, ts, r] {
                return Row{ts, target_name(r), "bpqm",
                           format_number(qsim::bpqm_bit_success(code, uniform(code, t), r))};
            });
            jobs.emplace_back([&code, t, ts, r] {
                return Row{ts, target_name(r), "quantum_optimal",
                           format_number(
                               oracles::helstrom_bit_success(code, uniform(code, t), r))};
            });
            jobs.emplace_back([&code, t, ts, r] {
                return Row{ts, target_name(r), "classical_bitmap",
                           format_number(oracles::classical_map_success(
                               code, uniform(code, t), oracles::Target::bit_at(r)))};
            });
        }
        if (!block) {
            continue;
        }
        jobs.emplace_back([&code, t, ts] {
            return Row{ts, "block", "bpqm",
                       format_number(qsim::bpqm_block_success_average(code, uniform(code, t)))};
        });
        jobs.emplace_back([&code, t, ts] {
            return Row{ts, "block", "quantum_optimal",
                       format_number(oracles::pgm_block_success(code, uniform(code, t)))};
        });
        jobs.emplace_back([&code, t, ts] {
            return Row{ts, "block", "classical_blockmap",
                       format_number(oracles::classical_map_success(
                           code, uniform(code, t), oracles::Target::block()))};
        });
    }
    return run_jobs("custom", {"theta", "target", "decoder", "success"}, jobs, opt);
}

} // namespace bpqm::experiments
