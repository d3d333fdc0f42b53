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
 * bpqm-lab: compile message-passing graphs, run single decodes and oracles,
 * and sweep the experiments behind the figures.
 */
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "args.hpp"
#include "bpqm/codes.hpp"
#include "bpqm/experiments.hpp"
#include "bpqm/mpbpqm.hpp"
#include "bpqm/mpg.hpp"
#include "bpqm/nontree.hpp"
#include "bpqm/oracles.hpp"
#include "bpqm/qsim.hpp"

namespace {

using namespace bpqm;
using nlohmann::ordered_json;

/// Exit code for guard violations and invalid input.
constexpr int kExitGuard = 1;
/// Exit code for bad flags.
constexpr int kExitUsage = 2;

struct Common {
    std::string code{"builtin:code5"};
    std::string theta{"0.2pi"};
};

struct CompileArgs {
    Common common;
    std::size_t bit{1};
};

struct DecodeArgs {
    Common common;
    std::string mode{"exact"};
    std::string target{"1"};
    std::string codeword{"all"};
    std::string order;
    std::optional<int> register_bits;
    std::size_t h{0};
    std::size_t sample{0};
    std::uint64_t seed{1};
};

struct OracleArgs {
    Common common;
    std::string kind{"quantum"};
    std::string target{"1"};
};

struct ExperimentArgs {
    std::string id;
    std::optional<std::string> code;
    std::optional<std::string> theta;
    std::optional<std::string> theta_prime;
    std::string bits{"4..16"};
    std::string hs{"1,2,3"};
    std::string targets;
    std::size_t bit{1};
    std::size_t h{3};
    std::string out;
    std::size_t threads{0};
    bool quiet{false};
};

std::string label(const mpg::Mpg &g, const mpg::MpgNode &node) {
    switch (node.kind) {
    case mpg::NodeKind::Channel:
        return "theta" + std::to_string(node.leaf + 1);
    case mpg::NodeKind::Check:
        return "check " + std::to_string(node.id);
    case mpg::NodeKind::Equality:
        break;
    }
    return "equality " + std::to_string(node.id) + (&node == &g.nodes().back() ? " (root)" : "");
}

std::string pattern_string(const Bits &s) {
    if (s.empty()) {
        return "-";
    }
    std::string out;
    for (auto b : s) {
        out.push_back(static_cast<char>('0' + b));
    }
    return out;
}

/// 1-based bit index to 0-based, with a range check.
std::size_t bit_index(std::size_t one_based, const codes::BinaryLinearCode &code) {
    if (one_based == 0 || one_based > code.n()) {
        throw InvalidInput("bit " + std::to_string(one_based) + " outside 1.." +
                           std::to_string(code.n()));
    }
    return one_based - 1;
}

std::optional<std::size_t> parse_target(const std::string &text,
                                        const codes::BinaryLinearCode &code) {
    if (text == "block") {
        return std::nullopt;
    }
    const auto v = cli::parse_int_list(text);
    if (v.size() != 1 || v[0] <= 0) {
        throw InvalidInput("target must be a bit index or 'block'");
    }
    return bit_index(static_cast<std::size_t>(v[0]), code);
}

int run_compile(const CompileArgs &a) {
    const auto code = codes::load_code(a.common.code);
    const double theta = cli::parse_theta(a.common.theta);
    const auto g = mpg::build_mpg(code, bit_index(a.bit, code));
    const std::vector<double> th(code.n(), theta);
    const auto compiled = mpg::compile_lists(g, th);

    std::cout << "code " << code.name() << " n=" << code.n() << " k=" << code.k()
              << " target X" << a.bit << " theta " << experiments::format_number(theta)
              << "\n\n";
    std::cout << g.to_string() << '\n';
    std::cout << "node\tcheck list\tbranch list (pattern, angle, probability)\n";
    for (std::size_t i = 0; i < g.nodes().size(); ++i) {
        const auto &lists = compiled.lists[i];
        std::string checks;
        for (auto c : lists.checks) {
            checks += (checks.empty() ? "" : ",") + std::to_string(c);
        }
        std::cout << label(g, g.node(i)) << "\t(" << checks << ")\t";
        for (std::size_t j = 0; j < lists.branches.size(); ++j) {
            const auto &b = lists.branches[j];
            std::cout << (j ? " " : "") << '(' << pattern_string(b.s) << ", "
                      << experiments::format_number(b.angle) << ", "
                      << experiments::format_number(b.prob) << ')';
        }
        std::cout << '\n';
    }
    return 0;
}

double decode_value(const DecodeArgs &a, const codes::BinaryLinearCode &code, double theta,
                    std::optional<std::size_t> target) {
    const std::vector<double> th(code.n(), theta);
    std::optional<Bits> x;
    if (a.codeword != "all") {
        x = cli::parse_bits(a.codeword);
        if (x->size() != code.n() || !code.contains(*x)) {
            throw InvalidInput("--codeword is not a codeword of " + code.name());
        }
    }
    std::vector<std::size_t> order;
    if (!a.order.empty()) {
        for (int v : cli::parse_int_list(a.order)) {
            if (v <= 0) {
                throw InvalidInput("--order entries are 1-based bit indices");
            }
            order.push_back(bit_index(static_cast<std::size_t>(v), code));
        }
    }

    if (a.mode == "exact") {
        if (a.sample > 0) {
            if (!target || x) {
                throw InvalidInput("--sample needs a bit target and --codeword all");
            }
            return qsim::sampled_bit_success(code, th, *target, a.sample, a.seed);
        }
        if (!target) {
            return x ? qsim::bpqm_block_success(code, th, *x, order)
                     : qsim::bpqm_block_success_average(code, th, order);
        }
        return x ? qsim::bpqm_bit_success_conditional(code, th, *x, *target)
                 : qsim::bpqm_bit_success(code, th, *target);
    }
    if (a.mode == "mp") {
        if (!target) {
            throw InvalidInput("message-passing mode decodes single bits only");
        }
        if (x) {
            return mp::mp_bit_success(code, th, *x, *target, a.register_bits);
        }
        const auto words = codes::codewords(code);
        double sum = 0.0;
        for (const auto &w : words) {
            sum += mp::mp_bit_success(code, th, w, *target, a.register_bits);
        }
        return sum / static_cast<double>(words.size());
    }
    if (a.mode == "unrolled") {
        if (a.h == 0) {
            throw InvalidInput("unrolled mode needs --depth");
        }
        if (x) {
            throw InvalidInput("unrolled mode averages over all codewords");
        }
        const auto spec = nontree::ClonerSpec::enu();
        return target ? nontree::nontree_bit_success(code, theta, *target, a.h, spec)
                      : nontree::nontree_block_success(code, theta, a.h, spec, order);
    }
    throw InvalidInput("unknown --mode '" + a.mode + "' (exact, mp, unrolled)");
}

ordered_json record(const codes::BinaryLinearCode &code, std::optional<std::size_t> target,
                    double theta, double success) {
    ordered_json j;
    j["code"] = code.name();
    if (target) {
        j["r"] = *target + 1;
    } else {
        j["r"] = "block";
    }
    j["theta"] = theta;
    j["success"] = success;
    return j;
}

int run_decode(const DecodeArgs &a) {
    const auto code = codes::load_code(a.common.code);
    const double theta = cli::parse_theta(a.common.theta);
    const auto target = parse_target(a.target, code);
    auto j = record(code, target, theta, decode_value(a, code, theta, target));
    j["mode"] = a.mode;
    if (a.mode == "mp") {
        j["B"] = a.register_bits ? ordered_json(*a.register_bits) : ordered_json("exact");
    }
    if (a.mode == "unrolled") {
        j["h"] = a.h;
    }
    if (a.sample > 0) {
        j["shots"] = a.sample;
        j["seed"] = a.seed;
    }
    std::cout << j.dump() << '\n';
    return 0;
}

int run_oracle(const OracleArgs &a) {
    const auto code = codes::load_code(a.common.code);
    const double theta = cli::parse_theta(a.common.theta);
    const auto target = parse_target(a.target, code);
    const std::vector<double> th(code.n(), theta);
    double success = 0.0;
    if (a.kind == "quantum") {
        success = target ? oracles::helstrom_bit_success(code, th, *target)
                         : oracles::pgm_block_success(code, th);
    } else if (a.kind == "classical") {
        success = oracles::classical_map_success(
            code, th, target ? oracles::Target::bit_at(*target) : oracles::Target::block());
    } else {
        throw InvalidInput("unknown --kind '" + a.kind + "' (quantum, classical)");
    }
    auto j = record(code, target, theta, success);
    j["oracle"] = a.kind;
    std::cout << j.dump() << '\n';
    return 0;
}

std::vector<std::size_t> bit_list(const std::string &text, const codes::BinaryLinearCode &code,
                                  bool &block) {
    std::vector<std::size_t> out;
    block = false;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "block") {
            block = true;
            continue;
        }
        const auto v = cli::parse_int_list(item);
        if (v.size() != 1 || v[0] <= 0) {
            throw InvalidInput("--targets entries are bit indices or 'block'");
        }
        out.push_back(bit_index(static_cast<std::size_t>(v[0]), code));
    }
    return out;
}

int run_experiment(const ExperimentArgs &a) {
    using namespace experiments;
    RunOptions opt;
    opt.threads = a.threads > 0 ? a.threads : default_threads();
    if (!a.quiet) {
        opt.progress = [](const std::string &msg) { std::cerr << msg << '\n'; };
    }
    const std::string default_code = a.id == "fig12"  ? "builtin:code17"
                                     : a.id == "custom" ? "builtin:code5"
                                                        : "builtin:code8";
    const auto code = codes::load_code(a.code.value_or(default_code));

    // Everything that shapes the table goes into the config hash.
    std::ostringstream config;
    config << a.id << ';' << format_code(code);

    Table table;
    if (a.id == "fig12") {
        const double theta = cli::parse_theta(a.theta.value_or("0.2pi"));
        const auto bits = cli::parse_int_list(a.bits);
        const auto r = bit_index(a.bit, code);
        config << ";theta=" << format_number(theta) << ";B=" << a.bits << ";bit=" << a.bit;
        table = fig12(code, theta, bits, r, opt);
    } else if (a.id == "fig16" || a.id == "custom") {
        const auto thetas = a.theta ? cli::parse_theta_list(*a.theta) : default_theta_grid();
        bool block = false;
        const auto default_targets = a.id == "fig16" ? "1,5,block" : "1,block";
        const auto targets = bit_list(a.targets.empty() ? default_targets : a.targets, code, block);
        for (double t : thetas) {
            config << ";t=" << format_number(t);
        }
        config << ";targets=" << a.targets;
        if (a.id == "fig16") {
            std::vector<std::size_t> hs;
            for (int h : cli::parse_int_list(a.hs)) {
                if (h <= 0) {
                    throw InvalidInput("--depths entries must be positive");
                }
                hs.push_back(static_cast<std::size_t>(h));
            }
            config << ";h=" << a.hs;
            table = fig16(code, thetas, hs, targets, block, opt);
        } else {
            table = custom(code, thetas, targets, block, opt);
        }
    } else if (a.id == "fig17") {
        const double theta = cli::parse_theta(a.theta.value_or("0.2pi"));
        const auto primes =
            a.theta_prime ? cli::parse_theta_list(*a.theta_prime) : default_theta_prime_grid();
        config << ";theta=" << format_number(theta) << ";bit=" << a.bit << ";h=" << a.h;
        for (double t : primes) {
            config << ";tp=" << format_number(t);
        }
        table = fig17(code, theta, primes, bit_index(a.bit, code), a.h, opt);
    } else if (a.id == "fig19") {
        const auto thetas = a.theta ? cli::parse_theta_list(*a.theta) : default_theta_grid();
        for (double t : thetas) {
            config << ";t=" << format_number(t);
        }
        table = fig19(code, thetas, opt);
    } else {
        throw InvalidInput("unknown experiment '" + a.id + "'");
    }

    if (a.out.empty() || a.out == "-") {
        write_csv(std::cout, table, config.str());
        return 0;
    }
    std::ofstream file(a.out, std::ios::binary);
    if (!file) {
        throw InvalidInput("cannot write '" + a.out + "'");
    }
    write_csv(file, table, config.str());
    if (!file.flush()) {
        throw InvalidInput("write failed for '" + a.out + "'");
    }
    return 0;
}

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("--code", c.code, "builtin:<name> or a code file path")
        ->capture_default_str();
    cmd->add_option("--theta", c.theta, "channel angle, e.g. 0.2pi or radians")
        ->capture_default_str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"bpqm-lab: belief propagation with quantum messages on pure-state channels"};
    app.set_version_flag("--version", std::string(BPQM_VERSION));
    app.require_subcommand(1);

    CompileArgs compile_args;
    auto *compile = app.add_subcommand("compile", "print the message-passing graph and node lists");
    add_common(compile, compile_args.common);
    compile->add_option("--bit", compile_args.bit, "target bit, 1-based")->capture_default_str();

    DecodeArgs decode_args;
    auto *decode = app.add_subcommand("decode", "success probability of one decoder");
    add_common(decode, decode_args.common);
    decode->add_option("--mode", decode_args.mode, "exact, mp or unrolled")
        ->check(CLI::IsMember({"exact", "mp", "unrolled"}))
        ->capture_default_str();
    decode->add_option("--target", decode_args.target, "bit index (1-based) or block")
        ->capture_default_str();
    decode->add_option("--codeword", decode_args.codeword, "bit string, or all to average")
        ->capture_default_str();
    decode->add_option("--order", decode_args.order, "block decode order, 1-based list");
    decode->add_option("--B", decode_args.register_bits, "angle register bits (mp mode)")
        ->check(CLI::Range(1, mp::kMaxRegisterBits));
    decode->add_option("--depth", decode_args.h, "unrolling depth (unrolled mode)");
    decode->add_option("--sample", decode_args.sample, "estimate from N measurement shots");
    decode->add_option("--seed", decode_args.seed, "sampling seed")->capture_default_str();

    OracleArgs oracle_args;
    auto *oracle = app.add_subcommand("oracle", "optimal quantum or classical MAP success");
    add_common(oracle, oracle_args.common);
    oracle->add_option("--kind", oracle_args.kind, "quantum or classical")
        ->check(CLI::IsMember({"quantum", "classical"}))
        ->capture_default_str();
    oracle->add_option("--target", oracle_args.target, "bit index (1-based) or block")
        ->capture_default_str();

    ExperimentArgs exp_args;
    auto *experiment = app.add_subcommand("experiment", "sweep one experiment into a CSV table");
    experiment->add_option("id", exp_args.id, "fig12, fig16, fig17, fig19 or custom")
        ->required()
        ->check(CLI::IsMember({"fig12", "fig16", "fig17", "fig19", "custom"}));
    experiment->add_option("--code", exp_args.code, "code source (default depends on id)");
    experiment->add_option("--theta", exp_args.theta,
                           "angle, or list/range a..b:step for grid experiments");
    experiment->add_option("--theta-prime", exp_args.theta_prime, "decoder angle grid (fig17)");
    experiment->add_option("--B", exp_args.bits, "register sizes (fig12)")->capture_default_str();
    experiment->add_option("--depths", exp_args.hs, "unrolling depths (fig16)")->capture_default_str();
    experiment->add_option("--depth", exp_args.h, "unrolling depth (fig17)")->capture_default_str();
    experiment->add_option("--bit", exp_args.bit, "target bit, 1-based (fig12, fig17)")
        ->capture_default_str();
    experiment->add_option("--targets", exp_args.targets, "bits and/or block, e.g. 1,5,block");
    experiment->add_option("--out", exp_args.out, "output CSV (default standard output)");
    experiment->add_option("--threads", exp_args.threads, "worker threads (default BPQM_THREADS)");
    experiment->add_flag("--quiet", exp_args.quiet, "no progress on standard error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*compile) {
            return run_compile(compile_args);
        }
        if (*decode) {
            return run_decode(decode_args);
        }
        if (*oracle) {
            return run_oracle(oracle_args);
        }
        return run_experiment(exp_args);
    } catch (const std::exception &e) {
        std::cerr << "bpqm-lab: " << e.what() << '\n';
        return kExitGuard;
    }
}
