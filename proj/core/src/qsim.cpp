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
#include "bpqm/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace bpqm::qsim {

namespace {

inline std::uint64_t insert_zero(std::uint64_t x, std::size_t pos) {
    const std::uint64_t low = x & ((std::uint64_t{1} << pos) - 1);
    return ((x >> pos) << (pos + 1)) | low;
}

void check_qubit(const PureState &st, std::size_t q) {
    if (q >= st.num_qubits()) {
        throw InvalidInput("qubit index out of range");
    }
}

/// Applies a real 4x4 block to every (q1, q2) pair; `pick(i)` returns the
/// block for the subspace whose base index (both qubits 0) is i.
template <class Pick>
void apply_pairs(PureState &st, std::size_t q1, std::size_t q2, Pick &&pick) {
    check_qubit(st, q1);
    check_qubit(st, q2);
    if (q1 == q2) {
        throw InvalidInput("two-qubit gate on a single wire");
    }
    const std::uint64_t m1 = std::uint64_t{1} << q1;
    const std::uint64_t m2 = std::uint64_t{1} << q2;
    const std::size_t lo = std::min(q1, q2);
    const std::size_t hi = std::max(q1, q2);
    auto &a = st.amplitudes();
    const std::uint64_t quarter = a.size() >> 2U;
    for (std::uint64_t t = 0; t < quarter; ++t) {
        const std::uint64_t i = insert_zero(insert_zero(t, lo), hi);
        const Eigen::Matrix4d &u = pick(i);
        const Complex v0 = a[i];
        const Complex v1 = a[i | m2];
        const Complex v2 = a[i | m1];
        const Complex v3 = a[i | m1 | m2];
        a[i] = u(0, 0) * v0 + u(0, 1) * v1 + u(0, 2) * v2 + u(0, 3) * v3;
        a[i | m2] = u(1, 0) * v0 + u(1, 1) * v1 + u(1, 2) * v2 + u(1, 3) * v3;
        a[i | m1] = u(2, 0) * v0 + u(2, 1) * v1 + u(2, 2) * v2 + u(2, 3) * v3;
        a[i | m1 | m2] = u(3, 0) * v0 + u(3, 1) * v1 + u(3, 2) * v2 + u(3, 3) * v3;
    }
}

void apply_cnot(PureState &st, const Cnot &g) {
    check_qubit(st, g.control);
    check_qubit(st, g.target);
    if (g.control == g.target) {
        throw InvalidInput("CNOT control and target coincide");
    }
    const std::uint64_t mc = std::uint64_t{1} << g.control;
    const std::uint64_t mt = std::uint64_t{1} << g.target;
    const std::size_t lo = std::min(g.control, g.target);
    const std::size_t hi = std::max(g.control, g.target);
    auto &a = st.amplitudes();
    const std::uint64_t quarter = a.size() >> 2U;
    for (std::uint64_t t = 0; t < quarter; ++t) {
        const std::uint64_t i = insert_zero(insert_zero(t, lo), hi) | mc;
        std::swap(a[i], a[i | mt]);
    }
}

/// Control pattern of a basis index assembled from per-byte lookup tables.
class PatternLookup {
  public:
    PatternLookup(const std::vector<std::size_t> &controls, std::size_t num_qubits)
        : tables_((num_qubits + 7) / 8, std::vector<std::uint32_t>(256, 0)) {
        const std::size_t m = controls.size();
        for (std::size_t t = 0; t < m; ++t) {
            const std::size_t q = controls[t];
            const std::uint32_t bit = std::uint32_t{1} << (m - 1 - t);
            auto &tab = tables_[q / 8];
            for (std::size_t v = 0; v < 256; ++v) {
                if ((v >> (q % 8)) & 1U) {
                    tab[v] |= bit;
                }
            }
        }
    }

    [[nodiscard]] std::uint32_t operator()(std::uint64_t i) const {
        std::uint32_t p = 0;
        for (const auto &tab : tables_) {
            p |= tab[i & 0xFFU];
            i >>= 8U;
        }
        return p;
    }

  private:
    std::vector<std::vector<std::uint32_t>> tables_;
};

void apply_hadamard(PureState &st, const Hadamard &g) {
    check_qubit(st, g.qubit);
    const std::uint64_t m = std::uint64_t{1} << g.qubit;
    const double s = std::sqrt(0.5);
    auto &a = st.amplitudes();
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        if ((i & m) == 0) {
            const Complex x = a[i];
            const Complex y = a[i | m];
            a[i] = s * (x + y);
            a[i | m] = s * (x - y);
        }
    }
}

void apply_ucu(PureState &st, const UcuStar &g, bool inverse) {
    const std::size_t patterns = std::size_t{1} << g.controls.size();
    if (g.table.size() != patterns) {
        throw InvalidInput("uniformly controlled gate table does not cover all patterns");
    }
    for (auto c : g.controls) {
        check_qubit(st, c);
    }
    std::vector<Eigen::Matrix4d> us(patterns);
    for (std::size_t p = 0; p < patterns; ++p) {
        us[p] = u_ostar(g.table[p].first, g.table[p].second);
        if (inverse) {
            us[p].transposeInPlace();
        }
    }
    const PatternLookup pattern(g.controls, st.num_qubits());
    apply_pairs(st, g.data1, g.data2,
                [&](std::uint64_t i) -> const Eigen::Matrix4d & { return us[pattern(i)]; });
}

void apply_gate(PureState &st, const Gate &gate, bool inverse) {
    std::visit(
        [&](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Cnot>) {
                apply_cnot(st, g);
            } else if constexpr (std::is_same_v<T, Hadamard>) {
                apply_hadamard(st, g);
            } else if constexpr (std::is_same_v<T, UcuStar>) {
                apply_ucu(st, g, inverse);
            } else {
                if (inverse) {
                    apply_two_qubit(st, g.first, g.second, g.matrix.transpose());
                } else {
                    apply_two_qubit(st, g.first, g.second, g.matrix);
                }
            }
        },
        gate);
}


} // namespace

PureState::PureState(std::size_t num_qubits) : num_qubits_{num_qubits} {
    if (num_qubits > kMaxQubits) {
        throw GuardError("state of " + std::to_string(num_qubits) +
                         " qubits exceeds the limit of " + std::to_string(kMaxQubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

PureState::PureState(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_{num_qubits}, amps_{std::move(amplitudes)} {
    if (num_qubits > kMaxQubits) {
        throw GuardError("state exceeds the qubit limit");
    }
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw InvalidInput("amplitude vector length must be 2^num_qubits");
    }
}

double PureState::norm_squared() const {
    return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                           [](double s, const Complex &c) { return s + std::norm(c); });
}

std::array<double, 2> channel_qubit(int x, double theta) {
    return {std::cos(theta / 2), ((x & 1) ? -1.0 : 1.0) * std::sin(theta / 2)};
}

PureState channel_state(const Bits &x, std::span<const double> theta,
                        std::size_t num_qubits) {
    if (x.size() != theta.size()) {
        throw InvalidInput("channel_state: x and theta lengths differ");
    }
    const std::size_t n = x.size();
    num_qubits = std::max(num_qubits, n);
    PureState st(num_qubits);
    auto &a = st.amplitudes();
    // Build the product on the first n qubits; the rest stay |0>.
    std::fill(a.begin(), a.end(), Complex{0.0, 0.0});
    a[0] = 1.0;
    for (std::size_t q = 0; q < n; ++q) {
        const auto c = channel_qubit(x[q], theta[q]);
        const std::uint64_t m = std::uint64_t{1} << q;
        for (std::uint64_t i = 0; i < m; ++i) {
            a[i | m] = a[i] * c[1];
            a[i] *= c[0];
        }
    }
    return st;
}

Complex inner_product(const PureState &a, const PureState &b) {
    if (a.size() != b.size()) {
        throw InvalidInput("inner product of states of different size");
    }
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double inner_product_abs(const PureState &a, const PureState &b) {
    return std::abs(inner_product(a, b));
}

Eigen::Matrix4d u_ostar(double alpha, double beta) {
    const double g = mpg::angle_ostar(alpha, beta);
    const double cg = std::abs(std::cos(g / 2));
    const double sg = std::abs(std::sin(g / 2));
    const double cm = std::cos((alpha - beta) / 2);
    const double cp = std::cos((alpha + beta) / 2);
    const double sm = std::sin((alpha - beta) / 2);
    const double sp = std::sin((alpha + beta) / 2);
    const double ap = 0.5 * (cm + cp) / cg;
    const double am = 0.5 * (cm - cp) / cg;
    const double bp = 0.5 * (sp + sm) / sg;
    const double bm = 0.5 * (sp - sm) / sg;
    Eigen::Matrix4d u;
    u << ap, 0, 0, am,  //
        -am, 0, 0, ap,  //
        0, bm, bp, 0,   //
        0, bp, -bm, 0;
    return u;
}

std::size_t Circuit::count_cnot() const {
    return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [](const Gate &g) {
        return std::holds_alternative<Cnot>(g);
    }));
}

std::size_t Circuit::count_ucu() const {
    return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [](const Gate &g) {
        return std::holds_alternative<UcuStar>(g);
    }));
}

void apply(const Circuit &circuit, PureState &state) {
    if (circuit.num_qubits > state.num_qubits()) {
        throw InvalidInput("circuit is wider than the state");
    }
    for (const auto &g : circuit.gates) {
        apply_gate(state, g, false);
    }
}

void apply_inverse(const Circuit &circuit, PureState &state) {
    if (circuit.num_qubits > state.num_qubits()) {
        throw InvalidInput("circuit is wider than the state");
    }
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        apply_gate(state, *it, true);
    }
}

PureState applied(const Circuit &circuit, PureState state) {
    apply(circuit, state);
    return state;
}

void apply_two_qubit(PureState &state, std::size_t first, std::size_t second,
                     const Eigen::Matrix4d &u) {
    apply_pairs(state, first, second,
                [&u](std::uint64_t) -> const Eigen::Matrix4d & { return u; });
}

double x_basis_probability(const PureState &state, std::size_t qubit, int m) {
    check_qubit(state, qubit);
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    const double s = (m & 1) ? -1.0 : 1.0;
    double p = 0.0;
    for (std::uint64_t i = 0; i < state.size(); ++i) {
        if ((i & mask) == 0) {
            p += 0.5 * std::norm(state[i] + s * state[i | mask]);
        }
    }
    return p;
}

void project_x_basis(PureState &state, std::size_t qubit, int m) {
    check_qubit(state, qubit);
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    const double s = (m & 1) ? -1.0 : 1.0;
    for (std::uint64_t i = 0; i < state.size(); ++i) {
        if ((i & mask) == 0) {
            const Complex c = 0.5 * (state[i] + s * state[i | mask]);
            state[i] = c;
            state[i | mask] = s * c;
        }
    }
}

BpqmCircuit build_vr(const mpg::CompiledMpg &compiled,
                     std::span<const std::size_t> leaf_qubit, std::size_t num_qubits) {
    const auto &g = compiled.mpg;
    const std::size_t n = g.num_leaves();
    std::vector<std::size_t> wires(leaf_qubit.begin(), leaf_qubit.end());
    if (wires.empty()) {
        wires.resize(n);
        std::iota(wires.begin(), wires.end(), 0);
    }
    if (wires.size() != n) {
        throw InvalidInput("build_vr: one wire per code bit required");
    }
    num_qubits = std::max(num_qubits, *std::max_element(wires.begin(), wires.end()) + 1);

    BpqmCircuit out;
    out.circuit.num_qubits = num_qubits;
    std::vector<std::size_t> data(g.nodes().size(), 0);
    std::vector<std::size_t> ancilla_of(n + 1, 0); // indexed by check id
    auto ancillas = [&](const std::vector<std::size_t> &ids) {
        std::vector<std::size_t> qs;
        qs.reserve(ids.size());
        for (auto id : ids) {
            qs.push_back(ancilla_of[id]);
        }
        return qs;
    };
    for (std::size_t i = 0; i < g.nodes().size(); ++i) {
        const auto &nd = g.node(i);
        if (nd.kind == mpg::NodeKind::Channel) {
            data[i] = wires[nd.leaf];
            continue;
        }
        const auto f = static_cast<std::size_t>(nd.first);
        const auto s = static_cast<std::size_t>(nd.second);
        data[i] = data[f];
        if (nd.kind == mpg::NodeKind::Check) {
            out.circuit.gates.emplace_back(Cnot{data[f], data[s]});
            ancilla_of[nd.id] = data[s];
            continue;
        }
        const auto &L1 = compiled.lists[f];
        const auto &L2 = compiled.lists[s];
        UcuStar u{data[f], data[s], ancillas(L1.checks), {}};
        const auto more = ancillas(L2.checks);
        u.controls.insert(u.controls.end(), more.begin(), more.end());
        u.table.reserve(L1.branches.size() * L2.branches.size());
        for (const auto &a : L1.branches) {
            for (const auto &b : L2.branches) {
                u.table.emplace_back(a.angle, b.angle);
            }
        }
        out.roles.zeros.push_back(data[s]);
        out.circuit.gates.emplace_back(std::move(u));
    }
    out.roles.data = data[g.root()];
    out.roles.ancillas = ancillas(compiled.root_lists().checks);
    return out;
}

std::vector<Branch> branch_decomposition(const PureState &state, const QubitRoles &roles) {
    std::vector<std::size_t> all{roles.data};
    all.insert(all.end(), roles.ancillas.begin(), roles.ancillas.end());
    all.insert(all.end(), roles.zeros.begin(), roles.zeros.end());
    std::sort(all.begin(), all.end());
    if (all.size() != state.num_qubits() ||
        std::adjacent_find(all.begin(), all.end()) != all.end() ||
        all.back() >= state.num_qubits()) {
        throw InvalidInput("qubit roles must partition the register");
    }
    std::uint64_t zmask = 0;
    for (auto z : roles.zeros) {
        zmask |= std::uint64_t{1} << z;
    }
    const std::size_t patterns = std::size_t{1} << roles.ancillas.size();
    std::vector<Branch> out(patterns);
    for (std::size_t p = 0; p < patterns; ++p) {
        out[p].pattern = p;
    }
    for (std::uint64_t i = 0; i < state.size(); ++i) {
        std::size_t p = 0;
        for (auto a : roles.ancillas) {
            p = (p << 1U) | ((i >> a) & 1U);
        }
        const double w = std::norm(state[i]);
        auto &b = out[p];
        b.weight += w;
        if ((i & zmask) != 0) {
            b.z_leakage += w;
        } else {
            b.data_state[(i >> roles.data) & 1U] += state[i];
        }
    }
    for (auto &b : out) {
        if (b.weight > 0.0) {
            const double s = 1.0 / std::sqrt(b.weight);
            b.data_state[0] *= s;
            b.data_state[1] *= s;
        }
    }
    return out;
}

double bpqm_bit_success_conditional(const codes::BinaryLinearCode &code,
                                    std::span<const double> theta, const Bits &x,
                                    std::size_t r) {
    const auto v = build_vr(mpg::compile_lists(mpg::build_mpg(code, r), theta));
    auto st = channel_state(x, theta);
    apply(v.circuit, st);
    return x_basis_probability(st, v.roles.data, x[r]);
}

double bpqm_bit_success(const codes::BinaryLinearCode &code, std::span<const double> theta,
                        std::size_t r) {
    const auto v = build_vr(mpg::compile_lists(mpg::build_mpg(code, r), theta));
    const auto words = codes::codewords(code);
    double total = 0.0;
    for (const auto &x : words) {
        auto st = channel_state(x, theta);
        apply(v.circuit, st);
        total += x_basis_probability(st, v.roles.data, x[r]);
    }
    return total / static_cast<double>(words.size());
}

void check_information_set(const codes::BinaryLinearCode &code,
                           std::span<const std::size_t> order) {
    if (order.size() != code.k()) {
        throw InvalidInput("decode order must list exactly k bit positions");
    }
    std::vector<std::size_t> cols(order.begin(), order.end());
    for (auto c : cols) {
        if (c >= code.n()) {
            throw InvalidInput("decode order position out of range");
        }
    }
    if (rank(code.G().select_columns(cols)) != code.k()) {
        throw InvalidInput("decode order is not an information set of the code");
    }
}

namespace {

std::vector<BpqmCircuit> block_circuits(const codes::BinaryLinearCode &code,
                                        std::span<const double> theta,
                                        std::vector<std::size_t> &order) {
    if (order.empty()) {
        order = code.info_set();
    }
    check_information_set(code, order);
    std::vector<BpqmCircuit> vs;
    vs.reserve(order.size());
    for (auto r : order) {
        vs.push_back(build_vr(mpg::compile_lists(mpg::build_mpg(code, r), theta)));
    }
    return vs;
}

double chained_success(const std::vector<BpqmCircuit> &vs,
                       const std::vector<std::size_t> &order, const Bits &x,
                       std::span<const double> theta) {
    auto st = channel_state(x, theta);
    for (std::size_t j = 0; j < vs.size(); ++j) {
        apply(vs[j].circuit, st);
        project_x_basis(st, vs[j].roles.data, x[order[j]]);
        apply_inverse(vs[j].circuit, st);
    }
    return st.norm_squared();
}

} // namespace

double bpqm_block_success(const codes::BinaryLinearCode &code,
                          std::span<const double> theta, const Bits &x,
                          std::span<const std::size_t> order) {
    if (!code.contains(x)) {
        throw InvalidInput("block decoding input is not a codeword");
    }
    std::vector<std::size_t> ord(order.begin(), order.end());
    const auto vs = block_circuits(code, theta, ord);
    return chained_success(vs, ord, x, theta);
}

double bpqm_block_success_average(const codes::BinaryLinearCode &code,
                                  std::span<const double> theta,
                                  std::span<const std::size_t> order) {
    std::vector<std::size_t> ord(order.begin(), order.end());
    const auto vs = block_circuits(code, theta, ord);
    const auto words = codes::codewords(code);
    double total = 0.0;
    for (const auto &x : words) {
        total += chained_success(vs, ord, x, theta);
    }
    return total / static_cast<double>(words.size());
}

double sampled_bit_success(const codes::BinaryLinearCode &code,
                           std::span<const double> theta, std::size_t r,
                           std::size_t shots, std::uint64_t seed) {
    const auto v = build_vr(mpg::compile_lists(mpg::build_mpg(code, r), theta));
    const auto words = codes::codewords(code);
    std::vector<double> p_correct(words.size(), -1.0);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < shots; ++s) {
        const auto w = pick(rng);
        if (p_correct[w] < 0.0) {
            auto st = channel_state(words[w], theta);
            apply(v.circuit, st);
            p_correct[w] = x_basis_probability(st, v.roles.data, words[w][r]);
        }
        hits += u01(rng) < p_correct[w] ? 1 : 0;
    }
    return shots == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(shots);
}

} // namespace bpqm::qsim
