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

#include <vector>

#include <benchmark/benchmark.h>

#include "bpqm/codes.hpp"
#include "bpqm/mpbpqm.hpp"
#include "bpqm/mpg.hpp"
#include "bpqm/oracles.hpp"
#include "bpqm/qsim.hpp"

namespace {

using namespace bpqm;

const codes::BinaryLinearCode &code17() {
    static const auto c = codes::builtin_code("code17");
    return c;
}

std::vector<double> angles(double t) { return std::vector<double>(17, t * kPi); }

void BM_CompileLists(benchmark::State &state) {
    const auto g = mpg::build_mpg(code17(), 0);
    const auto th = angles(0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mpg::compile_lists(g, th));
    }
}
BENCHMARK(BM_CompileLists);

// One pass of V_1 over the full code17 register, uniformly controlled gates included.
void BM_ApplyCircuit(benchmark::State &state) {
    const auto th = angles(0.2);
    const auto v = qsim::build_vr(mpg::compile_lists(mpg::build_mpg(code17(), 0), th));
    const auto start = qsim::channel_state(Bits(17, 0), th, v.circuit.num_qubits);
    for (auto _ : state) {
        auto st = start;
        qsim::apply(v.circuit, st);
        benchmark::DoNotOptimize(st.amplitudes().data());
    }
    state.SetLabel(std::to_string(v.circuit.num_qubits) + " qubits");
}
BENCHMARK(BM_ApplyCircuit)->Unit(benchmark::kMillisecond);

void BM_PgmOracle(benchmark::State &state) {
    const auto th = angles(0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracles::pgm_block_success(code17(), th));
    }
}
BENCHMARK(BM_PgmOracle)->Unit(benchmark::kMillisecond);

void BM_MessagePassing(benchmark::State &state) {
    const auto th = angles(0.2);
    const Bits zero(17, 0);
    const int bits = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mp::mp_bit_success(code17(), th, zero, 0, bits));
    }
}
BENCHMARK(BM_MessagePassing)->Arg(4)->Arg(10)->Arg(14)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
