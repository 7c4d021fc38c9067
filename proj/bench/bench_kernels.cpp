// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels against their OpenMP versions.
//   ./bench_kernels --benchmark_filter=droplet
// Thread count follows OMP_NUM_THREADS.

#include <xxz/droplet_solver.hpp>
#include <xxz/kernels.hpp>
#include <xxz/kink_solver.hpp>
#include <xxz/oracle.hpp>

#include <benchmark/benchmark.h>
#include <omp.h>

#include <cmath>
#include <complex>
#include <vector>

namespace {

using namespace xxz;

KinkParams kink_params(int w_max) {
    KinkParams p;
    p.n_sites = 24;
    p.down = 12;
    p.epsilon = 0.05;
    p.w_max = w_max;
    return p;
}

DropletParams droplet_params(int w_max) {
    DropletParams p;
    p.n_sites = 24;
    p.down = 6;
    p.epsilon = 0.05;
    p.w_max = w_max;
    return p;
}

template <bool Parallel>
void BM_kink_map(benchmark::State& state) {
    const KinkSystem sys(kink_params(static_cast<int>(state.range(0))));
    KinkCoefficients in = sys.zero();
    for (std::size_t i = 0; i < in.values.size(); ++i) {
        in.values[i] = 1e-3 * std::sin(static_cast<double>(i));
    }
    KinkCoefficients out = sys.zero();
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::apply_f_kink_parallel(sys, in, out);
        } else {
            kernels::apply_f_kink_serial(sys, in, out);
        }
        benchmark::DoNotOptimize(out.values.data());
    }
    state.counters["configs"] = static_cast<double>(sys.space().size());
    state.counters["threads"] = Parallel ? omp_get_max_threads() : 1;
}

template <bool Parallel>
void BM_droplet_map(benchmark::State& state) {
    const DropletSystem sys(droplet_params(static_cast<int>(state.range(0))));
    DropletCoefficients in = solve_droplet(sys).coefficients;
    DropletCoefficients out = sys.zero();
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::apply_f_droplet_parallel(sys, in, out);
        } else {
            kernels::apply_f_droplet_serial(sys, in, out);
        }
        benchmark::DoNotOptimize(out.values.data());
    }
    state.counters["configs"] = static_cast<double>(sys.space().size());
    state.counters["threads"] = Parallel ? omp_get_max_threads() : 1;
}

template <bool Parallel>
void BM_hamiltonian(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SectorBasis basis(n, n / 2);
    const ChainGeometry g{n, Topology::periodic};
    std::vector<std::complex<double>> x(basis.size(), {1.0, 0.5});
    std::vector<std::complex<double>> y(basis.size());
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::apply_hamiltonian_parallel(basis, g, 0.05, {}, x, y);
        } else {
            kernels::apply_hamiltonian_serial(basis, g, 0.05, {}, x, y);
        }
        benchmark::DoNotOptimize(y.data());
    }
    state.counters["dim"] = static_cast<double>(basis.size());
}

} // namespace

BENCHMARK(BM_kink_map<false>)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_kink_map<true>)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_droplet_map<false>)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_droplet_map<true>)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_hamiltonian<false>)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hamiltonian<true>)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
