// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance report: one PASS/FAIL line per criterion; exit status 1 if any
// line fails.

#include <xxz/droplet_solver.hpp>
#include <xxz/kink_solver.hpp>
#include <xxz/oracle.hpp>
#include <xxz/verification.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace xxz;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

constexpr std::uint64_t kSeed = 20260101;

KinkParams kink_params(double eps) {
    KinkParams p;
    p.n_sites = 12;
    p.down = 6;
    p.epsilon = eps;
    p.w_max = 8;
    return p;
}

DropletParams droplet_params(double eps) {
    DropletParams p;
    p.n_sites = 10;
    p.down = 3;
    p.epsilon = eps;
    p.w_max = 7;
    return p;
}

Outcome kink_energy() {
    const auto t0 = Clock::now();
    const KinkCheck c = check_kink(KinkSystem(kink_params(0.05)));
    const double elapsed = seconds_since(t0);
    const double e0 = solve_kink(KinkSystem(kink_params(0.0))).energy();
    return {c.abs_diff <= 1e-9 && elapsed < 10.0 && e0 == 2.0,
            fmt("E=%.15f oracle=%.15f diff=%.2e runtime=%.2fs E(eps=0)=%.17g",
                c.solution.energy(), c.oracle_energy, c.abs_diff, elapsed, e0)};
}

Outcome first_order_seed() {
    const double eps = 0.05;
    const KinkSystem sys(kink_params(eps));
    const KinkCoefficients f0 = apply_F_kink(sys.zero(), sys);
    const double seed = f0.values[static_cast<std::size_t>(sys.first_order_entry()) - 1];
    const double norm = kink_norm(f0, sys);
    return {seed == -eps / 2.0 && std::abs(norm - 2.0 * eps) <= 4.0 * 2.0 * eps * 1e-16,
            fmt("e({6,7})=%.17g norm=%.17g", seed, norm)};
}

Outcome droplet_band() {
    const auto t0 = Clock::now();
    const ComparisonReport r = compare_droplet_band(droplet_params(0.05));
    const double elapsed = seconds_since(t0);
    bool ranks = true;
    int rank_k0 = 0;
    for (const ComparisonRow& row : r.rows) {
        if (row.k_index == 0) {
            rank_k0 = row.rank;
        } else {
            ranks = ranks && row.rank == 1;
        }
    }
    const bool within = r.max_abs_diff <= r.tolerance && r.max_abs_diff <= 1e-6;
    return {within && ranks && r.rows.size() == 10 && elapsed < 60.0,
            fmt("max_diff=%.2e tol=%.2e (and 1e-6) ranks(k!=0)=%s rank(k=0)=%d runtime=%.2fs",
                r.max_abs_diff, r.tolerance, ranks ? "1" : "mixed", rank_k0, elapsed)};
}

Outcome bandwidth_scaling_slopes() {
    const std::vector<double> eps{0.02, 0.04, 0.08};
    bool ok = true;
    std::ostringstream detail;
    for (const int m : {2, 3}) {
        DropletParams base = droplet_params(0.0);
        base.down = m;
        const ScalingFit fit = bandwidth_scaling(base, eps, BandSource::oracle);
        ok = ok && std::abs(fit.slope - m) <= 0.3;
        detail << fmt("m=%d slope=%.5f ", m, fit.slope);
    }
    return {ok, detail.str()};
}

Outcome coefficient_decay() {
    const KinkSystem ks(kink_params(0.05));
    const DecayReport kd = kink_decay(solve_kink(ks).coefficients, ks);
    const DropletSystem ds(droplet_params(0.05));
    const DecayReport dd = droplet_decay(solve_droplet(ds).coefficients, ds);
    const double delta = std::max({kd.coefficient_constant, dd.coefficient_constant,
                                   dd.fourier_constant});
    const int w1 = ds.fourier_order(1);
    return {delta < 1.0 && w1 == ds.params().down,
            fmt("delta=%.3g (kink %.3g, droplet %.3g, e_n %.3g) w_1=%d", delta,
                kd.coefficient_constant, dd.coefficient_constant, dd.fourier_constant, w1)};
}

Outcome contraction() {
    const double eps = 0.05;
    const double delta = 0.1;
    const double kink = certify_contraction_kink(KinkSystem(kink_params(eps)), delta, 200, kSeed);
    const double droplet =
        certify_contraction_droplet(DropletSystem(droplet_params(eps)), delta, 200, kSeed);
    const double kink_bound = 3.0 * eps + delta / 4.0;
    const double droplet_bound = 4.0 * eps + delta;
    return {kink <= kink_bound + 1e-10 && droplet <= droplet_bound + 1e-10,
            fmt("kink %.4f <= %.4f, droplet %.4f <= %.4f", kink, kink_bound, droplet,
                droplet_bound)};
}

Outcome eigenvector_residuals() {
    std::vector<int> ks(10);
    for (int j = 0; j < 10; ++j) {
        ks[static_cast<std::size_t>(j)] = j;
    }
    const ResidualSweep s = residual_sweep(droplet_params(0.05), ks);
    return {s.max_residual <= 1e-6 && s.max_momentum_defect <= 1e-13,
            fmt("max_residual=%.2e max_momentum_defect=%.2e", s.max_residual,
                s.max_momentum_defect)};
}

Outcome invariants() {
    const DropletSystem sys(droplet_params(0.05));
    const ChainGeometry g = sys.params().geometry();
    const SiteSet ref = sys.space().reference();
    DropletCoefficients e = sys.zero();
    bool gauge = true;
    double update = 1.0;
    int it = 0;
    while (update >= sys.params().tol && it < sys.params().max_iter) {
        DropletCoefficients next = apply_F_droplet(e, sys);
        update = droplet_distance(next, e, sys);
        e = std::move(next);
        ++it;
        gauge = gauge && sys.value(e, SiteSet{}) == 1.0;
        for (int n = 1; n < sys.n_sites(); ++n) {
            gauge = gauge && sys.value(e, ref ^ translate(ref, n, g)) == 0.0;
        }
    }
    double sym = 0.0;
    for (int n = 1; n < sys.n_sites(); ++n) {
        sym = std::max(sym, std::abs(e.fourier[static_cast<std::size_t>(n) - 1] -
                                     e.fourier[static_cast<std::size_t>(sys.n_sites() - n) - 1]));
    }
    double imag = 0.0;
    for (int j = 0; j < sys.n_sites(); ++j) {
        const double k = 2.0 * std::numbers::pi * j / sys.n_sites();
        imag = std::max(imag, std::abs(evaluate_dispersion(e, k).imag()));
    }
    return {gauge && sym <= 1e-12 && imag < 1e-10,
            fmt("gauge held over %d sweeps: %s, max|e_n-e_{N-n}|=%.2e, max|Im E|=%.2e", it,
                gauge ? "yes" : "no", sym, imag)};
}

Outcome fourier_stabilisation() {
    const std::vector<int> sizes{12, 16, 20};
    const FourierStability st = fourier_stability(droplet_params(0.05), sizes);
    const double d1 = st.differences[0][0];
    const double d2 = st.differences[1][0];
    return {d1 > d2, fmt("|e1(16)-e1(12)|=%.3e > |e1(20)-e1(16)|=%.3e", d1, d2)};
}

Outcome oracle_consistency() {
    const SectorBasis basis(8, 2);
    const std::vector<double> dense = symmetric_spectrum(build_periodic_hamiltonian(basis, 0.1));
    std::vector<double> merged;
    for (const SpectrumBlock& b : build_periodic_blocks(8, 2, 0.1)) {
        merged.insert(merged.end(), b.eigenvalues.begin(), b.eigenvalues.end());
    }
    std::sort(merged.begin(), merged.end());
    if (merged.size() != dense.size()) {
        return {false, fmt("dimension mismatch %zu vs %zu", merged.size(), dense.size())};
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        diff = std::max(diff, std::abs(merged[i] - dense[i]));
    }
    return {diff <= 1e-12, fmt("dim=%zu max_diff=%.2e", dense.size(), diff)};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"kink ground energy", kink_energy},
        {"first-order seed", first_order_seed},
        {"droplet band vs oracle", droplet_band},
        {"bandwidth scaling", bandwidth_scaling_slopes},
        {"coefficient decay", coefficient_decay},
        {"contraction certificates", contraction},
        {"eigenvector residuals", eigenvector_residuals},
        {"gauge and symmetry invariants", invariants},
        {"Fourier stabilisation", fourier_stabilisation},
        {"oracle self-consistency", oracle_consistency},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
