// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verification.hpp
 * @brief Checks of the expansions against exact diagonalisation.
 */

#pragma once

#include <xxz/droplet_solver.hpp>
#include <xxz/kink_solver.hpp>
#include <xxz/oracle.hpp>

#include <span>
#include <string>
#include <vector>

namespace xxz {

/// The fixed-point equations carry the hopping term as +2ε while the spin
/// Hamiltonian hops with -2ε, so an expansion at ε describes the oracle
/// Hamiltonian at -ε. On bipartite chains the two are unitarily equivalent.
[[nodiscard]] constexpr double oracle_coupling(double epsilon) noexcept { return -epsilon; }

/// max(10 (K|ε|)^(w_max+1), 1e-12): the truncation-error model.
[[nodiscard]] double comparison_tolerance(double epsilon, double weight_k, int w_max);

/// ‖H ψ - E ψ‖ / ‖ψ‖ for the literal Hamiltonian of `g` at `coupling`.
[[nodiscard]] double relative_residual(const SectorBasis& basis, const ChainGeometry& g,
                                       double coupling, BoundaryFields fields,
                                       std::span<const std::complex<double>> psi, double energy);

/// ‖T ψ - e^{-ik} ψ‖ / ‖ψ‖ with T the translation by one site to the right.
[[nodiscard]] double momentum_defect(const SectorBasis& basis,
                                     std::span<const std::complex<double>> psi, int k_index);

struct KinkCheck {
    KinkSolution solution;
    double oracle_energy = 0.0;
    double abs_diff = 0.0;
    double residual = 0.0;  ///< eigenvector residual of the assembled state
};

[[nodiscard]] KinkCheck check_kink(const KinkSystem& sys, std::size_t cap = kDefaultSectorCap);

enum class RowStatus { pass, warn, fail };

[[nodiscard]] std::string to_string(RowStatus s);

struct ComparisonRow {
    int k_index = 0;
    double k = 0.0;
    double expansion = 0.0;
    double oracle_lowest = 0.0;
    double oracle_second = 0.0;
    double abs_diff = 0.0;  ///< |expansion - oracle_lowest|
    int rank = 0;           ///< 1-based position of the nearest block eigenvalue
    RowStatus status = RowStatus::pass;
};

struct ComparisonReport {
    DropletParams params;
    int iterations = 0;
    double residual = 0.0;
    double tolerance = 0.0;
    std::vector<ComparisonRow> rows;
    double max_abs_diff = 0.0;
    double bandwidth_expansion = 0.0;
    double bandwidth_oracle = 0.0;

    [[nodiscard]] bool passed() const noexcept;
};

/// Solves, evaluates E(k) and compares every k with its oracle block.
/// Rows fail when abs_diff > tolerance or, for k ≠ 0, rank ≠ 1; a k = 0
/// rank of 2 is a warning.
[[nodiscard]] ComparisonReport compare_droplet_band(const DropletParams& params,
                                                    std::size_t cap = kDefaultSectorCap);

enum class BandSource { expansion, oracle };

struct ScalingFit {
    std::vector<double> epsilons;
    std::vector<double> bandwidths;
    double slope = 0.0;
    double intercept = 0.0;
};

/// Least-squares slope of log(bandwidth) against log|ε|.
/// Throws std::invalid_argument for fewer than 3 values, DegenerateFit when
/// a bandwidth is at the numerical floor.
[[nodiscard]] ScalingFit bandwidth_scaling(const DropletParams& base,
                                           std::span<const double> epsilons, BandSource source,
                                           std::size_t cap = kDefaultSectorCap);

struct ResidualRow {
    int k_index = 0;
    double energy = 0.0;
    double residual = 0.0;
    double momentum_defect = 0.0;
};

struct ResidualSweep {
    std::vector<ResidualRow> rows;
    double max_residual = 0.0;
    double max_momentum_defect = 0.0;
};

/// Assembles Ψ_k for each requested k and applies the exact Hamiltonian.
[[nodiscard]] ResidualSweep residual_sweep(const DropletParams& params,
                                           std::span<const int> k_indices,
                                           std::size_t cap = kDefaultSectorCap);

struct FourierStability {
    std::vector<int> sizes;
    std::vector<std::vector<double>> head;         ///< e_1..e_h per size
    std::vector<std::vector<double>> differences;  ///< |Δe_n| between consecutive sizes
    std::vector<double> symmetry_defect;           ///< max_n |e_n - e_{N-n}| per size
    std::vector<int> iterations;

    /// True when |Δe_1| is non-increasing along the size list.
    [[nodiscard]] bool tail_nonincreasing() const;
};

/// Expansion-only study of e_n as N grows; no oracle involved.
[[nodiscard]] FourierStability fourier_stability(const DropletParams& base,
                                                 std::span<const int> sizes, int head = 3);

struct DecayReport {
    double coefficient_constant = 0.0;  ///< max (λ-2 or n-2)|e(X)| (K|ε|)^-w(X)
    double fourier_constant = 0.0;      ///< max |e_n| (K|ε|)^-w_n (droplet only)
    double shift_constant = 0.0;        ///< |E| (K|ε|)^-2 (kink only)
};

[[nodiscard]] DecayReport kink_decay(const KinkCoefficients& e, const KinkSystem& sys);
[[nodiscard]] DecayReport droplet_decay(const DropletCoefficients& e, const DropletSystem& sys);

} // namespace xxz
