// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file droplet_solver.hpp
 * @brief Lowest band of the periodic XXZ chain in the m-down-spin sector.
 *
 * The band states are Ψ_k = Σ_l e^{ikl} Σ_X e(X) |(X Δ M) + l⟩ with
 * dispersion E(k) = E₀ + Σ_{n=1}^{N} e_n e^{ikn}, E₀ = 4. The unknowns
 * {e_n} and {e(X) : n(X) > 2} solve the fixed-point equations
 *
 *   e_n  = 2ε Σ_{j ∈ ∂(M-n)} e(M Δ (M-n) Δ {j,j+1})
 *   e(X) = -ε/(n(X)-2) Σ_{j ∈ ∂(XΔM)} e(X Δ {j,j+1})
 *          + 1/(2(n(X)-2)) Σ_s e_s e((X+s) Δ (M+s) Δ M)
 *
 * under the gauge e(∅) = 1, e(M Δ (M+n)) = 0 for n ≠ 0.
 */

#pragma once

#include <xxz/config_space.hpp>
#include <xxz/kink_solver.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace xxz {

class SectorBasis;

/// ε = 0 energy of |M⟩ on the ring: two domain walls at 2 each.
inline constexpr double kDropletBaseline = 4.0;

struct DropletParams {
    int n_sites = 10;
    int down = 3;
    double epsilon = 0.0;
    int w_max = 7;
    double tol = 1e-13;
    int max_iter = 1000;
    double weight_k = 10.0;

    /// Throws std::invalid_argument on any violated precondition,
    /// including K|ε| >= 1.
    void validate() const;

    [[nodiscard]] ChainGeometry geometry() const { return {n_sites, Topology::periodic}; }
};

/// fourier[n-1] = e_n for n = 1..N; values[slot] = e(X) for the stored
/// (n(X) > 2) entries, see DropletSystem::entry_of_slot.
struct DropletCoefficients {
    std::vector<double> fourier;
    std::vector<double> values;
};

class DropletSystem {
public:
    static constexpr std::int32_t kNone = -1;

    explicit DropletSystem(const DropletParams& params);

    [[nodiscard]] const DropletParams& params() const noexcept { return params_; }
    [[nodiscard]] const ConfigSpace& space() const noexcept { return space_; }
    [[nodiscard]] int n_sites() const noexcept { return params_.n_sites; }

    [[nodiscard]] std::size_t stored() const noexcept { return entry_of_slot_.size(); }
    [[nodiscard]] std::int32_t slot_of_entry(std::size_t entry) const { return slot_of_entry_[entry]; }
    [[nodiscard]] std::int32_t entry_of_slot(std::size_t slot) const { return entry_of_slot_[slot]; }

    /// Gauge value of a space entry with n(X) = 2: 1 for ∅, else 0.
    [[nodiscard]] static double gauge_value(std::size_t entry) noexcept { return entry == 0 ? 1.0 : 0.0; }

    /// Space index of M Δ (M-n), whose equation determines e_n; kNone if
    /// that set lies beyond the truncation (then e_n ≡ 0).
    [[nodiscard]] std::int32_t fourier_source(int n) const { return fourier_source_[n - 1]; }

    /// w_n = w(M Δ (M+n)), or kNone when not enumerated.
    [[nodiscard]] int fourier_order(int n) const { return fourier_order_[n - 1]; }

    /// Slot of (X+s) Δ (M+s) Δ M for the stored X in `slot`, s = 1..N;
    /// kNone when outside the truncated space.
    [[nodiscard]] std::int32_t shifted_slot(std::size_t slot, int s) const {
        return shifted_slot_[slot * static_cast<std::size_t>(params_.n_sites) +
                             static_cast<std::size_t>(s - 1)];
    }

    [[nodiscard]] DropletCoefficients zero() const;

    /// e(X) with the gauge applied; 0 outside the truncated space.
    [[nodiscard]] double value(const DropletCoefficients& e, SiteSet x) const;

private:
    DropletParams params_;
    ConfigSpace space_;
    std::vector<std::int32_t> slot_of_entry_;
    std::vector<std::int32_t> entry_of_slot_;
    std::vector<std::int32_t> fourier_source_;
    std::vector<int> fourier_order_;
    std::vector<std::int32_t> shifted_slot_;
};

/// (X+s) Δ (M+s) Δ M: the modification Y with (X Δ M) + s = Y Δ M.
[[nodiscard]] SiteSet shift_modification(SiteSet x, int s, SiteSet reference,
                                         const ChainGeometry& g);

/// One application of F (OpenMP kernel).
[[nodiscard]] DropletCoefficients apply_F_droplet(const DropletCoefficients& e,
                                                  const DropletSystem& sys);

/// Plain:    Σ|e_n| + 2 Σ |e(X)| (n(X)-2)
/// Weighted: Σ|e_n| (K|ε|)^-w_n + 2 Σ |e(X)| (n(X)-2) (K|ε|)^-w(X)
[[nodiscard]] double droplet_norm(const DropletCoefficients& e, const DropletSystem& sys,
                                  NormKind kind = NormKind::plain);

[[nodiscard]] double droplet_distance(const DropletCoefficients& a, const DropletCoefficients& b,
                                      const DropletSystem& sys, NormKind kind = NormKind::plain);

struct DropletSolution {
    DropletCoefficients coefficients;
    int iterations = 0;
    double residual = 0.0;
};

/// Fixed-point iteration from e = 0. Throws NonConvergence.
[[nodiscard]] DropletSolution solve_droplet(const DropletSystem& sys);

[[nodiscard]] std::optional<double> droplet_lipschitz_ratio(const DropletSystem& sys,
                                                            const DropletCoefficients& a,
                                                            const DropletCoefficients& b);

/// Largest Lipschitz ratio over seeded random pairs in the delta-ball.
/// Analytic bound: 4|ε| + delta.
[[nodiscard]] double certify_contraction_droplet(const DropletSystem& sys, double delta,
                                                 int samples, std::uint64_t seed);

struct DispersionSample {
    int k_index = 0;
    double k = 0.0;
    double energy = 0.0;
    double imag = 0.0;
};

struct DispersionResult {
    double baseline = kDropletBaseline;
    std::vector<double> fourier;
    std::vector<DispersionSample> samples;
    double bandwidth = 0.0;
};

inline constexpr double kImaginaryFloor = 1e-10;

/// E(k) for any real k.
[[nodiscard]] std::complex<double> evaluate_dispersion(const DropletCoefficients& e, double k);

/// E(k) on k = 2πj/N. Throws ComplexLeak if some |Im E(k)| > kImaginaryFloor.
[[nodiscard]] DispersionResult dispersion(const DropletCoefficients& e, const DropletSystem& sys);

/// Ψ_k as amplitudes over `basis` (unnormalised). The basis must describe
/// the same N and m.
[[nodiscard]] std::vector<std::complex<double>> assemble_eigenvector(const DropletCoefficients& e,
                                                                     const DropletSystem& sys,
                                                                     int k_index,
                                                                     const SectorBasis& basis);

} // namespace xxz
