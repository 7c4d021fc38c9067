// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file kink_solver.hpp
 * @brief Kink (single domain wall) ground state of the open XXZ chain with
 *        boundary fields, obtained as the fixed point of
 *
 *            E    = 2ε e({m,m+1})
 *            e(X) = [ -2ε Σ_{j ∈ ∂(XΔM)} e(X Δ {j,j+1}) + E e(X) ] / (λ(X) - 2)
 *
 *        over the truncated configuration space, with e(∅) = 1 fixed.
 *        The ground-state energy is 2 + E.
 */

#pragma once

#include <xxz/config_space.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace xxz {

class SectorBasis;

enum class NormKind {
    plain,     ///< |E| + Σ (λ-2)|e(X)|
    weighted,  ///< |E|(K|ε|)^-2 + Σ (λ-2)|e(X)|(K|ε|)^-w(X)
};

struct KinkParams {
    int n_sites = 12;
    int down = 6;
    double epsilon = 0.0;
    BoundaryFields fields{};
    int w_max = 8;
    double tol = 1e-13;
    int max_iter = 1000;
    double weight_k = 10.0;  ///< K of the weighted norm

    /// Throws std::invalid_argument on any violated precondition,
    /// including K|ε| >= 1.
    void validate() const;

    [[nodiscard]] ChainGeometry geometry() const { return {n_sites, Topology::open}; }
};

/// Unknowns (E, {e(X)}). values[i-1] holds e(X) for space entry i >= 1;
/// e(∅) = 1 is implicit and never stored.
struct KinkCoefficients {
    double shift = 0.0;
    std::vector<double> values;
};

/// Parameters plus the enumerated space; everything the map F needs.
class KinkSystem {
public:
    explicit KinkSystem(const KinkParams& params);

    [[nodiscard]] const KinkParams& params() const noexcept { return params_; }
    [[nodiscard]] const ConfigSpace& space() const noexcept { return space_; }
    [[nodiscard]] std::size_t unknowns() const noexcept { return space_.size() - 1; }

    [[nodiscard]] KinkCoefficients zero() const;

    /// e(X) including the gauge: 1 for ∅, 0 outside the truncated space.
    [[nodiscard]] double value(const KinkCoefficients& e, SiteSet x) const;

    /// Space index of {m, m+1}, the single one-hop neighbour of ∅.
    [[nodiscard]] std::int32_t first_order_entry() const noexcept { return first_order_entry_; }

private:
    KinkParams params_;
    ConfigSpace space_;
    std::int32_t first_order_entry_;
};

/// One application of F (OpenMP kernel).
[[nodiscard]] KinkCoefficients apply_F_kink(const KinkCoefficients& e, const KinkSystem& sys);

[[nodiscard]] double kink_norm(const KinkCoefficients& e, const KinkSystem& sys,
                               NormKind kind = NormKind::plain);

/// Norm of a - b.
[[nodiscard]] double kink_distance(const KinkCoefficients& a, const KinkCoefficients& b,
                                   const KinkSystem& sys, NormKind kind = NormKind::plain);

struct KinkSolution {
    KinkCoefficients coefficients;
    int iterations = 0;
    double residual = 0.0;  ///< plain-norm size of the last update

    [[nodiscard]] double energy() const noexcept { return 2.0 + coefficients.shift; }
};

/// Iterates e <- F(e) from e = 0 until the update is below tol.
/// Throws NonConvergence when max_iter is exhausted.
[[nodiscard]] KinkSolution solve_kink(const KinkSystem& sys);

/// ‖F(a) - F(b)‖ / ‖a - b‖, or nullopt for a == b.
[[nodiscard]] std::optional<double> kink_lipschitz_ratio(const KinkSystem& sys,
                                                         const KinkCoefficients& a,
                                                         const KinkCoefficients& b);

/// Largest Lipschitz ratio over `samples` seeded random pairs drawn from the
/// plain-norm ball of radius delta. Analytic bound: 3|ε| + delta/4.
[[nodiscard]] double certify_contraction_kink(const KinkSystem& sys, double delta, int samples,
                                              std::uint64_t seed);

/// Ψ = Σ_X e(X) |X Δ M⟩ as amplitudes over an open-chain sector basis.
[[nodiscard]] std::vector<std::complex<double>> assemble_kink_state(const KinkCoefficients& e,
                                                                    const KinkSystem& sys,
                                                                    const SectorBasis& basis);

} // namespace xxz
