// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Exact diagonalisation of the XXZ chain in a fixed-magnetisation
 *        sector, used as ground truth for the expansions.
 *
 * Both Hamiltonians are built literally from their spin form:
 *
 *   open:     Σ_{j<N} [1 - σᶻσᶻ - ε(σˣσˣ + σʸσʸ)] + A(1+σᶻ_1) + B(1-σᶻ_N)
 *   periodic: Σ_{j≤N} [1 - σᶻσᶻ - ε(σˣσˣ + σʸσʸ)]
 *
 * so an anti-parallel bond costs 2 on the diagonal and hops with amplitude
 * -2ε. Nothing here depends on the configuration space or on the solvers.
 */

#pragma once

#include <xxz/config_space.hpp>
#include <xxz/site_set.hpp>

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

namespace xxz {

inline constexpr std::size_t kDefaultSectorCap = 200'000;

/// C(n, k), saturating at the largest uint64.
[[nodiscard]] std::uint64_t binomial(int n, int k) noexcept;

/// All C(N, m) placements of m down spins, ascending by bit mask.
class SectorBasis {
public:
    /// Throws SectorTooLarge if C(N, m) > cap, std::invalid_argument on bad N, m.
    SectorBasis(int n_sites, int m, std::size_t cap = kDefaultSectorCap);

    [[nodiscard]] int n_sites() const noexcept { return n_sites_; }
    [[nodiscard]] int down() const noexcept { return down_; }
    [[nodiscard]] std::size_t size() const noexcept { return states_.size(); }
    [[nodiscard]] SiteSet state(std::size_t i) const { return states_[i]; }
    [[nodiscard]] const std::vector<SiteSet>& states() const noexcept { return states_; }

    /// Index of a state; throws std::out_of_range for states outside the sector.
    [[nodiscard]] std::size_t index_of(SiteSet s) const;

private:
    int n_sites_;
    int down_;
    std::vector<SiteSet> states_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Diagonal energy of the spin configuration with down spins on `s`.
[[nodiscard]] double diagonal_energy(SiteSet s, const ChainGeometry& g, BoundaryFields fields);

/// Dense sector matrix of the open-chain Hamiltonian. Requires A, B >= 1.
[[nodiscard]] Eigen::MatrixXd build_open_hamiltonian(const SectorBasis& basis, double epsilon,
                                                     BoundaryFields fields = {});

/// Dense sector matrix of the periodic Hamiltonian, no symmetry reduction.
[[nodiscard]] Eigen::MatrixXd build_periodic_hamiltonian(const SectorBasis& basis, double epsilon);

/// Ascending eigenvalues of a real symmetric matrix.
[[nodiscard]] std::vector<double> symmetric_spectrum(const Eigen::MatrixXd& h);

struct Orbit {
    SiteSet representative;  ///< numerically smallest translate
    int size = 0;            ///< period under one-site translation
};

/// Translation orbits of a sector basis, plus for every state the orbit it
/// belongs to and d with state = representative + d.
struct TranslationOrbits {
    int n_sites = 0;
    int down = 0;
    std::vector<Orbit> orbits;
    std::vector<std::int32_t> orbit_of_state;
    std::vector<int> shift_of_state;
};

[[nodiscard]] TranslationOrbits translation_orbits(const SectorBasis& basis);

/// Orbits compatible with momentum k = 2πj/N, i.e. j·size ≡ 0 (mod N).
[[nodiscard]] std::vector<std::int32_t> admissible_orbits(const TranslationOrbits& orbits,
                                                          int k_index);

/// Hermitian block of the periodic Hamiltonian on the states
/// |r,k⟩ ∝ Σ_l e^{ikl} |r + l⟩, which satisfy T|r,k⟩ = e^{-ik}|r,k⟩.
[[nodiscard]] Eigen::MatrixXcd momentum_block_matrix(const SectorBasis& basis,
                                                     const TranslationOrbits& orbits,
                                                     int k_index, double epsilon);

struct SpectrumBlock {
    int k_index = 0;
    double k = 0.0;
    std::vector<SiteSet> representatives;
    std::vector<int> orbit_sizes;
    std::vector<double> eigenvalues;  ///< ascending
    Eigen::MatrixXcd eigenvectors;    ///< columns; empty unless requested

    [[nodiscard]] std::size_t dim() const noexcept { return eigenvalues.size(); }
};

struct BlockOptions {
    std::size_t cap = kDefaultSectorCap;
    bool eigenvectors = false;
};

/// One block per k = 2πj/N, j = 0..N-1; blocks are diagonalised in parallel.
[[nodiscard]] std::vector<SpectrumBlock> build_periodic_blocks(int n_sites, int m, double epsilon,
                                                               BlockOptions options = {});

struct BandRow {
    int k_index = 0;
    double k = 0.0;
    double lowest = 0.0;
    double second = std::numeric_limits<double>::infinity();  ///< +inf for 1-dim blocks
    double gap = std::numeric_limits<double>::infinity();
};

struct LowestBand {
    std::vector<BandRow> rows;
    double width = 0.0;    ///< max_k lowest - min_k lowest
    double min_gap = 0.0;  ///< min_k (second - lowest)
};

/// Per-k minima and gaps; blocks with no states are skipped.
[[nodiscard]] LowestBand lowest_band(const std::vector<SpectrumBlock>& blocks);

} // namespace xxz
