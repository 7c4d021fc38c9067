// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file config_space.hpp
 * @brief Truncated configuration space of modifications X of the reference
 *        block M, with perturbation orders w(X) and ε=0 energies.
 *
 * A modification X describes the spin configuration |X Δ M⟩ (down spins on
 * X Δ M). X is admissible for the sector with m down spins ("X:m") iff
 * |X ∩ M| = |X ∩ Mᶜ|. Hopping across a domain wall <j,j+1> maps
 * X -> X Δ {j,j+1}; w(X) is the graph distance from ∅ under these moves.
 */

#pragma once

#include <xxz/site_set.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace xxz {

/// Boundary-field strengths of the open chain. Both must be >= 1.
struct BoundaryFields {
    double a = 1.0;
    double b = 1.0;

    void validate() const;
};

/// True iff |X Δ M| = m, i.e. X is admissible in the m-down-spin sector.
[[nodiscard]] bool in_sector(SiteSet x, SiteSet reference) noexcept;

/// n(X) = |∂(X Δ M)| on the periodic chain.
/// Throws std::invalid_argument on the open chain or for 0 or N down spins.
[[nodiscard]] int wall_count(SiteSet x, int m, const ChainGeometry& g);

/// ε=0 energy λ(X) of |X Δ M⟩ on the open chain:
/// 2·(number of walls) + 2A·[1 ∈ X] + 2B·[N ∈ X].
/// Throws std::invalid_argument unless the chain is open and A, B >= 1.
[[nodiscard]] double lambda_open(SiteSet x, int m, const ChainGeometry& g, BoundaryFields fields);

/// One hopping move: the bond crossed and the resulting modification.
struct FlipMove {
    Bond bond;
    SiteSet target;
};

/// All moves X -> X Δ {j,j+1} for <j,j+1> ∈ ∂(X Δ M), by ascending bond.
[[nodiscard]] std::vector<FlipMove> flip_neighbors(SiteSet x, int m, const ChainGeometry& g);

struct ConfigEntry {
    SiteSet sites;
    int order = 0;          ///< w(X)
    int walls = 0;          ///< |∂(X Δ M)|
    double diagonal = 0.0;  ///< λ(X) on the open chain, 2·n(X) on the ring
};

/**
 * Breadth-first closure of {∅} under hopping moves, truncated at depth w_max.
 *
 * Entry 0 is always ∅. Entries are stored in discovery order (parents in
 * order, each expanded by ascending bond), so the layout is deterministic.
 * Immutable after construction.
 */
class ConfigSpace {
public:
    static constexpr std::int32_t kOutside = -1;

    ConfigSpace(const ChainGeometry& geometry, int m, int w_max, BoundaryFields fields = {});

    [[nodiscard]] const ChainGeometry& geometry() const noexcept { return geometry_; }
    [[nodiscard]] int down() const noexcept { return down_; }
    [[nodiscard]] int w_max() const noexcept { return w_max_; }
    [[nodiscard]] const BoundaryFields& fields() const noexcept { return fields_; }
    [[nodiscard]] SiteSet reference() const noexcept { return reference_; }

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] const ConfigEntry& operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] std::span<const ConfigEntry> entries() const noexcept { return entries_; }

    /// Index of X, or kOutside when X was not enumerated.
    [[nodiscard]] std::int32_t find(SiteSet x) const;

    /// Entry indices reached by one hop from entry i (kOutside beyond the
    /// truncation), aligned with bonds(i).
    [[nodiscard]] std::span<const std::int32_t> neighbors(std::size_t i) const {
        return {neighbor_index_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }
    [[nodiscard]] std::span<const Bond> bonds(std::size_t i) const {
        return {neighbor_bond_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    /// Number of entries at each depth 0..w_max.
    [[nodiscard]] std::vector<std::size_t> counts_per_order() const;

private:
    ChainGeometry geometry_;
    int down_;
    int w_max_;
    BoundaryFields fields_;
    SiteSet reference_;
    std::vector<ConfigEntry> entries_;
    std::unordered_map<std::uint64_t, std::int32_t> index_;
    std::vector<std::size_t> offsets_;
    std::vector<std::int32_t> neighbor_index_;
    std::vector<Bond> neighbor_bond_;
};

/// Builds the truncated space. Requires 0 < m < N and w_max >= 0; the open
/// chain additionally uses `fields` for λ(X).
[[nodiscard]] ConfigSpace enumerate(const ChainGeometry& g, int m, int w_max,
                                    BoundaryFields fields = {});

} // namespace xxz
