// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file site_set.hpp
 * @brief Chain geometry, site sets and the set algebra used to describe
 *        spin configurations relative to the reference block M = {1..m}.
 *
 * Sites are numbered 1..N. A SiteSet is a bit mask with bit (i-1) set for
 * site i, so chains are limited to N <= 64 sites. Equal member sets always
 * have equal masks, which makes the mask usable directly as a hash key.
 */

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace xxz {

enum class Topology { open, periodic };

[[nodiscard]] std::string to_string(Topology t);
[[nodiscard]] Topology parse_topology(const std::string& name);

inline constexpr int kMaxSites = 64;

struct ChainGeometry {
    int n_sites = 2;
    Topology topology = Topology::periodic;

    /// Throws std::invalid_argument unless 2 <= n_sites <= kMaxSites.
    void validate() const;

    [[nodiscard]] bool periodic() const noexcept { return topology == Topology::periodic; }

    /// Number of nearest-neighbour bonds: N-1 (open) or N (periodic).
    [[nodiscard]] int bond_count() const noexcept {
        return periodic() ? n_sites : n_sites - 1;
    }

    /// Wraps any integer onto 1..N.
    [[nodiscard]] int wrap(long long site) const noexcept {
        const long long n = n_sites;
        return static_cast<int>(((site - 1) % n + n) % n) + 1;
    }

    friend bool operator==(const ChainGeometry&, const ChainGeometry&) = default;
};

class SiteSet {
public:
    constexpr SiteSet() noexcept = default;

    [[nodiscard]] static constexpr SiteSet from_bits(std::uint64_t bits) noexcept {
        SiteSet s;
        s.bits_ = bits;
        return s;
    }

    /// Builds a set from 1-based site labels. Throws on labels outside 1..64.
    [[nodiscard]] static SiteSet of(std::initializer_list<int> sites);
    [[nodiscard]] static SiteSet of(const std::vector<int>& sites);

    /// The contiguous block {first, ..., first+count-1}, wrapped on the ring.
    [[nodiscard]] static SiteSet block(const ChainGeometry& g, int first, int count);

    /// The reference block M = {1, ..., m}.
    [[nodiscard]] static SiteSet reference(const ChainGeometry& g, int m) {
        return block(g, 1, m);
    }

    [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
    [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
    [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits_); }

    [[nodiscard]] constexpr bool contains(int site) const noexcept {
        return site >= 1 && site <= kMaxSites && ((bits_ >> (site - 1)) & 1U) != 0;
    }

    /// Ascending 1-based site labels.
    [[nodiscard]] std::vector<int> members() const;

    [[nodiscard]] constexpr SiteSet operator^(SiteSet o) const noexcept {
        return from_bits(bits_ ^ o.bits_);
    }
    [[nodiscard]] constexpr SiteSet operator&(SiteSet o) const noexcept {
        return from_bits(bits_ & o.bits_);
    }
    [[nodiscard]] constexpr SiteSet operator|(SiteSet o) const noexcept {
        return from_bits(bits_ | o.bits_);
    }

    friend constexpr bool operator==(SiteSet, SiteSet) noexcept = default;
    friend constexpr auto operator<=>(SiteSet a, SiteSet b) noexcept {
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Bond <j, j+1>; on the periodic chain the right end of bond N is site 1.
struct Bond {
    int left = 1;

    [[nodiscard]] int right(const ChainGeometry& g) const noexcept { return g.wrap(left + 1); }
    [[nodiscard]] SiteSet sites(const ChainGeometry& g) const {
        return SiteSet::of({left, right(g)});
    }

    friend constexpr bool operator==(Bond, Bond) noexcept = default;
    friend constexpr auto operator<=>(Bond, Bond) noexcept = default;
};

/// X Δ Y: the sites in exactly one of the two sets.
[[nodiscard]] constexpr SiteSet sym_diff(SiteSet x, SiteSet y) noexcept { return x ^ y; }

/// Mask with bits 0..N-1 set.
[[nodiscard]] constexpr std::uint64_t full_mask(int n_sites) noexcept {
    return n_sites >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_sites) - 1;
}

/// Shifts every member by l sites to the right, modulo N.
/// Throws std::invalid_argument on the open chain.
[[nodiscard]] SiteSet translate(SiteSet x, long long l, const ChainGeometry& g);

/// Rotation on the ring without argument checks; l must lie in 0..N-1.
[[nodiscard]] constexpr SiteSet rotate_unchecked(SiteSet x, int l, int n_sites) noexcept {
    if (l == 0) {
        return x;
    }
    const std::uint64_t b = x.bits();
    return SiteSet::from_bits(((b << l) | (b >> (n_sites - l))) & full_mask(n_sites));
}

/// Bonds with exactly one endpoint in s, in ascending order of the left site.
/// The bond <N,1> is present only on the periodic chain.
[[nodiscard]] std::vector<Bond> boundary_bonds(SiteSet s, const ChainGeometry& g);

/// |∂s| computed with bit operations.
[[nodiscard]] int boundary_size(SiteSet s, const ChainGeometry& g) noexcept;

/// Mask whose bit (j-1) is set iff bond <j,j+1> lies in ∂s.
[[nodiscard]] std::uint64_t boundary_mask(SiteSet s, const ChainGeometry& g) noexcept;

[[nodiscard]] std::string to_string(SiteSet s);

} // namespace xxz
