// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

#include <xxz/site_set.hpp>

#include <sstream>
#include <stdexcept>

namespace xxz {

std::string to_string(Topology t) {
    return t == Topology::open ? "open" : "periodic";
}

Topology parse_topology(const std::string& name) {
    if (name == "open") {
        return Topology::open;
    }
    if (name == "periodic") {
        return Topology::periodic;
    }
    throw std::invalid_argument("unknown topology '" + name + "'");
}

void ChainGeometry::validate() const {
    if (n_sites < 2 || n_sites > kMaxSites) {
        throw std::invalid_argument("chain length must lie in 2.." + std::to_string(kMaxSites) +
                                    ", got " + std::to_string(n_sites));
    }
}

SiteSet SiteSet::of(std::initializer_list<int> sites) {
    return of(std::vector<int>(sites));
}

SiteSet SiteSet::of(const std::vector<int>& sites) {
    std::uint64_t bits = 0;
    for (const int s : sites) {
        if (s < 1 || s > kMaxSites) {
            throw std::invalid_argument("site label out of range: " + std::to_string(s));
        }
        bits |= std::uint64_t{1} << (s - 1);
    }
    return from_bits(bits);
}

SiteSet SiteSet::block(const ChainGeometry& g, int first, int count) {
    if (count < 0 || count > g.n_sites) {
        throw std::invalid_argument("block length out of range");
    }
    std::uint64_t bits = 0;
    for (int i = 0; i < count; ++i) {
        bits |= std::uint64_t{1} << (g.wrap(first + i) - 1);
    }
    return from_bits(bits);
}

std::vector<int> SiteSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
        out.push_back(std::countr_zero(b) + 1);
    }
    return out;
}

SiteSet translate(SiteSet x, long long l, const ChainGeometry& g) {
    if (!g.periodic()) {
        throw std::invalid_argument("translate: only defined on the periodic chain");
    }
    const long long n = g.n_sites;
    const int shift = static_cast<int>(((l % n) + n) % n);
    return rotate_unchecked(x, shift, g.n_sites);
}

std::uint64_t boundary_mask(SiteSet s, const ChainGeometry& g) noexcept {
    const std::uint64_t b = s.bits() & full_mask(g.n_sites);
    // Bit j-1 of `next` holds the spin at site j+1.
    std::uint64_t next = b >> 1;
    if (g.periodic()) {
        next |= (b & 1U) << (g.n_sites - 1);
    }
    return (b ^ next) & full_mask(g.bond_count());
}

int boundary_size(SiteSet s, const ChainGeometry& g) noexcept {
    return std::popcount(boundary_mask(s, g));
}

std::vector<Bond> boundary_bonds(SiteSet s, const ChainGeometry& g) {
    std::vector<Bond> out;
    for (std::uint64_t m = boundary_mask(s, g); m != 0; m &= m - 1) {
        out.push_back(Bond{std::countr_zero(m) + 1});
    }
    return out;
}

std::string to_string(SiteSet s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const int i : s.members()) {
        os << (first ? "" : ",") << i;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace xxz
