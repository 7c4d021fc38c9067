// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

#include <xxz/config_space.hpp>

#include <stdexcept>
#include <string>

namespace xxz {

namespace {

void check_sector(int m, const ChainGeometry& g) {
    g.validate();
    if (m <= 0 || m >= g.n_sites) {
        throw std::invalid_argument("down-spin count must satisfy 0 < m < N (m=" +
                                    std::to_string(m) + ", N=" + std::to_string(g.n_sites) + ")");
    }
}

double diagonal_energy(SiteSet x, int walls, const ChainGeometry& g, const BoundaryFields& f) {
    if (g.periodic()) {
        return 2.0 * walls;
    }
    double lambda = 2.0 * walls;
    if (x.contains(1)) {
        lambda += 2.0 * f.a;
    }
    if (x.contains(g.n_sites)) {
        lambda += 2.0 * f.b;
    }
    return lambda;
}

} // namespace

void BoundaryFields::validate() const {
    if (!(a >= 1.0) || !(b >= 1.0)) {
        throw std::invalid_argument("boundary fields must satisfy A >= 1 and B >= 1");
    }
}

bool in_sector(SiteSet x, SiteSet reference) noexcept {
    return (x & reference).size() * 2 == x.size();
}

int wall_count(SiteSet x, int m, const ChainGeometry& g) {
    if (!g.periodic()) {
        throw std::invalid_argument("wall_count: periodic chain expected");
    }
    check_sector(m, g);
    return boundary_size(x ^ SiteSet::reference(g, m), g);
}

double lambda_open(SiteSet x, int m, const ChainGeometry& g, BoundaryFields fields) {
    if (g.periodic()) {
        throw std::invalid_argument("lambda_open: open chain expected");
    }
    check_sector(m, g);
    fields.validate();
    const int walls = boundary_size(x ^ SiteSet::reference(g, m), g);
    return diagonal_energy(x, walls, g, fields);
}

std::vector<FlipMove> flip_neighbors(SiteSet x, int m, const ChainGeometry& g) {
    check_sector(m, g);
    std::vector<FlipMove> out;
    for (std::uint64_t mask = boundary_mask(x ^ SiteSet::reference(g, m), g); mask != 0;
         mask &= mask - 1) {
        const Bond bond{std::countr_zero(mask) + 1};
        out.push_back({bond, x ^ bond.sites(g)});
    }
    return out;
}

ConfigSpace::ConfigSpace(const ChainGeometry& geometry, int m, int w_max, BoundaryFields fields)
    : geometry_(geometry), down_(m), w_max_(w_max), fields_(fields) {
    check_sector(m, geometry_);
    if (w_max < 0) {
        throw std::invalid_argument("w_max must be non-negative");
    }
    if (!geometry_.periodic()) {
        fields_.validate();
    }
    reference_ = SiteSet::reference(geometry_, m);

    auto add = [this](SiteSet x, int order) {
        const int walls = boundary_size(x ^ reference_, geometry_);
        index_.emplace(x.bits(), static_cast<std::int32_t>(entries_.size()));
        entries_.push_back({x, order, walls, diagonal_energy(x, walls, geometry_, fields_)});
    };

    add(SiteSet{}, 0);
    // The entries vector doubles as the BFS queue.
    for (std::size_t head = 0; head < entries_.size(); ++head) {
        const ConfigEntry current = entries_[head];
        if (current.order == w_max_) {
            continue;
        }
        for (std::uint64_t mask = boundary_mask(current.sites ^ reference_, geometry_); mask != 0;
             mask &= mask - 1) {
            const Bond bond{std::countr_zero(mask) + 1};
            const SiteSet next = current.sites ^ bond.sites(geometry_);
            if (!index_.contains(next.bits())) {
                add(next, current.order + 1);
            }
        }
    }

    offsets_.reserve(entries_.size() + 1);
    offsets_.push_back(0);
    for (const ConfigEntry& e : entries_) {
        for (std::uint64_t mask = boundary_mask(e.sites ^ reference_, geometry_); mask != 0;
             mask &= mask - 1) {
            const Bond bond{std::countr_zero(mask) + 1};
            neighbor_bond_.push_back(bond);
            neighbor_index_.push_back(find(e.sites ^ bond.sites(geometry_)));
        }
        offsets_.push_back(neighbor_index_.size());
    }
}

std::int32_t ConfigSpace::find(SiteSet x) const {
    const auto it = index_.find(x.bits());
    return it == index_.end() ? kOutside : it->second;
}

std::vector<std::size_t> ConfigSpace::counts_per_order() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(w_max_) + 1, 0);
    for (const ConfigEntry& e : entries_) {
        ++counts[static_cast<std::size_t>(e.order)];
    }
    return counts;
}

ConfigSpace enumerate(const ChainGeometry& g, int m, int w_max, BoundaryFields fields) {
    return ConfigSpace(g, m, w_max, fields);
}

} // namespace xxz
