// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <xxz/config_space.hpp>
#include <xxz/site_set.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

using namespace xxz;

namespace {

constexpr ChainGeometry ring(int n) { return {n, Topology::periodic}; }
constexpr ChainGeometry open_chain(int n) { return {n, Topology::open}; }

// Depth of every down-spin configuration reachable from M by swapping an
// anti-parallel neighbour pair, by plain BFS over raw bit masks.
std::map<std::uint64_t, int> brute_force_depths(int n, int m, bool periodic, int w_max) {
    const std::uint64_t ref = (std::uint64_t{1} << m) - 1;
    std::map<std::uint64_t, int> depth{{ref, 0}};
    std::queue<std::uint64_t> q;
    q.push(ref);
    const int bonds = periodic ? n : n - 1;
    while (!q.empty()) {
        const std::uint64_t s = q.front();
        q.pop();
        const int d = depth[s];
        if (d == w_max) {
            continue;
        }
        for (int j = 0; j < bonds; ++j) {
            const int k = (j + 1) % n;
            const bool a = (s >> j) & 1U;
            const bool b = (s >> k) & 1U;
            if (a == b) {
                continue;
            }
            const std::uint64_t t = s ^ (std::uint64_t{1} << j) ^ (std::uint64_t{1} << k);
            if (depth.emplace(t, d + 1).second) {
                q.push(t);
            }
        }
    }
    // Re-key by modification X = S Δ M.
    std::map<std::uint64_t, int> out;
    for (const auto& [s, d] : depth) {
        out[s ^ ref] = d;
    }
    return out;
}

} // namespace

TEST_CASE("site sets: symmetric difference and membership") {
    const SiteSet a = SiteSet::of({1, 2, 3});
    const SiteSet b = SiteSet::of({3, 4});
    CHECK(sym_diff(a, b) == SiteSet::of({1, 2, 4}));
    CHECK(sym_diff(a, a).empty());
    CHECK(a.size() == 3);
    CHECK(a.contains(2));
    CHECK_FALSE(a.contains(4));
    CHECK(a.members() == std::vector<int>{1, 2, 3});
    CHECK(to_string(b) == "{3,4}");
}

TEST_CASE("site sets: translation wraps on the ring and is rejected on the open chain") {
    const ChainGeometry g = ring(8);
    const SiteSet m = SiteSet::reference(g, 3);
    CHECK(translate(m, 1, g) == SiteSet::of({2, 3, 4}));
    CHECK(translate(m, 7, g) == SiteSet::of({8, 1, 2}));
    CHECK(translate(m, -1, g) == translate(m, 7, g));
    CHECK(translate(m, 8, g) == m);
    CHECK_THROWS_AS((void)translate(m, 1, open_chain(8)), std::invalid_argument);
}

TEST_CASE("site sets: geometry validation") {
    CHECK_THROWS_AS((ChainGeometry{1, Topology::periodic}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ChainGeometry{65, Topology::open}.validate()), std::invalid_argument);
    CHECK_NOTHROW((ChainGeometry{64, Topology::open}.validate()));
    CHECK(parse_topology("periodic") == Topology::periodic);
    CHECK_THROWS_AS((void)parse_topology("mobius"), std::invalid_argument);
}

TEST_CASE("boundary bonds") {
    const SiteSet m = SiteSet::of({1, 2, 3});
    const auto open_walls = boundary_bonds(m, open_chain(8));
    REQUIRE(open_walls.size() == 1);
    CHECK(open_walls[0].left == 3);

    const auto ring_walls = boundary_bonds(m, ring(8));
    REQUIRE(ring_walls.size() == 2);
    CHECK(ring_walls[0].left == 3);
    CHECK(ring_walls[1].left == 8);
    CHECK(ring_walls[1].right(ring(8)) == 1);

    CHECK(boundary_size(SiteSet{}, ring(8)) == 0);
    CHECK(boundary_size(SiteSet::of({2, 4, 6, 8}), ring(8)) == 8);
}

TEST_CASE("wall count n(X)") {
    const ChainGeometry g = ring(10);
    const int m = 3;
    const SiteSet ref = SiteSet::reference(g, m);
    CHECK(wall_count(SiteSet{}, m, g) == 2);
    for (int n = 1; n < 10; ++n) {
        CHECK(wall_count(ref ^ translate(ref, n, g), m, g) == 2);
    }
    CHECK(wall_count(SiteSet::of({3, 4}), m, g) == 4);
    CHECK_THROWS_AS((void)wall_count(SiteSet{}, m, open_chain(10)), std::invalid_argument);
}

TEST_CASE("open-chain diagonal energy lambda(X)") {
    const ChainGeometry g = open_chain(12);
    const int m = 6;
    CHECK(lambda_open(SiteSet{}, m, g, {}) == 2.0);
    CHECK(lambda_open(SiteSet::of({6, 7}), m, g, {}) == 6.0);
    CHECK(lambda_open(SiteSet::of({1}), m, g, {2.0, 1.0}) > 2.0);
    CHECK_THROWS_AS((void)lambda_open(SiteSet{}, m, g, {0.5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)lambda_open(SiteSet{}, m, ring(12), {}), std::invalid_argument);

    // Every non-empty admissible modification costs at least 6.
    const ConfigSpace space(g, m, 6);
    for (std::size_t i = 1; i < space.size(); ++i) {
        CHECK(space[i].diagonal >= 6.0);
    }
}

TEST_CASE("hopping moves") {
    const auto open_moves = flip_neighbors(SiteSet{}, 6, open_chain(12));
    REQUIRE(open_moves.size() == 1);
    CHECK(open_moves[0].target == SiteSet::of({6, 7}));

    const auto ring_moves = flip_neighbors(SiteSet{}, 3, ring(10));
    REQUIRE(ring_moves.size() == 2);
    CHECK(ring_moves[0].target == SiteSet::of({3, 4}));
    CHECK(ring_moves[1].target == SiteSet::of({1, 10}));

    // A move is its own inverse.
    const ChainGeometry g = ring(9);
    const ConfigSpace space(g, 3, 5);
    for (const ConfigEntry& e : space.entries()) {
        for (const FlipMove& mv : flip_neighbors(e.sites, 3, g)) {
            const auto back = flip_neighbors(mv.target, 3, g);
            CHECK(std::any_of(back.begin(), back.end(),
                              [&](const FlipMove& b) { return b.target == e.sites; }));
            CHECK(in_sector(mv.target, space.reference()));
        }
    }
}

TEST_CASE("enumeration: known depths") {
    const ChainGeometry g = ring(10);
    const int m = 3;
    const ConfigSpace space(g, m, 7);
    const SiteSet ref = space.reference();
    CHECK(space[0].sites.empty());
    CHECK(space[0].order == 0);
    CHECK(space[static_cast<std::size_t>(space.find(SiteSet::of({3, 4})))].order == 1);
    CHECK(space[static_cast<std::size_t>(space.find(ref ^ translate(ref, 1, g)))].order == m);
    CHECK(space.find(SiteSet::of({5})) == ConfigSpace::kOutside);

    const ConfigSpace trivial(g, m, 0);
    CHECK(trivial.size() == 1);
    CHECK_THROWS_AS((ConfigSpace(g, 0, 3)), std::invalid_argument);
    CHECK_THROWS_AS((ConfigSpace(g, m, -1)), std::invalid_argument);
}

TEST_CASE("enumeration agrees with an exhaustive search") {
    for (const bool periodic : {true, false}) {
        const int n = 8;
        const int m = 3;
        const int w_max = 4;
        const ChainGeometry g{n, periodic ? Topology::periodic : Topology::open};
        const ConfigSpace space(g, m, w_max);
        const auto expected = brute_force_depths(n, m, periodic, w_max);
        CAPTURE(periodic);
        REQUIRE(space.size() == expected.size());
        std::vector<std::size_t> counts(static_cast<std::size_t>(w_max) + 1, 0);
        for (const ConfigEntry& e : space.entries()) {
            const auto it = expected.find(e.sites.bits());
            REQUIRE(it != expected.end());
            CHECK(e.order == it->second);
            ++counts[static_cast<std::size_t>(e.order)];
        }
        CHECK(space.counts_per_order() == counts);
    }
}

TEST_CASE("enumeration: neighbour depths differ by at most one") {
    // Odd rings have odd cycles, so equal depths can be adjacent there.
    for (const int n : {10, 11}) {
        const ConfigSpace space(ring(n), 4, 6);
        for (std::size_t i = 0; i < space.size(); ++i) {
            CHECK(space[i].walls % 2 == 0);
            CHECK(space[i].sites.size() % 2 == 0);
            for (const std::int32_t j : space.neighbors(i)) {
                if (j == ConfigSpace::kOutside) {
                    CHECK(space[i].order == space.w_max());
                    continue;
                }
                const int dw = std::abs(space[static_cast<std::size_t>(j)].order - space[i].order);
                CHECK(dw <= 1);
                if (n % 2 == 0) {
                    CHECK(dw == 1);
                }
            }
        }
    }
}

TEST_CASE("enumeration is deterministic") {
    const ConfigSpace a(ring(10), 3, 6);
    const ConfigSpace b(ring(10), 3, 6);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].sites == b[i].sites);
    }
}
