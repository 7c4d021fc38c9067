// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

#include <xxz/oracle.hpp>

#include <xxz/error.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xxz {

std::uint64_t binomial(int n, int k) noexcept {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t c = 1;
    for (int i = 0; i < k; ++i) {
        // c * (n-i) / (i+1) is exact; cancel the gcd first so the product is small.
        const auto den = static_cast<std::uint64_t>(i + 1);
        const std::uint64_t g = std::gcd(c, den);
        const std::uint64_t factor = static_cast<std::uint64_t>(n - i) / (den / g);
        if (c / g > kMax / factor) {
            return kMax;
        }
        c = c / g * factor;
    }
    return c;
}

SectorBasis::SectorBasis(int n_sites, int m, std::size_t cap) : n_sites_(n_sites), down_(m) {
    ChainGeometry{n_sites, Topology::periodic}.validate();
    if (m < 0 || m > n_sites) {
        throw std::invalid_argument("sector: need 0 <= m <= N");
    }
    const std::uint64_t dim = binomial(n_sites, m);
    if (dim > cap) {
        throw SectorTooLarge("C(" + std::to_string(n_sites) + "," + std::to_string(m) +
                             ") = " + std::to_string(dim) + " exceeds the sector cap " +
                             std::to_string(cap));
    }
    states_.reserve(static_cast<std::size_t>(dim));
    index_.reserve(static_cast<std::size_t>(dim));
    if (m == 0) {
        states_.push_back(SiteSet{});
    } else {
        // Gosper's hack: next larger integer with the same popcount.
        const std::uint64_t limit = full_mask(n_sites);
        std::uint64_t v = full_mask(m);
        while (true) {
            states_.push_back(SiteSet::from_bits(v));
            if (states_.size() == dim) {
                break;
            }
            const std::uint64_t c = v & (~v + 1);
            const std::uint64_t r = v + c;
            v = (((r ^ v) >> 2) / c) | r;
            if (v > limit) {
                break;
            }
        }
    }
    for (std::size_t i = 0; i < states_.size(); ++i) {
        index_.emplace(states_[i].bits(), i);
    }
}

std::size_t SectorBasis::index_of(SiteSet s) const {
    const auto it = index_.find(s.bits());
    if (it == index_.end()) {
        throw std::out_of_range("state " + to_string(s) + " is not in the sector");
    }
    return it->second;
}

double diagonal_energy(SiteSet s, const ChainGeometry& g, BoundaryFields fields) {
    double energy = 0.0;
    for (int j = 1; j <= g.bond_count(); ++j) {
        if (s.contains(j) != s.contains(g.wrap(j + 1))) {
            energy += 2.0;
        }
    }
    if (!g.periodic()) {
        if (!s.contains(1)) {
            energy += 2.0 * fields.a;  // site 1 up
        }
        if (s.contains(g.n_sites)) {
            energy += 2.0 * fields.b;  // site N down
        }
    }
    return energy;
}

namespace {

Eigen::MatrixXd dense_hamiltonian(const SectorBasis& basis, const ChainGeometry& g, double eps,
                                  BoundaryFields fields) {
    const auto dim = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const SiteSet s = basis.state(static_cast<std::size_t>(i));
        h(i, i) = diagonal_energy(s, g, fields);
        for (int j = 1; j <= g.bond_count(); ++j) {
            const int a = j;
            const int b = g.wrap(j + 1);
            if (s.contains(a) != s.contains(b)) {
                const auto t = static_cast<Eigen::Index>(basis.index_of(s ^ SiteSet::of({a, b})));
                h(t, i) += -2.0 * eps;
            }
        }
    }
    return h;
}

} // namespace

Eigen::MatrixXd build_open_hamiltonian(const SectorBasis& basis, double epsilon,
                                       BoundaryFields fields) {
    fields.validate();
    return dense_hamiltonian(basis, {basis.n_sites(), Topology::open}, epsilon, fields);
}

Eigen::MatrixXd build_periodic_hamiltonian(const SectorBasis& basis, double epsilon) {
    return dense_hamiltonian(basis, {basis.n_sites(), Topology::periodic}, epsilon, {});
}

std::vector<double> symmetric_spectrum(const Eigen::MatrixXd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("EigenFailure", "dense symmetric eigensolver failed");
    }
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

TranslationOrbits translation_orbits(const SectorBasis& basis) {
    const ChainGeometry g{basis.n_sites(), Topology::periodic};
    TranslationOrbits out;
    out.n_sites = basis.n_sites();
    out.down = basis.down();
    out.orbit_of_state.assign(basis.size(), -1);
    out.shift_of_state.assign(basis.size(), 0);
    // Ascending traversal makes the first unvisited member the smallest translate.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (out.orbit_of_state[i] != -1) {
            continue;
        }
        const SiteSet rep = basis.state(i);
        const auto orbit = static_cast<std::int32_t>(out.orbits.size());
        int period = 0;
        for (int l = 0; l < basis.n_sites(); ++l) {
            const SiteSet t = translate(rep, l, g);
            if (l > 0 && t == rep) {
                break;
            }
            const std::size_t idx = basis.index_of(t);
            out.orbit_of_state[idx] = orbit;
            out.shift_of_state[idx] = l;
            period = l + 1;
        }
        out.orbits.push_back({rep, period});
    }
    return out;
}

std::vector<std::int32_t> admissible_orbits(const TranslationOrbits& orbits, int k_index) {
    std::vector<std::int32_t> out;
    for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
        if ((static_cast<long long>(k_index) * orbits.orbits[o].size) % orbits.n_sites == 0) {
            out.push_back(static_cast<std::int32_t>(o));
        }
    }
    return out;
}

Eigen::MatrixXcd momentum_block_matrix(const SectorBasis& basis, const TranslationOrbits& orbits,
                                       int k_index, double epsilon) {
    const int n = orbits.n_sites;
    const ChainGeometry g{n, Topology::periodic};
    const std::vector<std::int32_t> members = admissible_orbits(orbits, k_index);
    std::vector<std::int32_t> position(orbits.orbits.size(), -1);
    for (std::size_t p = 0; p < members.size(); ++p) {
        position[static_cast<std::size_t>(members[p])] = static_cast<std::int32_t>(p);
    }
    auto phase = [&](int d) {
        // e^{-ikd}, k = 2πj/N
        const long long r = (static_cast<long long>(k_index) * d) % n;
        return std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(r) / n);
    };

    const auto dim = static_cast<Eigen::Index>(members.size());
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const Orbit& from = orbits.orbits[static_cast<std::size_t>(members[static_cast<std::size_t>(col)])];
        const SiteSet r = from.representative;
        auto couple = [&](SiteSet c, double amplitude) {
            const std::size_t idx = basis.index_of(c);
            const auto to = static_cast<std::size_t>(orbits.orbit_of_state[idx]);
            const std::int32_t row = position[to];
            if (row < 0) {
                return;
            }
            const double norm = std::sqrt(static_cast<double>(from.size) / orbits.orbits[to].size);
            block(row, col) += amplitude * norm * phase(orbits.shift_of_state[idx]);
        };
        couple(r, diagonal_energy(r, g, {}));
        for (int j = 1; j <= n; ++j) {
            const int a = j;
            const int b = g.wrap(j + 1);
            if (r.contains(a) != r.contains(b)) {
                couple(r ^ SiteSet::of({a, b}), -2.0 * epsilon);
            }
        }
    }
    return block;
}

std::vector<SpectrumBlock> build_periodic_blocks(int n_sites, int m, double epsilon,
                                                 BlockOptions options) {
    const SectorBasis basis(n_sites, m, options.cap);
    const TranslationOrbits orbits = translation_orbits(basis);
    std::vector<SpectrumBlock> blocks(static_cast<std::size_t>(n_sites));

#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < n_sites; ++j) {
        SpectrumBlock& block = blocks[static_cast<std::size_t>(j)];
        block.k_index = j;
        block.k = 2.0 * std::numbers::pi * j / n_sites;
        for (const std::int32_t o : admissible_orbits(orbits, j)) {
            block.representatives.push_back(orbits.orbits[static_cast<std::size_t>(o)].representative);
            block.orbit_sizes.push_back(orbits.orbits[static_cast<std::size_t>(o)].size);
        }
        if (block.representatives.empty()) {
            continue;
        }
        const Eigen::MatrixXcd h = momentum_block_matrix(basis, orbits, j, epsilon);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
            h, options.eigenvectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
        const Eigen::VectorXd& ev = solver.eigenvalues();
        block.eigenvalues.assign(ev.data(), ev.data() + ev.size());
        if (options.eigenvectors) {
            block.eigenvectors = solver.eigenvectors();
        }
    }
    return blocks;
}

LowestBand lowest_band(const std::vector<SpectrumBlock>& blocks) {
    LowestBand band;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    band.min_gap = std::numeric_limits<double>::infinity();
    for (const SpectrumBlock& b : blocks) {
        if (b.eigenvalues.empty()) {
            continue;
        }
        BandRow row;
        row.k_index = b.k_index;
        row.k = b.k;
        row.lowest = b.eigenvalues.front();
        if (b.eigenvalues.size() > 1) {
            row.second = b.eigenvalues[1];
            row.gap = row.second - row.lowest;
        }
        band.min_gap = std::min(band.min_gap, row.gap);
        lo = std::min(lo, row.lowest);
        hi = std::max(hi, row.lowest);
        band.rows.push_back(row);
    }
    band.width = band.rows.empty() ? 0.0 : hi - lo;
    return band;
}

} // namespace xxz
