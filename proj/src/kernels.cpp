// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

#include <xxz/kernels.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace xxz::kernels {

namespace {

// ---------------------------------------------------------------------------
// Kink map
// ---------------------------------------------------------------------------

inline double kink_lookup(const KinkCoefficients& e, std::int32_t entry) noexcept {
    if (entry == ConfigSpace::kOutside) {
        return 0.0;
    }
    if (entry == 0) {
        return 1.0;
    }
    return e.values[static_cast<std::size_t>(entry) - 1];
}

inline double kink_update(const KinkSystem& sys, const KinkCoefficients& in, std::size_t entry) {
    const ConfigSpace& space = sys.space();
    const double eps = sys.params().epsilon;
    double flips = 0.0;
    for (const std::int32_t t : space.neighbors(entry)) {
        flips += kink_lookup(in, t);
    }
    return (-2.0 * eps * flips + in.shift * in.values[entry - 1]) / (space[entry].diagonal - 2.0);
}

inline double kink_shift(const KinkSystem& sys, const KinkCoefficients& in) {
    return 2.0 * sys.params().epsilon * kink_lookup(in, sys.first_order_entry());
}

// ---------------------------------------------------------------------------
// Droplet map
// ---------------------------------------------------------------------------

inline double droplet_lookup(const DropletSystem& sys, const DropletCoefficients& e,
                             std::int32_t entry) noexcept {
    if (entry == ConfigSpace::kOutside) {
        return 0.0;
    }
    const std::int32_t slot = sys.slot_of_entry(static_cast<std::size_t>(entry));
    if (slot == DropletSystem::kNone) {
        return DropletSystem::gauge_value(static_cast<std::size_t>(entry));
    }
    return e.values[static_cast<std::size_t>(slot)];
}

inline double fourier_update(const DropletSystem& sys, const DropletCoefficients& in, int n) {
    const std::int32_t source = sys.fourier_source(n);
    if (source == DropletSystem::kNone) {
        return 0.0;
    }
    double sum = 0.0;
    for (const std::int32_t t : sys.space().neighbors(static_cast<std::size_t>(source))) {
        sum += droplet_lookup(sys, in, t);
    }
    return 2.0 * sys.params().epsilon * sum;
}

inline double droplet_update(const DropletSystem& sys, const DropletCoefficients& in,
                             const std::vector<int>& active_shifts, std::size_t slot) {
    const ConfigSpace& space = sys.space();
    const auto entry = static_cast<std::size_t>(sys.entry_of_slot(slot));
    double flips = 0.0;
    for (const std::int32_t t : space.neighbors(entry)) {
        flips += droplet_lookup(sys, in, t);
    }
    double translated = 0.0;
    for (const int s : active_shifts) {
        const std::int32_t target = sys.shifted_slot(slot, s);
        if (target != DropletSystem::kNone) {
            translated += in.fourier[static_cast<std::size_t>(s) - 1] *
                          in.values[static_cast<std::size_t>(target)];
        }
    }
    const double excess = space[entry].walls - 2.0;
    return (-sys.params().epsilon * flips + 0.5 * translated) / excess;
}

std::vector<int> active_shifts(const DropletCoefficients& in) {
    std::vector<int> out;
    for (std::size_t i = 0; i < in.fourier.size(); ++i) {
        if (in.fourier[i] != 0.0) {
            out.push_back(static_cast<int>(i) + 1);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hamiltonian application
// ---------------------------------------------------------------------------

inline std::complex<double> hamiltonian_row(const SectorBasis& basis, const ChainGeometry& g,
                                            double epsilon, BoundaryFields fields,
                                            std::span<const std::complex<double>> x,
                                            std::size_t row) {
    const SiteSet s = basis.state(row);
    std::complex<double> acc = diagonal_energy(s, g, fields) * x[row];
    for (std::uint64_t mask = boundary_mask(s, g); mask != 0; mask &= mask - 1) {
        const Bond bond{std::countr_zero(mask) + 1};
        acc += -2.0 * epsilon * x[basis.index_of(s ^ bond.sites(g))];
    }
    return acc;
}

} // namespace

void apply_f_kink_serial(const KinkSystem& sys, const KinkCoefficients& in, KinkCoefficients& out) {
    out.shift = kink_shift(sys, in);
    const std::size_t n = sys.space().size();
    for (std::size_t i = 1; i < n; ++i) {
        out.values[i - 1] = kink_update(sys, in, i);
    }
}

void apply_f_kink_parallel(const KinkSystem& sys, const KinkCoefficients& in,
                           KinkCoefficients& out) {
    out.shift = kink_shift(sys, in);
    const auto n = static_cast<std::ptrdiff_t>(sys.space().size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 1; i < n; ++i) {
        out.values[static_cast<std::size_t>(i) - 1] =
            kink_update(sys, in, static_cast<std::size_t>(i));
    }
}

void apply_f_droplet_serial(const DropletSystem& sys, const DropletCoefficients& in,
                            DropletCoefficients& out) {
    for (int n = 1; n <= sys.n_sites(); ++n) {
        out.fourier[static_cast<std::size_t>(n) - 1] = fourier_update(sys, in, n);
    }
    const std::vector<int> shifts = active_shifts(in);
    for (std::size_t slot = 0; slot < sys.stored(); ++slot) {
        out.values[slot] = droplet_update(sys, in, shifts, slot);
    }
}

void apply_f_droplet_parallel(const DropletSystem& sys, const DropletCoefficients& in,
                              DropletCoefficients& out) {
    for (int n = 1; n <= sys.n_sites(); ++n) {
        out.fourier[static_cast<std::size_t>(n) - 1] = fourier_update(sys, in, n);
    }
    const std::vector<int> shifts = active_shifts(in);
    const auto stored = static_cast<std::ptrdiff_t>(sys.stored());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t slot = 0; slot < stored; ++slot) {
        out.values[static_cast<std::size_t>(slot)] =
            droplet_update(sys, in, shifts, static_cast<std::size_t>(slot));
    }
}

void apply_hamiltonian_serial(const SectorBasis& basis, const ChainGeometry& geometry,
                              double epsilon, BoundaryFields fields,
                              std::span<const std::complex<double>> x,
                              std::span<std::complex<double>> y) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        y[i] = hamiltonian_row(basis, geometry, epsilon, fields, x, i);
    }
}

void apply_hamiltonian_parallel(const SectorBasis& basis, const ChainGeometry& geometry,
                                double epsilon, BoundaryFields fields,
                                std::span<const std::complex<double>> x,
                                std::span<std::complex<double>> y) {
    const auto n = static_cast<std::ptrdiff_t>(basis.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        y[static_cast<std::size_t>(i)] =
            hamiltonian_row(basis, geometry, epsilon, fields, x, static_cast<std::size_t>(i));
    }
}

} // namespace xxz::kernels
