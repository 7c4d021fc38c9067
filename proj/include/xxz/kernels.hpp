// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file kernels.hpp
 * @brief Inner loops of the solvers and the oracle.
 *
 * Every kernel has a serial reference version and an OpenMP version. Both
 * evaluate each output element with the same arithmetic in the same order,
 * so their results are bit-identical; the tests rely on this.
 */

#pragma once

#include <xxz/droplet_solver.hpp>
#include <xxz/kink_solver.hpp>
#include <xxz/oracle.hpp>

#include <complex>
#include <span>

namespace xxz::kernels {

/// out = F(in) for the kink map. `out` must have the shape of sys.zero().
void apply_f_kink_serial(const KinkSystem& sys, const KinkCoefficients& in, KinkCoefficients& out);
void apply_f_kink_parallel(const KinkSystem& sys, const KinkCoefficients& in, KinkCoefficients& out);

/// out = F(in) for the droplet map.
void apply_f_droplet_serial(const DropletSystem& sys, const DropletCoefficients& in,
                            DropletCoefficients& out);
void apply_f_droplet_parallel(const DropletSystem& sys, const DropletCoefficients& in,
                              DropletCoefficients& out);

/// y = H x in the sector basis, for the literal Hamiltonian of `geometry`
/// (open or periodic) at coupling epsilon.
void apply_hamiltonian_serial(const SectorBasis& basis, const ChainGeometry& geometry,
                              double epsilon, BoundaryFields fields,
                              std::span<const std::complex<double>> x,
                              std::span<std::complex<double>> y);
void apply_hamiltonian_parallel(const SectorBasis& basis, const ChainGeometry& geometry,
                                double epsilon, BoundaryFields fields,
                                std::span<const std::complex<double>> x,
                                std::span<std::complex<double>> y);

} // namespace xxz::kernels
