// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file json_io.hpp
 * @brief JSON and CSV artifacts. Schemas are documented in docs/schemas.md.
 */

#pragma once

#include <xxz/config_space.hpp>
#include <xxz/droplet_solver.hpp>
#include <xxz/kink_solver.hpp>
#include <xxz/oracle.hpp>
#include <xxz/verification.hpp>

#include <json.hpp>

#include <ostream>
#include <vector>

namespace xxz {

using json = nlohmann::ordered_json;

[[nodiscard]] json sites_json(SiteSet s);

/// {geometry, m, w_max, counts_per_order, entries: [{sites, w, walls}]}
[[nodiscard]] json to_json(const ConfigSpace& space);

[[nodiscard]] json to_json(const KinkParams& p);
[[nodiscard]] json to_json(const DropletParams& p);

/// {params, energy, E, iterations, residual, coefficients: [{sites, w, value}]}
[[nodiscard]] json to_json(const KinkSolution& sol, const KinkSystem& sys);

/// {params, baseline, e_n, coefficients, iterations, residual}
[[nodiscard]] json to_json(const DropletSolution& sol, const DropletSystem& sys);

/// {N, m, epsilon, blocks: [{k_index, dim, eigenvalues}]}
[[nodiscard]] json spectrum_json(int n_sites, int m, double epsilon,
                                 const std::vector<SpectrumBlock>& blocks);

[[nodiscard]] json to_json(const ComparisonReport& report);
[[nodiscard]] json to_json(const ScalingFit& fit);
[[nodiscard]] json to_json(const FourierStability& st);

/// k_index,k,E
void write_dispersion_csv(std::ostream& os, const DispersionResult& d);

/// k_index,k,E,E_oracle,abs_diff,rank
void write_comparison_csv(std::ostream& os, const ComparisonReport& report);

/// Fixed-width table with one status column per k.
void write_comparison_table(std::ostream& os, const ComparisonReport& report);

} // namespace xxz
