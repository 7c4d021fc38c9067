// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

#include <xxz/droplet_solver.hpp>

#include "ball_sampler.hpp"

#include <xxz/error.hpp>
#include <xxz/kernels.hpp>
#include <xxz/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xxz {

void DropletParams::validate() const {
    geometry().validate();
    if (down <= 0 || down >= n_sites) {
        throw std::invalid_argument("droplet: need 0 < m < N");
    }
    if (w_max < 1) {
        throw std::invalid_argument("droplet: w_max must be at least 1");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("droplet: tol must be positive");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("droplet: max_iter must be at least 1");
    }
    if (!(weight_k > 0.0)) {
        throw std::invalid_argument("droplet: K must be positive");
    }
    if (!std::isfinite(epsilon) || !(weight_k * std::abs(epsilon) < 1.0)) {
        throw std::invalid_argument("droplet: need K|epsilon| < 1 (K=" + format_number(weight_k) +
                                    ", epsilon=" + format_number(epsilon) + ")");
    }
}

SiteSet shift_modification(SiteSet x, int s, SiteSet reference, const ChainGeometry& g) {
    return translate(x, s, g) ^ translate(reference, s, g) ^ reference;
}

namespace {

const DropletParams& validated(const DropletParams& p) {
    p.validate();
    return p;
}

/// e^{i 2π j n / N} with the phase reduced exactly before the trig call.
std::complex<double> grid_phase(long long j, long long n, int n_sites) {
    const long long r = ((j * n) % n_sites + n_sites) % n_sites;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / n_sites);
}

} // namespace

DropletSystem::DropletSystem(const DropletParams& params)
    : params_(validated(params)), space_(params.geometry(), params.down, params.w_max) {
    const ChainGeometry g = params_.geometry();
    const SiteSet ref = space_.reference();
    const int n_sites = params_.n_sites;

    slot_of_entry_.assign(space_.size(), kNone);
    for (std::size_t i = 0; i < space_.size(); ++i) {
        if (space_[i].walls > 2) {
            slot_of_entry_[i] = static_cast<std::int32_t>(entry_of_slot_.size());
            entry_of_slot_.push_back(static_cast<std::int32_t>(i));
        }
    }

    fourier_source_.resize(static_cast<std::size_t>(n_sites));
    fourier_order_.resize(static_cast<std::size_t>(n_sites));
    for (int n = 1; n <= n_sites; ++n) {
        fourier_source_[static_cast<std::size_t>(n) - 1] = space_.find(ref ^ translate(ref, -n, g));
        const std::int32_t forward = space_.find(ref ^ translate(ref, n, g));
        fourier_order_[static_cast<std::size_t>(n) - 1] =
            forward == ConfigSpace::kOutside ? kNone
                                             : space_[static_cast<std::size_t>(forward)].order;
    }

    shifted_slot_.assign(entry_of_slot_.size() * static_cast<std::size_t>(n_sites), kNone);
    for (std::size_t slot = 0; slot < entry_of_slot_.size(); ++slot) {
        const SiteSet x = space_[static_cast<std::size_t>(entry_of_slot_[slot])].sites;
        for (int s = 1; s <= n_sites; ++s) {
            const std::int32_t target = space_.find(shift_modification(x, s, ref, g));
            if (target != ConfigSpace::kOutside) {
                shifted_slot_[slot * static_cast<std::size_t>(n_sites) +
                              static_cast<std::size_t>(s - 1)] =
                    slot_of_entry_[static_cast<std::size_t>(target)];
            }
        }
    }
}

DropletCoefficients DropletSystem::zero() const {
    return {std::vector<double>(static_cast<std::size_t>(params_.n_sites), 0.0),
            std::vector<double>(stored(), 0.0)};
}

double DropletSystem::value(const DropletCoefficients& e, SiteSet x) const {
    const std::int32_t i = space_.find(x);
    if (i == ConfigSpace::kOutside) {
        return 0.0;
    }
    const std::int32_t slot = slot_of_entry_[static_cast<std::size_t>(i)];
    return slot == kNone ? gauge_value(static_cast<std::size_t>(i))
                         : e.values[static_cast<std::size_t>(slot)];
}

DropletCoefficients apply_F_droplet(const DropletCoefficients& e, const DropletSystem& sys) {
    DropletCoefficients out = sys.zero();
    kernels::apply_f_droplet_parallel(sys, e, out);
    return out;
}

double droplet_norm(const DropletCoefficients& e, const DropletSystem& sys, NormKind kind) {
    const ConfigSpace& space = sys.space();
    const double base = sys.params().weight_k * std::abs(sys.params().epsilon);
    if (kind == NormKind::weighted && !(base > 0.0 && base < 1.0)) {
        throw std::domain_error("weighted norm requires 0 < K|epsilon| < 1");
    }
    auto weight = [&](int order) {
        return kind == NormKind::plain ? 1.0 : std::pow(base, -order);
    };

    double sum = 0.0;
    for (int n = 1; n <= sys.n_sites(); ++n) {
        const double v = std::abs(e.fourier[static_cast<std::size_t>(n) - 1]);
        if (v == 0.0) {
            continue;
        }
        int order = sys.fourier_order(n);
        if (order == DropletSystem::kNone) {
            // Only reachable when w_n > w_max; use the mirrored set's depth.
            order = space[static_cast<std::size_t>(sys.fourier_source(n))].order;
        }
        sum += v * weight(order);
    }
    for (std::size_t slot = 0; slot < sys.stored(); ++slot) {
        const ConfigEntry& x = space[static_cast<std::size_t>(sys.entry_of_slot(slot))];
        sum += 2.0 * std::abs(e.values[slot]) * (x.walls - 2.0) * weight(x.order);
    }
    return sum;
}

double droplet_distance(const DropletCoefficients& a, const DropletCoefficients& b,
                        const DropletSystem& sys, NormKind kind) {
    DropletCoefficients d = a;
    for (std::size_t i = 0; i < d.fourier.size(); ++i) {
        d.fourier[i] -= b.fourier[i];
    }
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        d.values[i] -= b.values[i];
    }
    return droplet_norm(d, sys, kind);
}

DropletSolution solve_droplet(const DropletSystem& sys) {
    const DropletParams& p = sys.params();
    DropletCoefficients current = sys.zero();
    DropletCoefficients next = sys.zero();
    double residual = 0.0;
    for (int it = 1; it <= p.max_iter; ++it) {
        kernels::apply_f_droplet_parallel(sys, current, next);
        residual = droplet_distance(next, current, sys);
        std::swap(current, next);
        if (residual < p.tol) {
            return {std::move(current), it, residual};
        }
    }
    throw NonConvergence("droplet iteration did not reach tol=" + format_number(p.tol) +
                             " in " + std::to_string(p.max_iter) + " sweeps (residual " +
                             format_number(residual) + ")",
                         p.max_iter, residual);
}

std::optional<double> droplet_lipschitz_ratio(const DropletSystem& sys,
                                              const DropletCoefficients& a,
                                              const DropletCoefficients& b) {
    const double d = droplet_distance(a, b, sys);
    if (d == 0.0) {
        return std::nullopt;
    }
    return droplet_distance(apply_F_droplet(a, sys), apply_F_droplet(b, sys), sys) / d;
}

double certify_contraction_droplet(const DropletSystem& sys, double delta, int samples,
                                   std::uint64_t seed) {
    if (!(delta > 0.0) || samples < 1) {
        throw std::invalid_argument("certify_contraction_droplet: need delta > 0 and samples >= 1");
    }
    detail::UniformStream rng(seed);
    auto draw = [&] {
        DropletCoefficients e = sys.zero();
        for (int n = 1; n <= sys.n_sites(); ++n) {
            // e_n beyond the truncation is identically zero, not an unknown.
            if (sys.fourier_source(n) != DropletSystem::kNone) {
                e.fourier[static_cast<std::size_t>(n) - 1] = rng.symmetric();
            }
        }
        for (double& v : e.values) {
            v = rng.symmetric();
        }
        const double scale = delta * rng.unit() / droplet_norm(e, sys);
        for (double& v : e.fourier) {
            v *= scale;
        }
        for (double& v : e.values) {
            v *= scale;
        }
        return e;
    };
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const DropletCoefficients a = draw();
        const DropletCoefficients b = draw();
        if (const auto r = droplet_lipschitz_ratio(sys, a, b)) {
            worst = std::max(worst, *r);
        }
    }
    return worst;
}

std::complex<double> evaluate_dispersion(const DropletCoefficients& e, double k) {
    std::complex<double> sum = kDropletBaseline;
    for (std::size_t i = 0; i < e.fourier.size(); ++i) {
        sum += e.fourier[i] * std::polar(1.0, k * static_cast<double>(i + 1));
    }
    return sum;
}

DispersionResult dispersion(const DropletCoefficients& e, const DropletSystem& sys) {
    const int n_sites = sys.n_sites();
    DispersionResult out;
    out.fourier = e.fourier;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int j = 0; j < n_sites; ++j) {
        std::complex<double> sum = kDropletBaseline;
        for (int n = 1; n <= n_sites; ++n) {
            sum += e.fourier[static_cast<std::size_t>(n) - 1] * grid_phase(j, n, n_sites);
        }
        if (std::abs(sum.imag()) > kImaginaryFloor) {
            throw ComplexLeak("Im E(k) = " + format_number(sum.imag()) + " at k index " +
                              std::to_string(j) + "; Fourier coefficients are not symmetric");
        }
        const double k = 2.0 * std::numbers::pi * j / n_sites;
        out.samples.push_back({j, k, sum.real(), sum.imag()});
        lo = std::min(lo, sum.real());
        hi = std::max(hi, sum.real());
    }
    out.bandwidth = hi - lo;
    return out;
}

std::vector<std::complex<double>> assemble_eigenvector(const DropletCoefficients& e,
                                                       const DropletSystem& sys, int k_index,
                                                       const SectorBasis& basis) {
    const int n_sites = sys.n_sites();
    if (basis.n_sites() != n_sites || basis.down() != sys.params().down) {
        throw std::invalid_argument("assemble_eigenvector: basis does not match the system");
    }
    const ChainGeometry g = sys.params().geometry();
    const ConfigSpace& space = sys.space();
    std::vector<std::complex<double>> psi(basis.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        const std::int32_t slot = sys.slot_of_entry(i);
        const double v = slot == DropletSystem::kNone ? DropletSystem::gauge_value(i)
                                                      : e.values[static_cast<std::size_t>(slot)];
        if (v == 0.0) {
            continue;
        }
        const SiteSet config = space[i].sites ^ space.reference();
        for (int l = 1; l <= n_sites; ++l) {
            psi[basis.index_of(translate(config, l, g))] += v * grid_phase(k_index, l, n_sites);
        }
    }
    return psi;
}

} // namespace xxz
