// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

#include <xxz/kink_solver.hpp>

#include "ball_sampler.hpp"

#include <xxz/error.hpp>
#include <xxz/kernels.hpp>
#include <xxz/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace xxz {

void KinkParams::validate() const {
    geometry().validate();
    if (down <= 0 || down >= n_sites) {
        throw std::invalid_argument("kink: need 0 < m < N");
    }
    fields.validate();
    if (w_max < 1) {
        throw std::invalid_argument("kink: w_max must be at least 1");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("kink: tol must be positive");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("kink: max_iter must be at least 1");
    }
    if (!(weight_k > 0.0)) {
        throw std::invalid_argument("kink: K must be positive");
    }
    if (!std::isfinite(epsilon) || !(weight_k * std::abs(epsilon) < 1.0)) {
        throw std::invalid_argument("kink: need K|epsilon| < 1 (K=" + format_number(weight_k) +
                                    ", epsilon=" + format_number(epsilon) + ")");
    }
}

namespace {

const KinkParams& validated(const KinkParams& p) {
    p.validate();
    return p;
}

} // namespace

KinkSystem::KinkSystem(const KinkParams& params)
    : params_(validated(params)),
      space_(params.geometry(), params.down, params.w_max, params.fields),
      first_order_entry_(space_.find(SiteSet::of({params.down, params.down + 1}))) {}

KinkCoefficients KinkSystem::zero() const {
    return {0.0, std::vector<double>(unknowns(), 0.0)};
}

double KinkSystem::value(const KinkCoefficients& e, SiteSet x) const {
    const std::int32_t i = space_.find(x);
    if (i == ConfigSpace::kOutside) {
        return 0.0;
    }
    return i == 0 ? 1.0 : e.values[static_cast<std::size_t>(i) - 1];
}

KinkCoefficients apply_F_kink(const KinkCoefficients& e, const KinkSystem& sys) {
    KinkCoefficients out = sys.zero();
    kernels::apply_f_kink_parallel(sys, e, out);
    return out;
}

double kink_norm(const KinkCoefficients& e, const KinkSystem& sys, NormKind kind) {
    const ConfigSpace& space = sys.space();
    if (kind == NormKind::plain) {
        double sum = std::abs(e.shift);
        for (std::size_t i = 1; i < space.size(); ++i) {
            sum += (space[i].diagonal - 2.0) * std::abs(e.values[i - 1]);
        }
        return sum;
    }
    const double base = sys.params().weight_k * std::abs(sys.params().epsilon);
    if (!(base > 0.0 && base < 1.0)) {
        throw std::domain_error("weighted norm requires 0 < K|epsilon| < 1");
    }
    double sum = std::abs(e.shift) / (base * base);
    for (std::size_t i = 1; i < space.size(); ++i) {
        sum += (space[i].diagonal - 2.0) * std::abs(e.values[i - 1]) *
               std::pow(base, -space[i].order);
    }
    return sum;
}

double kink_distance(const KinkCoefficients& a, const KinkCoefficients& b, const KinkSystem& sys,
                     NormKind kind) {
    KinkCoefficients d = a;
    d.shift -= b.shift;
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        d.values[i] -= b.values[i];
    }
    return kink_norm(d, sys, kind);
}

KinkSolution solve_kink(const KinkSystem& sys) {
    const KinkParams& p = sys.params();
    KinkCoefficients current = sys.zero();
    KinkCoefficients next = sys.zero();
    double residual = 0.0;
    for (int it = 1; it <= p.max_iter; ++it) {
        kernels::apply_f_kink_parallel(sys, current, next);
        residual = kink_distance(next, current, sys);
        std::swap(current, next);
        if (residual < p.tol) {
            return {std::move(current), it, residual};
        }
    }
    throw NonConvergence("kink iteration did not reach tol=" + format_number(p.tol) + " in " +
                             std::to_string(p.max_iter) + " sweeps (residual " +
                             format_number(residual) + ")",
                         p.max_iter, residual);
}

std::optional<double> kink_lipschitz_ratio(const KinkSystem& sys, const KinkCoefficients& a,
                                           const KinkCoefficients& b) {
    const double d = kink_distance(a, b, sys);
    if (d == 0.0) {
        return std::nullopt;
    }
    return kink_distance(apply_F_kink(a, sys), apply_F_kink(b, sys), sys) / d;
}

double certify_contraction_kink(const KinkSystem& sys, double delta, int samples,
                                std::uint64_t seed) {
    if (!(delta > 0.0) || samples < 1) {
        throw std::invalid_argument("certify_contraction_kink: need delta > 0 and samples >= 1");
    }
    detail::UniformStream rng(seed);
    auto draw = [&] {
        KinkCoefficients e = sys.zero();
        e.shift = rng.symmetric();
        for (double& v : e.values) {
            v = rng.symmetric();
        }
        const double scale = delta * rng.unit() / kink_norm(e, sys);
        e.shift *= scale;
        for (double& v : e.values) {
            v *= scale;
        }
        return e;
    };
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const KinkCoefficients a = draw();
        const KinkCoefficients b = draw();
        if (const auto r = kink_lipschitz_ratio(sys, a, b)) {
            worst = std::max(worst, *r);
        }
    }
    return worst;
}

std::vector<std::complex<double>> assemble_kink_state(const KinkCoefficients& e,
                                                      const KinkSystem& sys,
                                                      const SectorBasis& basis) {
    const ConfigSpace& space = sys.space();
    if (basis.n_sites() != sys.params().n_sites || basis.down() != sys.params().down) {
        throw std::invalid_argument("assemble_kink_state: basis does not match the system");
    }
    std::vector<std::complex<double>> psi(basis.size());
    psi[basis.index_of(space.reference())] = 1.0;
    for (std::size_t i = 1; i < space.size(); ++i) {
        psi[basis.index_of(space[i].sites ^ space.reference())] = e.values[i - 1];
    }
    return psi;
}

} // namespace xxz
