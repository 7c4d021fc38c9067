// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <xxz/error.hpp>
#include <xxz/json_io.hpp>
#include <xxz/verification.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

using namespace xxz;

namespace {

DropletParams defaults(double eps) {
    DropletParams p;
    p.epsilon = eps;
    return p;
}

} // namespace

TEST_CASE("comparison tolerance") {
    CHECK(comparison_tolerance(0.05, 10.0, 7) == doctest::Approx(10.0 * std::pow(0.5, 8)));
    CHECK(comparison_tolerance(0.0, 10.0, 7) == 1e-12);
    CHECK(comparison_tolerance(-0.01, 10.0, 20) == 1e-12);
}

TEST_CASE("droplet band comparison") {
    const ComparisonReport r = compare_droplet_band(defaults(0.05));
    CHECK(r.passed());
    REQUIRE(r.rows.size() == 10);
    CHECK(r.max_abs_diff < 1e-10);
    for (const ComparisonRow& row : r.rows) {
        CHECK(row.status != RowStatus::fail);
        CHECK(row.rank == 1);
        CHECK(row.oracle_second - row.oracle_lowest > 3.0);
    }
    CHECK(r.bandwidth_expansion == doctest::Approx(r.bandwidth_oracle).epsilon(1e-6));

    std::ostringstream csv;
    write_comparison_csv(csv, r);
    const std::string text = csv.str();
    CHECK(text.rfind("k_index,k,E,E_oracle,abs_diff,rank\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 11);
}

TEST_CASE("droplet band comparison: tolerance tightens with w_max") {
    double previous = 1.0;
    for (int w = 3; w <= 7; ++w) {
        DropletParams p = defaults(0.05);
        p.w_max = w;
        const ComparisonReport r = compare_droplet_band(p);
        CAPTURE(w);
        CHECK(r.passed());
        CHECK(r.max_abs_diff <= std::max(previous, 1e-12));
        previous = r.max_abs_diff;
    }
}

TEST_CASE("bandwidth scaling") {
    const std::vector<double> eps{0.02, 0.04, 0.08};
    for (const int m : {2, 3}) {
        DropletParams base = defaults(0.0);
        base.down = m;
        const ScalingFit oracle = bandwidth_scaling(base, eps, BandSource::oracle);
        const ScalingFit expansion = bandwidth_scaling(base, eps, BandSource::expansion);
        CAPTURE(m);
        CHECK(std::abs(oracle.slope - m) < 0.3);
        CHECK(std::abs(expansion.slope - m) < 0.3);
        CHECK(oracle.slope == doctest::Approx(expansion.slope).epsilon(1e-4));
    }
    const std::vector<double> two{0.02, 0.04};
    CHECK_THROWS_AS((void)bandwidth_scaling(defaults(0.0), two, BandSource::oracle),
                    std::invalid_argument);
    const std::vector<double> with_zero{0.0, 0.02, 0.04};
    CHECK_THROWS_AS((void)bandwidth_scaling(defaults(0.0), with_zero, BandSource::oracle),
                    std::invalid_argument);
    const std::vector<double> tiny{1e-6, 2e-6, 4e-6};
    CHECK_THROWS_AS((void)bandwidth_scaling(defaults(0.0), tiny, BandSource::oracle),
                    DegenerateFit);
}

TEST_CASE("eigenvector residuals") {
    const std::vector<int> ks{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    const ResidualSweep sweep = residual_sweep(defaults(0.05), ks);
    CHECK(sweep.max_residual < 1e-6);
    CHECK(sweep.max_momentum_defect < 1e-14);
    double lo = 1e300;
    for (const ResidualRow& r : sweep.rows) {
        lo = std::min(lo, r.residual);
    }
    CHECK(sweep.max_residual / lo < 10.0);

    const ResidualSweep flat = residual_sweep(defaults(0.0), ks);
    CHECK(flat.max_residual < 1e-15);

    const std::vector<int> bad{10};
    CHECK_THROWS_AS((void)residual_sweep(defaults(0.05), bad), std::invalid_argument);
}

TEST_CASE("eigenvector residuals shrink with w_max") {
    const std::vector<int> ks{0, 3};
    double previous = 1.0;
    for (int w = 2; w <= 7; ++w) {
        DropletParams p = defaults(0.05);
        p.w_max = w;
        const double r = residual_sweep(p, ks).max_residual;
        CAPTURE(w);
        // Each order gains at least a factor K|ε| = 0.5.
        CHECK(r < 0.5 * previous);
        previous = r;
    }
}

TEST_CASE("Fourier stability across ring sizes") {
    const std::vector<int> sizes{12, 16, 20};
    const FourierStability st = fourier_stability(defaults(0.05), sizes);
    REQUIRE(st.differences.size() == 2);
    CHECK(st.differences[0][0] > st.differences[1][0]);
    CHECK(st.tail_nonincreasing());
    for (const double d : st.symmetry_defect) {
        CHECK(d <= 1e-12);
    }
    for (const auto& head : st.head) {
        CHECK(head[0] == doctest::Approx(6.25e-5).epsilon(1e-3));
    }
    CHECK_THROWS_AS((void)fourier_stability(defaults(0.05), sizes, 0), std::invalid_argument);
}

TEST_CASE("report JSON") {
    const ComparisonReport r = compare_droplet_band(defaults(0.05));
    const json j = to_json(r);
    CHECK(j["passed"].get<bool>());
    CHECK(j["rows"].size() == 10);
    CHECK(j.dump() == to_json(compare_droplet_band(defaults(0.05))).dump());
}
