// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <xxz/error.hpp>
#include <xxz/kernels.hpp>
#include <xxz/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

using namespace xxz;

TEST_CASE("oracle: binomial") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("oracle: sector basis") {
    const SectorBasis basis(10, 3);
    CHECK(basis.size() == 120);
    CHECK(std::is_sorted(basis.states().begin(), basis.states().end()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis.state(i).size() == 3);
        CHECK(basis.index_of(basis.state(i)) == i);
    }
    CHECK(SectorBasis(6, 0).size() == 1);
    CHECK(SectorBasis(6, 6).size() == 1);
    CHECK_THROWS_AS(SectorBasis(40, 20, 1000), SectorTooLarge);
    CHECK_THROWS_AS(SectorBasis(6, 7), std::invalid_argument);
}

TEST_CASE("oracle: decoupled open chain") {
    const SectorBasis basis(12, 6);
    const Eigen::MatrixXd h = build_open_hamiltonian(basis, 0.0, {});
    const auto spectrum = symmetric_spectrum(h);
    CHECK(spectrum[0] == 2.0);
    CHECK(spectrum[1] >= 6.0);
    const auto ref = basis.index_of(SiteSet::of({1, 2, 3, 4, 5, 6}));
    CHECK(h(static_cast<Eigen::Index>(ref), static_cast<Eigen::Index>(ref)) == 2.0);
}

TEST_CASE("oracle: dense Hamiltonians are symmetric") {
    const SectorBasis basis(9, 4);
    const Eigen::MatrixXd open = build_open_hamiltonian(basis, 0.07, {1.3, 1.0});
    const Eigen::MatrixXd ring = build_periodic_hamiltonian(basis, 0.07);
    CHECK((open - open.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((ring - ring.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("oracle: matrix-free apply matches the dense matrix") {
    const SectorBasis basis(9, 4);
    for (const Topology t : {Topology::open, Topology::periodic}) {
        const ChainGeometry g{9, t};
        const Eigen::MatrixXd h = t == Topology::open ? build_open_hamiltonian(basis, 0.07, {})
                                                      : build_periodic_hamiltonian(basis, 0.07);
        std::vector<std::complex<double>> x(basis.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = {std::sin(0.3 * static_cast<double>(i)), std::cos(static_cast<double>(i))};
        }
        std::vector<std::complex<double>> serial(x.size());
        std::vector<std::complex<double>> parallel(x.size());
        kernels::apply_hamiltonian_serial(basis, g, 0.07, {}, x, serial);
        kernels::apply_hamiltonian_parallel(basis, g, 0.07, {}, x, parallel);
        CHECK(serial == parallel);
        const Eigen::Map<const Eigen::VectorXcd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
        const Eigen::VectorXcd dense = h.cast<std::complex<double>>() * xv;
        double err = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            err = std::max(err, std::abs(dense(static_cast<Eigen::Index>(i)) - serial[i]));
        }
        CHECK(err < 1e-13);
    }
}

TEST_CASE("oracle: translation orbits partition the sector") {
    for (const auto& [n, m] : {std::pair{8, 2}, std::pair{8, 4}, std::pair{9, 3}, std::pair{6, 3}}) {
        const SectorBasis basis(n, m);
        const TranslationOrbits orbits = translation_orbits(basis);
        std::size_t total = 0;
        for (const Orbit& o : orbits.orbits) {
            CHECK(n % o.size == 0);
            total += static_cast<std::size_t>(o.size);
        }
        CHECK(total == basis.size());

        std::size_t block_total = 0;
        for (const SpectrumBlock& b : build_periodic_blocks(n, m, 0.1)) {
            block_total += b.dim();
        }
        CHECK(block_total == binomial(n, m));
    }
}

TEST_CASE("oracle: momentum blocks are Hermitian") {
    const SectorBasis basis(8, 4);
    const TranslationOrbits orbits = translation_orbits(basis);
    for (int j = 0; j < 8; ++j) {
        const Eigen::MatrixXcd b = momentum_block_matrix(basis, orbits, j, 0.1);
        CHECK((b - b.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("oracle: block spectra reassemble the dense spectrum") {
    const int n = 8;
    const int m = 2;
    const SectorBasis basis(n, m);
    const auto dense = symmetric_spectrum(build_periodic_hamiltonian(basis, 0.1));
    std::vector<double> merged;
    for (const SpectrumBlock& b : build_periodic_blocks(n, m, 0.1)) {
        merged.insert(merged.end(), b.eigenvalues.begin(), b.eigenvalues.end());
    }
    std::sort(merged.begin(), merged.end());
    REQUIRE(merged.size() == dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) {
        CHECK(std::abs(merged[i] - dense[i]) <= 1e-12);
    }
}

TEST_CASE("oracle: decoupled ring has an isolated flat band") {
    const auto blocks = build_periodic_blocks(10, 3, 0.0);
    const LowestBand band = lowest_band(blocks);
    REQUIRE(band.rows.size() == 10);
    for (const BandRow& r : band.rows) {
        CHECK(r.lowest == doctest::Approx(4.0).epsilon(1e-14));
        CHECK(r.gap == doctest::Approx(4.0).epsilon(1e-12));
    }
    CHECK(band.width < 1e-13);
}

TEST_CASE("oracle: reruns are bit-identical") {
    const auto a = build_periodic_blocks(9, 3, 0.05);
    const auto b = build_periodic_blocks(9, 3, 0.05);
    for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(a[j].eigenvalues == b[j].eigenvalues);
    }
}

TEST_CASE("oracle: sign of the coupling on even and odd rings") {
    auto spectrum = [](int n, double eps) {
        return symmetric_spectrum(build_periodic_hamiltonian(SectorBasis(n, 3), eps));
    };
    const auto plus = spectrum(8, 0.1);
    const auto minus = spectrum(8, -0.1);
    for (std::size_t i = 0; i < plus.size(); ++i) {
        CHECK(std::abs(plus[i] - minus[i]) < 1e-12);
    }
    const auto odd_plus = spectrum(7, 0.3);
    const auto odd_minus = spectrum(7, -0.3);
    double gap = 0.0;
    for (std::size_t i = 0; i < odd_plus.size(); ++i) {
        gap = std::max(gap, std::abs(odd_plus[i] - odd_minus[i]));
    }
    CHECK(gap > 1e-3);
}

TEST_CASE("oracle: sector cap is enforced for blocks") {
    CHECK_THROWS_AS((void)build_periodic_blocks(20, 10, 0.05, {.cap = 1000}), SectorTooLarge);
}
