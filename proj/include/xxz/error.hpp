// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace xxz {

/// Short %g rendering of a double for error messages.
[[nodiscard]] inline std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

/// Base class for failures of the numerics (as opposed to bad input, which
/// is reported with std::invalid_argument).
class NumericalError : public std::runtime_error {
public:
    NumericalError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    /// Short machine-readable tag, e.g. "NonConvergence".
    [[nodiscard]] const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class NonConvergence : public NumericalError {
public:
    NonConvergence(const std::string& what, int iterations, double residual)
        : NumericalError("NonConvergence", what),
          iterations_(iterations),
          residual_(residual) {}

    [[nodiscard]] int iterations() const noexcept { return iterations_; }
    [[nodiscard]] double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

class SectorTooLarge : public NumericalError {
public:
    explicit SectorTooLarge(const std::string& what)
        : NumericalError("SectorTooLarge", what) {}
};

class ComplexLeak : public NumericalError {
public:
    explicit ComplexLeak(const std::string& what)
        : NumericalError("ComplexLeak", what) {}
};

class DegenerateFit : public NumericalError {
public:
    explicit DegenerateFit(const std::string& what)
        : NumericalError("DegenerateFit", what) {}
};

} // namespace xxz
