// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace xxz::detail {

/// Portable uniform doubles: std::mt19937_64 is fully specified by the
/// standard, the distributions are not, so the conversion is done by hand.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [-1, 1).
    double symmetric() { return 2.0 * unit() - 1.0; }

private:
    std::mt19937_64 engine_;
};

} // namespace xxz::detail
