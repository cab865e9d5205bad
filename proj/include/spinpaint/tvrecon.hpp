#pragma once

#include <array>
#include <cstddef>

#include "spinpaint/image.hpp"

namespace spinpaint {

/// The cross window (1 / kLowpassDivisor) * kLowpassTaps. The taps sum to the
/// divisor, so the window is normalized.
inline constexpr std::array<std::array<int, 3>, 3> kLowpassTaps = {{
    {0, 1, 0},
    {1, 1, 1},
    {0, 1, 0},
}};
inline constexpr double kLowpassDivisor = 5.0;

/// Smallest value the low-passed mask must exceed everywhere.
inline constexpr double kSupportEpsilon = 1e-6;

/// `passes` successive convolutions with kLowpassTaps, replicating edge
/// pixels outside the image. passes = 0 returns the input.
Image lowpass(const Image& image, std::size_t passes);

/// Smallest pass count p >= 1 for which every entry of the p-times
/// low-passed mask exceeds kSupportEpsilon. Throws SupportError if
/// max(rows, cols) passes are not enough.
std::size_t support_passes(const Mask& mask);

/// Time-varying reconstruction: lowpass(x*M, p) / lowpass(M, p) with
/// p = support_passes(mask), then known pixels restored verbatim.
/// `corrupted` is masked before filtering, so stray values under missing
/// pixels are ignored.
Image tv_reconstruct(const Image& corrupted, const Mask& mask);

}  // namespace spinpaint
