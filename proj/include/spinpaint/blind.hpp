#pragma once

#include <cstddef>

#include "spinpaint/image.hpp"
#include "spinpaint/pocs.hpp"
#include "spinpaint/sparsity.hpp"
#include "spinpaint/transforms.hpp"

namespace spinpaint {

struct BlindConfig {
  TransformKind kind = TransformKind::fft;
  double fraction = 0.95;
  std::size_t iterations = 400;
};

/// Pattern of the TV-reconstructed image: the receiver's stand-in for the
/// side information it never got.
SparsityPattern estimate_pattern(const Image& corrupted, const Mask& mask, TransformKind kind,
                                 double fraction);

/// Blind recovery:
///   1. x_tv = tv_reconstruct(corrupted, mask); estimate the pattern from it,
///   2. degraded sparse image = apply_mask(project_sparse(x_tv), mask),
///   3. inpaint_with_side_info on that image with the estimated pattern,
///   4. known pixels of the result overwritten by those of `corrupted`.
RecoveryReport inpaint_blind(const Image& corrupted, const Mask& mask, const BlindConfig& config);

}  // namespace spinpaint
