#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "spinpaint/image.hpp"
#include "spinpaint/sparsity.hpp"
#include "spinpaint/transforms.hpp"

namespace spinpaint {

struct RecoveryConfig {
  TransformKind kind = TransformKind::dct;
  /// 0 returns the input unchanged.
  std::size_t iterations = 500;
  /// Record the max-abs change of every iteration.
  bool residual_log = false;
  /// Stop once an iteration changes no pixel by more than early_stop_tolerance.
  bool early_stop = false;
  double early_stop_tolerance = 1e-6;
  /// Called after each iteration with its 1-based index and the iterate.
  std::function<void(std::size_t, const Image&)> observer;
};

struct RecoveryReport {
  Image output;
  std::size_t iterations_run = 0;
  std::optional<std::vector<double>> per_iteration_delta;
};

/// Projection onto the transform-sparse set: forward transform, zero the
/// pattern, inverse transform.
Image project_sparse(const Image& image, const SparsityPattern& pattern);

/// Projection onto the data-consistent set: `known` where the mask is 1,
/// `image` elsewhere.
Image project_data(const Image& image, const Image& known, const Mask& mask);

/// Alternating projections x <- project_data(project_sparse(x)) starting
/// from x = corrupted. The output therefore always equals `corrupted` on
/// known pixels. Throws DimensionError if shapes or config.kind disagree
/// with the pattern.
RecoveryReport inpaint_with_side_info(const Image& corrupted, const Mask& mask,
                                      const SparsityPattern& pattern,
                                      const RecoveryConfig& config);

}  // namespace spinpaint
