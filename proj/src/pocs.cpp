#include "spinpaint/pocs.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinpaint/error.hpp"

namespace spinpaint {

namespace {

double max_abs_change(const Image& a, const Image& b) {
  double change = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) change = std::max(change, std::abs(a[i] - b[i]));
  return change;
}

}  // namespace

Image project_sparse(const Image& image, const SparsityPattern& pattern) {
  if (!image.same_shape(pattern.rows(), pattern.cols())) {
    throw DimensionError("project_sparse: image and pattern dimensions differ");
  }
  return inverse(apply_sparsity(forward(image, pattern.kind()), pattern));
}

Image project_data(const Image& image, const Image& known, const Mask& mask) {
  require_same_shape(image, known, "project_data");
  require_same_shape(image, mask, "project_data");
  Image out = image;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (mask.known(i)) out[i] = known[i];
  }
  return out;
}

RecoveryReport inpaint_with_side_info(const Image& corrupted, const Mask& mask,
                                      const SparsityPattern& pattern,
                                      const RecoveryConfig& config) {
  require_same_shape(corrupted, mask, "inpaint_with_side_info");
  if (!corrupted.same_shape(pattern.rows(), pattern.cols())) {
    throw DimensionError("inpaint_with_side_info: image and pattern dimensions differ");
  }
  if (config.kind != pattern.kind()) {
    throw DimensionError("inpaint_with_side_info: config kind " +
                         std::string(to_string(config.kind)) + " but pattern kind " +
                         std::string(to_string(pattern.kind())));
  }

  RecoveryReport report{corrupted, 0, std::nullopt};
  if (config.residual_log) report.per_iteration_delta.emplace();

  Image& x = report.output;
  for (std::size_t k = 1; k <= config.iterations; ++k) {
    Image next = project_data(project_sparse(x, pattern), corrupted, mask);
    const bool need_delta = config.residual_log || config.early_stop;
    const double delta = need_delta ? max_abs_change(next, x) : 0.0;
    x = std::move(next);
    report.iterations_run = k;
    if (config.residual_log) report.per_iteration_delta->push_back(delta);
    if (config.observer) config.observer(k, x);
    if (config.early_stop && delta < config.early_stop_tolerance) break;
  }
  return report;
}

}  // namespace spinpaint
