#include "spinpaint/tvrecon.hpp"

#include <algorithm>
#include <string>

#include "spinpaint/error.hpp"

namespace spinpaint {

namespace {

// One pass of the cross window with edge replication.
Image lowpass_once(const Image& in) {
  const std::size_t rows = in.rows();
  const std::size_t cols = in.cols();
  Image out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t up = r == 0 ? 0 : r - 1;
    const std::size_t down = r + 1 == rows ? r : r + 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t left = c == 0 ? 0 : c - 1;
      const std::size_t right = c + 1 == cols ? c : c + 1;
      const double sum = in(up, c) + in(r, left) + in(r, c) + in(r, right) + in(down, c);
      out(r, c) = sum / kLowpassDivisor;
    }
  }
  return out;
}

Image mask_as_image(const Mask& mask) {
  Image out(mask.rows(), mask.cols());
  for (std::size_t i = 0; i < mask.size(); ++i) out[i] = mask.known(i) ? 1.0 : 0.0;
  return out;
}

bool fully_supported(const Image& smoothed_mask) {
  const auto px = smoothed_mask.pixels();
  return std::all_of(px.begin(), px.end(), [](double v) { return v > kSupportEpsilon; });
}

}  // namespace

Image lowpass(const Image& image, std::size_t passes) {
  Image out = image;
  for (std::size_t p = 0; p < passes; ++p) out = lowpass_once(out);
  return out;
}

std::size_t support_passes(const Mask& mask) {
  const std::size_t cap = std::max(mask.rows(), mask.cols());
  Image smoothed = mask_as_image(mask);
  for (std::size_t p = 1; p <= cap; ++p) {
    smoothed = lowpass_once(smoothed);
    if (fully_supported(smoothed)) return p;
  }
  throw SupportError("low-passed mask still vanishes somewhere after " + std::to_string(cap) +
                     " passes (" + std::to_string(mask.known_count()) + " known pixels)");
}

Image tv_reconstruct(const Image& corrupted, const Mask& mask) {
  require_same_shape(corrupted, mask, "tv_reconstruct");
  const std::size_t passes = support_passes(mask);
  const Image numerator = lowpass(apply_mask(corrupted, mask), passes);
  const Image denominator = lowpass(mask_as_image(mask), passes);
  Image out(corrupted.rows(), corrupted.cols());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = mask.known(i) ? corrupted[i] : numerator[i] / denominator[i];
  }
  return out;
}

}  // namespace spinpaint
