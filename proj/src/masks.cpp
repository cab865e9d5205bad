#include "spinpaint/masks.hpp"

#include <algorithm>

#include "spinpaint/error.hpp"

namespace spinpaint {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

bool region_is_known(const Mask& mask, std::size_t top, std::size_t left, std::size_t size) {
  for (std::size_t r = top; r < top + size; ++r) {
    for (std::size_t c = left; c < left + size; ++c) {
      if (!mask.known(r, c)) return false;
    }
  }
  return true;
}

}  // namespace

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::below(std::uint64_t n) {
  // High 64 bits of the 128-bit product, from 32-bit halves.
  const std::uint64_t x = next();
  const std::uint64_t x_lo = x & 0xFFFFFFFFu, x_hi = x >> 32;
  const std::uint64_t n_lo = n & 0xFFFFFFFFu, n_hi = n >> 32;
  const std::uint64_t lo_lo = x_lo * n_lo;
  const std::uint64_t hi_lo = x_hi * n_lo;
  const std::uint64_t lo_hi = x_lo * n_hi;
  const std::uint64_t hi_hi = x_hi * n_hi;
  const std::uint64_t cross = (lo_lo >> 32) + (hi_lo & 0xFFFFFFFFu) + lo_hi;
  return hi_hi + (hi_lo >> 32) + (cross >> 32);
}

Mask block_mask(std::size_t rows, std::size_t cols, const BlockSpec& spec) {
  Mask mask = Mask::ones(rows, cols);
  if (spec.count == 0) return mask;
  if (spec.block_size == 0 || spec.block_size > std::min(rows, cols)) {
    throw PlacementError("block size " + std::to_string(spec.block_size) +
                         " does not fit a " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " image");
  }
  Xorshift64Star rng(spec.seed);
  const std::size_t b = spec.block_size;
  for (std::size_t placed = 0; placed < spec.count; ++placed) {
    bool done = false;
    for (std::size_t attempt = 0; attempt < kBlockRetryBudget && !done; ++attempt) {
      const auto top = static_cast<std::size_t>(rng.below(rows - b + 1));
      const auto left = static_cast<std::size_t>(rng.below(cols - b + 1));
      if (!region_is_known(mask, top, left, b)) continue;
      for (std::size_t r = top; r < top + b; ++r) {
        for (std::size_t c = left; c < left + b; ++c) mask.set(r, c, false);
      }
      done = true;
    }
    if (!done) {
      throw PlacementError("could not place block " + std::to_string(placed + 1) + " of " +
                           std::to_string(spec.count) + " without overlap");
    }
  }
  return mask;
}

std::vector<Segment> stroke_segments(std::size_t rows, std::size_t cols, std::size_t stroke_count,
                                     std::uint64_t seed) {
  Xorshift64Star rng(seed);
  const auto reach = static_cast<std::int64_t>(std::max<std::size_t>(1, std::max(rows, cols) / 8));
  const auto span = static_cast<std::uint64_t>(2 * reach + 1);
  std::vector<Segment> segments;
  segments.reserve(stroke_count);
  for (std::size_t i = 0; i < stroke_count; ++i) {
    Segment s;
    s.r0 = static_cast<std::int64_t>(rng.below(rows));
    s.c0 = static_cast<std::int64_t>(rng.below(cols));
    const auto dr = static_cast<std::int64_t>(rng.below(span)) - reach;
    const auto dc = static_cast<std::int64_t>(rng.below(span)) - reach;
    s.r1 = std::clamp<std::int64_t>(s.r0 + dr, 0, static_cast<std::int64_t>(rows) - 1);
    s.c1 = std::clamp<std::int64_t>(s.c0 + dc, 0, static_cast<std::int64_t>(cols) - 1);
    segments.push_back(s);
  }
  return segments;
}

void rasterize_segment(Mask& mask, const Segment& s, std::size_t width) {
  const auto w = static_cast<std::int64_t>(width);
  // Pixels farther than ceil(w/2) from both endpoints' bounding box cannot hit.
  const std::int64_t pad = (w + 1) / 2;
  const auto max_r = static_cast<std::int64_t>(mask.rows()) - 1;
  const auto max_c = static_cast<std::int64_t>(mask.cols()) - 1;
  const std::int64_t r_lo = std::max<std::int64_t>(0, std::min(s.r0, s.r1) - pad);
  const std::int64_t r_hi = std::min(max_r, std::max(s.r0, s.r1) + pad);
  const std::int64_t c_lo = std::max<std::int64_t>(0, std::min(s.c0, s.c1) - pad);
  const std::int64_t c_hi = std::min(max_c, std::max(s.c0, s.c1) + pad);

  const std::int64_t dr = s.r1 - s.r0;
  const std::int64_t dc = s.c1 - s.c0;
  const std::int64_t len2 = dr * dr + dc * dc;

  for (std::int64_t r = r_lo; r <= r_hi; ++r) {
    for (std::int64_t c = c_lo; c <= c_hi; ++c) {
      const std::int64_t pr = r - s.r0;
      const std::int64_t pc = c - s.c0;
      const std::int64_t t = pr * dr + pc * dc;
      bool inside;
      if (len2 == 0 || t <= 0) {
        inside = 4 * (pr * pr + pc * pc) <= w * w;
      } else if (t >= len2) {
        const std::int64_t qr = r - s.r1;
        const std::int64_t qc = c - s.c1;
        inside = 4 * (qr * qr + qc * qc) <= w * w;
      } else {
        // Distance to the closest interior point: |p|^2 - t^2 / len2.
        inside = 4 * ((pr * pr + pc * pc) * len2 - t * t) <= w * w * len2;
      }
      if (inside) mask.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), false);
    }
  }
}

Mask stroke_mask(std::size_t rows, std::size_t cols, std::size_t stroke_count,
                 std::size_t stroke_width, std::uint64_t seed) {
  if (stroke_width == 0) throw Error("stroke width must be at least 1");
  Mask mask = Mask::ones(rows, cols);
  for (const auto& s : stroke_segments(rows, cols, stroke_count, seed)) {
    rasterize_segment(mask, s, stroke_width);
  }
  return mask;
}

Mask combine_masks(const Mask& a, const Mask& b) {
  require_same_shape(a, b, "combine_masks");
  std::vector<std::uint8_t> bits(a.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = a.known(i) && b.known(i) ? 1 : 0;
  return Mask(a.rows(), a.cols(), std::move(bits));
}

}  // namespace spinpaint
