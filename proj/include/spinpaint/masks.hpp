#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spinpaint/image.hpp"

namespace spinpaint {

/// xorshift64* generator used for every seeded mask.
///
/// The sequence is fixed so masks reproduce across platforms and
/// implementations:
///
///   state_0 = splitmix64(seed), replaced by 0x9E3779B97F4A7C15 if that is 0
///   state  ^= state >> 12;  state ^= state << 25;  state ^= state >> 27;
///   output  = state * 0x2545F4914F6CDD1D  (mod 2^64)
///
/// `below(n)` maps an output to [0, n) by the high 64 bits of the 128-bit
/// product output * n.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

struct BlockSpec {
  std::size_t block_size = 16;
  std::size_t count = 0;
  std::uint64_t seed = 1;
};

/// Attempts per block before placement is declared infeasible.
inline constexpr std::size_t kBlockRetryBudget = 10000;

/// `count` pairwise-disjoint square holes of side `block_size`, each fully
/// inside the image. Top-left corners are drawn as row = below(rows - b + 1)
/// then col = below(cols - b + 1); an overlapping draw is discarded and
/// redrawn. Throws PlacementError when a block cannot be placed within
/// kBlockRetryBudget draws.
Mask block_mask(std::size_t rows, std::size_t cols, const BlockSpec& spec);

/// Straight stroke between two pixel centers.
struct Segment {
  std::int64_t r0 = 0, c0 = 0;
  std::int64_t r1 = 0, c1 = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Random text-like strokes. For each stroke the start pixel is uniform over
/// the image; the end is offset by dr, dc each drawn uniformly from
/// [-L, L] with L = max(1, max(rows, cols) / 8), then clamped to the image.
std::vector<Segment> stroke_segments(std::size_t rows, std::size_t cols, std::size_t stroke_count,
                                     std::uint64_t seed);

/// Zeroes every pixel whose center lies within width/2 of the segment.
/// Evaluated in exact integer arithmetic, so no tie is ambiguous.
void rasterize_segment(Mask& mask, const Segment& segment, std::size_t width);

/// Throws Error if stroke_width is 0.
Mask stroke_mask(std::size_t rows, std::size_t cols, std::size_t stroke_count,
                 std::size_t stroke_width, std::uint64_t seed);

/// A pixel is known only if it is known in both masks.
Mask combine_masks(const Mask& a, const Mask& b);

}  // namespace spinpaint
