#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "spinpaint/image.hpp"
#include "spinpaint/transforms.hpp"

namespace spinpaint {

/// The set of transform indices forced to zero, i.e. the side information.
///
/// FFT patterns are always closed under conjugate_mirror so that a sparsified
/// spectrum still inverts to a real image.
class SparsityPattern {
 public:
  /// Empty pattern.
  SparsityPattern(std::size_t rows, std::size_t cols, TransformKind kind);
  /// `zero_set[i] != 0` marks index i as zeroed. Throws DimensionError on a
  /// size mismatch and SymmetryError if an FFT set is not mirror-closed.
  SparsityPattern(std::size_t rows, std::size_t cols, TransformKind kind,
                  std::vector<std::uint8_t> zero_set);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_ * cols_; }
  TransformKind kind() const { return kind_; }

  bool contains(std::size_t i) const { return zero_set_[i] != 0; }
  std::size_t zero_count() const { return zero_count_; }
  /// Realized sparsity: zero_count / (rows * cols).
  double fraction() const;

  std::span<const std::uint8_t> zero_set() const { return zero_set_; }

  friend bool operator==(const SparsityPattern&, const SparsityPattern&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  TransformKind kind_;
  std::vector<std::uint8_t> zero_set_;
  std::size_t zero_count_ = 0;
};

/// floor(fraction * n), tolerant of representation error such as
/// 0.29 * 100 evaluating to 28.999999999999996.
std::size_t target_zero_count(double fraction, std::size_t n);

/// Zeroes the K = target_zero_count(fraction, N) smallest-magnitude
/// coefficients. Ties go to the larger row-major index first.
///
/// For FFT planes the selection runs over conjugate orbits {i, mirror(i)},
/// ranked by the larger member magnitude and, on ties, the larger member
/// index. Orbits are taken whole in rank order until the next one would
/// overshoot K, so the realized count is K or K - 1.
SparsityPattern derive_pattern(const CoeffPlane& coeffs, double fraction);

/// Zero on the pattern, unchanged elsewhere.
CoeffPlane apply_sparsity(CoeffPlane coeffs, const SparsityPattern& pattern);

struct SparseImage {
  Image image;
  SparsityPattern pattern;
};

/// inverse(apply_sparsity(forward(image), pattern)) with the pattern derived
/// from the image's own spectrum.
SparseImage sparsify(const Image& image, TransformKind kind, double fraction);

/// .spin side-information layout (all integers big-endian):
///
///   offset  size  field
///   0       4     magic "SPIN"
///   4       1     version (0x01)
///   5       1     kind (0 = DCT, 1 = FFT)
///   6       4     rows (u32)
///   10      4     cols (u32)
///   14      8     zero count (u64)
///   22      ...   zero set, row-major, MSB-first, zero-padded to a byte
inline constexpr std::uint8_t kSpinVersion = 0x01;
inline constexpr std::size_t kSpinHeaderSize = 22;

std::vector<std::uint8_t> encode_pattern(const SparsityPattern& pattern);
/// Throws FormatError on bad magic, version or kind, zero dimensions,
/// truncation, trailing bytes, nonzero padding bits or a count that
/// disagrees with the bitset; SymmetryError on an unclosed FFT set.
SparsityPattern decode_pattern(std::span<const std::uint8_t> bytes);

SparsityPattern read_pattern(const std::filesystem::path& path);
void write_pattern(const SparsityPattern& pattern, const std::filesystem::path& path);

void require_compatible(const CoeffPlane& coeffs, const SparsityPattern& pattern);

}  // namespace spinpaint
