#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spinpaint {

/// Grayscale image stored row-major as doubles. Nominally 0..255, but
/// intermediate results of the recovery loops may leave that range; values
/// are quantized only when written to disk.
class Image {
 public:
  Image() = default;
  Image(std::size_t rows, std::size_t cols, double fill = 0.0);
  /// Throws DimensionError if `pixels.size() != rows * cols` and Error if any
  /// entry is not finite.
  Image(std::size_t rows, std::size_t cols, std::vector<double> pixels);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return pixels_.size(); }

  double& operator()(std::size_t r, std::size_t c) { return pixels_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return pixels_[r * cols_ + c]; }
  double& operator[](std::size_t i) { return pixels_[i]; }
  double operator[](std::size_t i) const { return pixels_[i]; }

  std::span<double> pixels() { return pixels_; }
  std::span<const double> pixels() const { return pixels_; }

  bool same_shape(std::size_t rows, std::size_t cols) const {
    return rows_ == rows && cols_ == cols;
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> pixels_;
};

/// Binary loss mask: 1 marks a known pixel, 0 a missing one.
class Mask {
 public:
  Mask() = default;
  Mask(std::size_t rows, std::size_t cols, bool known = true);
  /// Any nonzero entry of `bits` is normalized to 1.
  Mask(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits);

  static Mask ones(std::size_t rows, std::size_t cols) { return {rows, cols, true}; }
  static Mask zeros(std::size_t rows, std::size_t cols) { return {rows, cols, false}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return bits_.size(); }

  bool known(std::size_t i) const { return bits_[i] != 0; }
  bool known(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t i, bool known) { bits_[i] = known ? 1 : 0; }
  void set(std::size_t r, std::size_t c, bool known) { set(r * cols_ + c, known); }

  std::size_t missing_count() const;
  std::size_t known_count() const { return size() - missing_count(); }

  std::span<const std::uint8_t> bits() const { return bits_; }

  bool same_shape(std::size_t rows, std::size_t cols) const {
    return rows_ == rows && cols_ == cols;
  }

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Rounds half away from zero, then clamps to [0, 255].
std::uint8_t quantize_pixel(double value);

/// Parses a P5 (binary) or P2 (ASCII) PGM with maxval 255.
Image decode_pgm(std::string_view bytes);
/// Serializes as P5 using quantize_pixel.
std::string encode_pgm(const Image& image);

Image read_pgm(const std::filesystem::path& path);
void write_pgm(const Image& image, const std::filesystem::path& path);

/// Mask PGM convention: 0 is missing, any nonzero value is known.
Mask mask_from_image(const Image& image);
Image mask_to_image(const Mask& mask);
Mask read_mask(const std::filesystem::path& path);
void write_mask(const Mask& mask, const std::filesystem::path& path);

/// Pixel-wise product x * M: known pixels are kept, missing ones set to 0.
Image apply_mask(const Image& image, const Mask& mask);

// Throws DimensionError naming `what` if the shapes differ.
void require_same_shape(const Image& a, const Mask& b, std::string_view what);
void require_same_shape(const Image& a, const Image& b, std::string_view what);
void require_same_shape(const Mask& a, const Mask& b, std::string_view what);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace spinpaint
