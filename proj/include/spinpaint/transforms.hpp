#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spinpaint/image.hpp"

namespace spinpaint {

enum class TransformKind : std::uint8_t { dct = 0, fft = 1 };

std::string_view to_string(TransformKind kind);
/// Accepts "dct" / "fft" in any case.
std::optional<TransformKind> parse_transform_kind(std::string_view text);

/// Largest imaginary residue tolerated when inverting an FFT plane.
inline constexpr double kImaginaryResidueTolerance = 1e-6;

/// Transform coefficients of an image. DCT planes hold real values, FFT
/// planes hold the full (not half) complex spectrum; both row-major.
class CoeffPlane {
 public:
  static CoeffPlane dct(std::size_t rows, std::size_t cols, std::vector<double> values);
  static CoeffPlane fft(std::size_t rows, std::size_t cols,
                        std::vector<std::complex<double>> values);

  TransformKind kind() const { return kind_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_ * cols_; }

  double magnitude(std::size_t i) const;
  void zero(std::size_t i);

  // Only the span matching kind() is non-empty.
  std::span<double> real_values() { return real_; }
  std::span<const double> real_values() const { return real_; }
  std::span<std::complex<double>> complex_values() { return complex_; }
  std::span<const std::complex<double>> complex_values() const { return complex_; }

 private:
  CoeffPlane(TransformKind kind, std::size_t rows, std::size_t cols)
      : kind_(kind), rows_(rows), cols_(cols) {}

  TransformKind kind_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> real_;
  std::vector<std::complex<double>> complex_;
};

/// DCT: separable orthonormal 2D DCT-II. FFT: unnormalized 2D DFT.
CoeffPlane forward(const Image& image, TransformKind kind);

/// DCT: orthonormal 2D DCT-III. FFT: inverse DFT scaled by 1/(rows*cols),
/// returning the real part; throws SymmetryError if any imaginary residue
/// exceeds kImaginaryResidueTolerance.
Image inverse(const CoeffPlane& coeffs);

/// Index of the conjugate partner ((-u) mod rows, (-v) mod cols).
std::size_t conjugate_mirror(std::size_t index, std::size_t rows, std::size_t cols);

}  // namespace spinpaint
