#include "spinpaint/transforms.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "spinpaint/error.hpp"

namespace spinpaint {

namespace {

enum class PlanType { dct2, dct3, dft_forward, dft_backward };

// FFTW's planner is not thread-safe but executing an existing plan on new
// arrays is, so plans are created once under a lock and shared.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(PlanType type, std::size_t rows, std::size_t cols) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_tuple(type, rows, cols);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    const int n0 = static_cast<int>(rows);
    const int n1 = static_cast<int>(cols);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = nullptr;
    if (type == PlanType::dct2 || type == PlanType::dct3) {
      std::vector<double> in(rows * cols), out(rows * cols);
      const fftw_r2r_kind k = type == PlanType::dct2 ? FFTW_REDFT10 : FFTW_REDFT01;
      plan = fftw_plan_r2r_2d(n0, n1, in.data(), out.data(), k, k, flags);
    } else {
      std::vector<std::complex<double>> in(rows * cols), out(rows * cols);
      const int sign = type == PlanType::dft_forward ? FFTW_FORWARD : FFTW_BACKWARD;
      plan = fftw_plan_dft_2d(n0, n1, reinterpret_cast<fftw_complex*>(in.data()),
                              reinterpret_cast<fftw_complex*>(out.data()), sign, flags);
    }
    if (plan == nullptr) throw Error("FFTW could not create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<PlanType, std::size_t, std::size_t>, fftw_plan> plans_;
};

PlanCache& plans() {
  static PlanCache cache;
  return cache;
}

// Per-axis factors turning FFTW's REDFT10 / REDFT01 into orthonormal
// DCT-II / DCT-III.
std::vector<double> dct2_scale(std::size_t n) {
  std::vector<double> s(n, std::sqrt(1.0 / (2.0 * static_cast<double>(n))));
  s[0] = std::sqrt(1.0 / (4.0 * static_cast<double>(n)));
  return s;
}

std::vector<double> dct3_scale(std::size_t n) {
  std::vector<double> s(n, std::sqrt(1.0 / (2.0 * static_cast<double>(n))));
  s[0] = std::sqrt(1.0 / static_cast<double>(n));
  return s;
}

void scale_separable(std::span<double> values, std::size_t rows, std::size_t cols,
                     const std::vector<double>& row_scale, const std::vector<double>& col_scale) {
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) values[r * cols + c] *= row_scale[r] * col_scale[c];
  }
}

}  // namespace

std::string_view to_string(TransformKind kind) {
  return kind == TransformKind::dct ? "dct" : "fft";
}

std::optional<TransformKind> parse_transform_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "dct") return TransformKind::dct;
  if (lower == "fft") return TransformKind::fft;
  return std::nullopt;
}

CoeffPlane CoeffPlane::dct(std::size_t rows, std::size_t cols, std::vector<double> values) {
  if (values.size() != rows * cols) throw DimensionError("DCT plane size mismatch");
  CoeffPlane plane(TransformKind::dct, rows, cols);
  plane.real_ = std::move(values);
  return plane;
}

CoeffPlane CoeffPlane::fft(std::size_t rows, std::size_t cols,
                           std::vector<std::complex<double>> values) {
  if (values.size() != rows * cols) throw DimensionError("FFT plane size mismatch");
  CoeffPlane plane(TransformKind::fft, rows, cols);
  plane.complex_ = std::move(values);
  return plane;
}

double CoeffPlane::magnitude(std::size_t i) const {
  return kind_ == TransformKind::dct ? std::abs(real_[i]) : std::abs(complex_[i]);
}

void CoeffPlane::zero(std::size_t i) {
  if (kind_ == TransformKind::dct) {
    real_[i] = 0.0;
  } else {
    complex_[i] = 0.0;
  }
}

CoeffPlane forward(const Image& image, TransformKind kind) {
  const std::size_t rows = image.rows();
  const std::size_t cols = image.cols();
  if (kind == TransformKind::dct) {
    std::vector<double> in(image.pixels().begin(), image.pixels().end());
    std::vector<double> out(in.size());
    fftw_execute_r2r(plans().get(PlanType::dct2, rows, cols), in.data(), out.data());
    scale_separable(out, rows, cols, dct2_scale(rows), dct2_scale(cols));
    return CoeffPlane::dct(rows, cols, std::move(out));
  }
  std::vector<std::complex<double>> in(image.pixels().begin(), image.pixels().end());
  std::vector<std::complex<double>> out(in.size());
  fftw_execute_dft(plans().get(PlanType::dft_forward, rows, cols),
                   reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return CoeffPlane::fft(rows, cols, std::move(out));
}

Image inverse(const CoeffPlane& coeffs) {
  const std::size_t rows = coeffs.rows();
  const std::size_t cols = coeffs.cols();
  if (coeffs.kind() == TransformKind::dct) {
    std::vector<double> in(coeffs.real_values().begin(), coeffs.real_values().end());
    scale_separable(in, rows, cols, dct3_scale(rows), dct3_scale(cols));
    std::vector<double> out(in.size());
    fftw_execute_r2r(plans().get(PlanType::dct3, rows, cols), in.data(), out.data());
    return Image(rows, cols, std::move(out));
  }
  std::vector<std::complex<double>> in(coeffs.complex_values().begin(),
                                       coeffs.complex_values().end());
  std::vector<std::complex<double>> out(in.size());
  fftw_execute_dft(plans().get(PlanType::dft_backward, rows, cols),
                   reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  const double norm = 1.0 / static_cast<double>(rows * cols);
  std::vector<double> pixels(out.size());
  double residue = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    pixels[i] = out[i].real() * norm;
    residue = std::max(residue, std::abs(out[i].imag() * norm));
  }
  if (!(residue <= kImaginaryResidueTolerance)) {
    throw SymmetryError("inverse FFT left an imaginary residue of " + std::to_string(residue));
  }
  return Image(rows, cols, std::move(pixels));
}

std::size_t conjugate_mirror(std::size_t index, std::size_t rows, std::size_t cols) {
  const std::size_t u = index / cols;
  const std::size_t v = index % cols;
  return ((rows - u) % rows) * cols + (cols - v) % cols;
}

}  // namespace spinpaint
