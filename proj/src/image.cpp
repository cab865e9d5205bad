#include "spinpaint/image.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "spinpaint/error.hpp"

namespace spinpaint {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("image dimensions must be positive");
  }
}

std::string shape_string(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

// Reads whitespace- and comment-separated header tokens of a netpbm file.
class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  std::size_t number(const char* field) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > (std::size_t{1} << 31)) {
        throw FormatError(std::string("PGM ") + field + " out of range");
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw FormatError(std::string("PGM: expected ") + field);
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the binary raster.
  void single_whitespace() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw FormatError("PGM: missing whitespace before raster");
    }
    ++pos_;
  }

  bool at_end() {
    skip_space_and_comments();
    return pos_ >= bytes_.size();
  }

  std::size_t position() const { return pos_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image::Image(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  if (!std::isfinite(fill)) throw Error("image pixels must be finite");
  pixels_.assign(rows * cols, fill);
}

Image::Image(std::size_t rows, std::size_t cols, std::vector<double> pixels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
  check_dims(rows, cols);
  if (pixels_.size() != rows * cols) {
    throw DimensionError("image of shape " + shape_string(rows, cols) + " given " +
                         std::to_string(pixels_.size()) + " pixels");
  }
  if (!std::all_of(pixels_.begin(), pixels_.end(), [](double v) { return std::isfinite(v); })) {
    throw Error("image pixels must be finite");
  }
}

Mask::Mask(std::size_t rows, std::size_t cols, bool known)
    : rows_(rows), cols_(cols), bits_(rows * cols, known ? 1 : 0) {
  check_dims(rows, cols);
}

Mask::Mask(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits)
    : rows_(rows), cols_(cols), bits_(std::move(bits)) {
  check_dims(rows, cols);
  if (bits_.size() != rows * cols) {
    throw DimensionError("mask of shape " + shape_string(rows, cols) + " given " +
                         std::to_string(bits_.size()) + " entries");
  }
  for (auto& b : bits_) b = b != 0 ? 1 : 0;
}

std::size_t Mask::missing_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{0}));
}

std::uint8_t quantize_pixel(double value) {
  const double rounded = std::round(value);  // half away from zero
  return static_cast<std::uint8_t>(std::clamp(rounded, 0.0, 255.0));
}

Image decode_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
    throw FormatError("PGM: expected P5 or P2 magic");
  }
  const bool binary = bytes[1] == '5';
  HeaderReader header(bytes.substr(2));
  const std::size_t cols = header.number("width");
  const std::size_t rows = header.number("height");
  const std::size_t maxval = header.number("maxval");
  if (rows == 0 || cols == 0) throw FormatError("PGM: zero dimension");
  if (maxval != 255) {
    throw FormatError("PGM: maxval " + std::to_string(maxval) + " unsupported (need 255)");
  }

  std::vector<double> pixels(rows * cols);
  if (binary) {
    header.single_whitespace();
    const std::size_t offset = 2 + header.position();
    if (bytes.size() - offset < pixels.size()) {
      throw FormatError("PGM: raster truncated");
    }
    for (std::size_t i = 0; i < pixels.size(); ++i) {
      pixels[i] = static_cast<unsigned char>(bytes[offset + i]);
    }
  } else {
    for (auto& p : pixels) {
      const std::size_t v = header.number("pixel value");
      if (v > 255) throw FormatError("PGM: pixel value exceeds maxval");
      p = static_cast<double>(v);
    }
  }
  return Image(rows, cols, std::move(pixels));
}

std::string encode_pgm(const Image& image) {
  std::string out = "P5\n" + std::to_string(image.cols()) + " " + std::to_string(image.rows()) +
                    "\n255\n";
  const std::size_t header = out.size();
  out.resize(header + image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    out[header + i] = static_cast<char>(quantize_pixel(image[i]));
  }
  return out;
}

Image read_pgm(const std::filesystem::path& path) {
  try {
    return decode_pgm(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_pgm(const Image& image, const std::filesystem::path& path) {
  write_file(path, encode_pgm(image));
}

Mask mask_from_image(const Image& image) {
  std::vector<std::uint8_t> bits(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) bits[i] = image[i] != 0.0 ? 1 : 0;
  return Mask(image.rows(), image.cols(), std::move(bits));
}

Image mask_to_image(const Mask& mask) {
  Image out(mask.rows(), mask.cols());
  for (std::size_t i = 0; i < mask.size(); ++i) out[i] = mask.known(i) ? 255.0 : 0.0;
  return out;
}

Mask read_mask(const std::filesystem::path& path) { return mask_from_image(read_pgm(path)); }

void write_mask(const Mask& mask, const std::filesystem::path& path) {
  write_pgm(mask_to_image(mask), path);
}

Image apply_mask(const Image& image, const Mask& mask) {
  require_same_shape(image, mask, "apply_mask");
  Image out = image;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!mask.known(i)) out[i] = 0.0;
  }
  return out;
}

void require_same_shape(const Image& a, const Mask& b, std::string_view what) {
  if (!a.same_shape(b.rows(), b.cols())) {
    throw DimensionError(std::string(what) + ": image " + shape_string(a.rows(), a.cols()) +
                         " vs mask " + shape_string(b.rows(), b.cols()));
  }
}

void require_same_shape(const Image& a, const Image& b, std::string_view what) {
  if (!a.same_shape(b.rows(), b.cols())) {
    throw DimensionError(std::string(what) + ": image " + shape_string(a.rows(), a.cols()) +
                         " vs image " + shape_string(b.rows(), b.cols()));
  }
}

void require_same_shape(const Mask& a, const Mask& b, std::string_view what) {
  if (!a.same_shape(b.rows(), b.cols())) {
    throw DimensionError(std::string(what) + ": mask " + shape_string(a.rows(), a.cols()) +
                         " vs mask " + shape_string(b.rows(), b.cols()));
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw FormatError("read failed: " + path.string());
  return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot create " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw FormatError("write failed: " + path.string());
}

}  // namespace spinpaint
