#include "spinpaint/sparsity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinpaint/error.hpp"

namespace spinpaint {

namespace {

constexpr std::uint8_t kMagic[4] = {'S', 'P', 'I', 'N'};

struct Candidate {
  double magnitude;
  std::size_t tie_index;  // larger index is zeroed first among equal magnitudes
  std::size_t first;
  std::size_t second;  // == first for singletons and self-mirrored orbits
};

void put_be(std::vector<std::uint8_t>& out, std::uint64_t value, int bytes) {
  for (int b = bytes - 1; b >= 0; --b) out.push_back(static_cast<std::uint8_t>(value >> (8 * b)));
}

std::uint64_t get_be(std::span<const std::uint8_t> bytes, std::size_t offset, int width) {
  std::uint64_t value = 0;
  for (int b = 0; b < width; ++b) value = (value << 8) | bytes[offset + static_cast<std::size_t>(b)];
  return value;
}

}  // namespace

SparsityPattern::SparsityPattern(std::size_t rows, std::size_t cols, TransformKind kind)
    : rows_(rows), cols_(cols), kind_(kind), zero_set_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw DimensionError("pattern dimensions must be positive");
}

SparsityPattern::SparsityPattern(std::size_t rows, std::size_t cols, TransformKind kind,
                                 std::vector<std::uint8_t> zero_set)
    : rows_(rows), cols_(cols), kind_(kind), zero_set_(std::move(zero_set)) {
  if (rows == 0 || cols == 0) throw DimensionError("pattern dimensions must be positive");
  if (zero_set_.size() != rows * cols) throw DimensionError("pattern bitset size mismatch");
  for (auto& z : zero_set_) {
    z = z != 0 ? 1 : 0;
    zero_count_ += z;
  }
  if (kind_ == TransformKind::fft) {
    for (std::size_t i = 0; i < zero_set_.size(); ++i) {
      if (zero_set_[i] != zero_set_[conjugate_mirror(i, rows_, cols_)]) {
        throw SymmetryError("FFT pattern is not closed under the conjugate mirror at index " +
                            std::to_string(i));
      }
    }
  }
}

double SparsityPattern::fraction() const {
  return static_cast<double>(zero_count_) / static_cast<double>(size());
}

std::size_t target_zero_count(double fraction, std::size_t n) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw Error("sparsity fraction must lie in [0, 1], got " + std::to_string(fraction));
  }
  const double exact = fraction * static_cast<double>(n);
  double k = std::floor(exact);
  if (exact - k > 1.0 - 1e-9) k += 1.0;
  return std::min(n, static_cast<std::size_t>(k));
}

SparsityPattern derive_pattern(const CoeffPlane& coeffs, double fraction) {
  const std::size_t n = coeffs.size();
  const std::size_t target = target_zero_count(fraction, n);
  const std::size_t rows = coeffs.rows();
  const std::size_t cols = coeffs.cols();

  std::vector<Candidate> candidates;
  candidates.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs.kind() == TransformKind::dct) {
      candidates.push_back({coeffs.magnitude(i), i, i, i});
      continue;
    }
    const std::size_t j = conjugate_mirror(i, rows, cols);
    if (j < i) continue;  // orbit already listed from its smaller member
    candidates.push_back({std::max(coeffs.magnitude(i), coeffs.magnitude(j)), j, i, j});
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.magnitude != b.magnitude) return a.magnitude < b.magnitude;
    return a.tie_index > b.tie_index;
  });

  std::vector<std::uint8_t> zero_set(n, 0);
  std::size_t taken = 0;
  for (const auto& c : candidates) {
    const std::size_t members = c.first == c.second ? 1 : 2;
    if (taken + members > target) break;
    zero_set[c.first] = 1;
    zero_set[c.second] = 1;
    taken += members;
  }
  return SparsityPattern(rows, cols, coeffs.kind(), std::move(zero_set));
}

void require_compatible(const CoeffPlane& coeffs, const SparsityPattern& pattern) {
  if (coeffs.rows() != pattern.rows() || coeffs.cols() != pattern.cols()) {
    throw DimensionError("coefficient plane and pattern dimensions differ");
  }
  if (coeffs.kind() != pattern.kind()) {
    throw DimensionError("coefficient plane is " + std::string(to_string(coeffs.kind())) +
                         " but pattern is " + std::string(to_string(pattern.kind())));
  }
}

CoeffPlane apply_sparsity(CoeffPlane coeffs, const SparsityPattern& pattern) {
  require_compatible(coeffs, pattern);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (pattern.contains(i)) coeffs.zero(i);
  }
  return coeffs;
}

SparseImage sparsify(const Image& image, TransformKind kind, double fraction) {
  CoeffPlane coeffs = forward(image, kind);
  SparsityPattern pattern = derive_pattern(coeffs, fraction);
  Image sparse = inverse(apply_sparsity(std::move(coeffs), pattern));
  return {std::move(sparse), std::move(pattern)};
}

std::vector<std::uint8_t> encode_pattern(const SparsityPattern& pattern) {
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.reserve(kSpinHeaderSize + (pattern.size() + 7) / 8);
  out.push_back(kSpinVersion);
  out.push_back(static_cast<std::uint8_t>(pattern.kind()));
  put_be(out, pattern.rows(), 4);
  put_be(out, pattern.cols(), 4);
  put_be(out, pattern.zero_count(), 8);
  std::uint8_t current = 0;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern.contains(i)) current |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    if (i % 8 == 7) {
      out.push_back(current);
      current = 0;
    }
  }
  if (pattern.size() % 8 != 0) out.push_back(current);
  return out;
}

SparsityPattern decode_pattern(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kSpinHeaderSize) throw FormatError("spin: truncated header");
  if (!std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    throw FormatError("spin: bad magic");
  }
  if (bytes[4] != kSpinVersion) {
    throw FormatError("spin: unsupported version " + std::to_string(bytes[4]));
  }
  if (bytes[5] > 1) throw FormatError("spin: unknown transform kind " + std::to_string(bytes[5]));
  const auto kind = static_cast<TransformKind>(bytes[5]);
  const std::uint64_t rows = get_be(bytes, 6, 4);
  const std::uint64_t cols = get_be(bytes, 10, 4);
  const std::uint64_t count = get_be(bytes, 14, 8);
  if (rows == 0 || cols == 0) throw FormatError("spin: zero dimension");

  const std::uint64_t n = rows * cols;  // both < 2^32, cannot overflow
  const std::uint64_t payload = (n + 7) / 8;
  const std::uint64_t available = bytes.size() - kSpinHeaderSize;
  if (available < payload) throw FormatError("spin: truncated bitset");
  if (available > payload) throw FormatError("spin: trailing bytes after bitset");
  if (count > n) throw FormatError("spin: zero count exceeds coefficient count");

  std::vector<std::uint8_t> zero_set(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    zero_set[i] = (bytes[kSpinHeaderSize + i / 8] >> (7 - i % 8)) & 1u;
  }
  if (n % 8 != 0) {
    const std::uint8_t tail = bytes.back();
    const auto pad_mask = static_cast<std::uint8_t>((1u << (8 - n % 8)) - 1);
    if ((tail & pad_mask) != 0) throw FormatError("spin: nonzero padding bits");
  }
  SparsityPattern pattern(rows, cols, kind, std::move(zero_set));
  if (pattern.zero_count() != count) {
    throw FormatError("spin: header count " + std::to_string(count) + " but bitset holds " +
                      std::to_string(pattern.zero_count()));
  }
  return pattern;
}

SparsityPattern read_pattern(const std::filesystem::path& path) {
  const std::string raw = read_file(path);
  try {
    return decode_pattern(std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
  } catch (const Error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_pattern(const SparsityPattern& pattern, const std::filesystem::path& path) {
  const auto bytes = encode_pattern(pattern);
  write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

}  // namespace spinpaint
