#include "spinpaint/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "spinpaint/error.hpp"

namespace spinpaint {

double psnr(const Image& a, const Image& b) {
  require_same_shape(a, b, "psnr");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  if (sum == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sum / static_cast<double>(a.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

std::string format_decibels(double db) {
  if (std::isinf(db) && db > 0) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", db);
  return buf;
}

PatternError pattern_error(const SparsityPattern& estimated, const SparsityPattern& reference) {
  if (estimated.rows() != reference.rows() || estimated.cols() != reference.cols() ||
      estimated.kind() != reference.kind()) {
    throw DimensionError("pattern_error: patterns differ in shape or kind");
  }
  std::size_t missed = 0;
  std::size_t false_alarms = 0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (reference.contains(i) && !estimated.contains(i)) ++missed;
    if (estimated.contains(i) && !reference.contains(i)) ++false_alarms;
  }
  const double n = static_cast<double>(reference.size());
  return {100.0 * static_cast<double>(missed) / n, 100.0 * static_cast<double>(false_alarms) / n};
}

}  // namespace spinpaint
