#pragma once

#include <string>

#include "spinpaint/image.hpp"
#include "spinpaint/sparsity.hpp"

namespace spinpaint {

/// 10 log10(255^2 / MSE) over every pixel; +infinity when the images match.
double psnr(const Image& a, const Image& b);

/// Two fraction digits, or "inf".
std::string format_decibels(double db);

struct PatternError {
  double miss_detection_pct = 0.0;  // truly sparse, not detected
  double false_alarm_pct = 0.0;     // detected, not truly sparse
};

/// Both percentages are relative to the total coefficient count rows*cols.
PatternError pattern_error(const SparsityPattern& estimated, const SparsityPattern& reference);

}  // namespace spinpaint
