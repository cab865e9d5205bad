#include "spinpaint/blind.hpp"

#include "spinpaint/error.hpp"
#include "spinpaint/tvrecon.hpp"

namespace spinpaint {

namespace {

SparsityPattern pattern_of(const Image& reconstructed, TransformKind kind, double fraction) {
  return derive_pattern(forward(reconstructed, kind), fraction);
}

}  // namespace

SparsityPattern estimate_pattern(const Image& corrupted, const Mask& mask, TransformKind kind,
                                 double fraction) {
  return pattern_of(tv_reconstruct(corrupted, mask), kind, fraction);
}

RecoveryReport inpaint_blind(const Image& corrupted, const Mask& mask, const BlindConfig& config) {
  if (config.iterations == 0) throw Error("inpaint_blind: iterations must be at least 1");
  const Image received = apply_mask(corrupted, mask);

  const Image reconstructed = tv_reconstruct(received, mask);
  const SparsityPattern pattern = pattern_of(reconstructed, config.kind, config.fraction);

  const Image degraded_sparse = apply_mask(project_sparse(reconstructed, pattern), mask);

  RecoveryConfig recovery;
  recovery.kind = config.kind;
  recovery.iterations = config.iterations;
  RecoveryReport report = inpaint_with_side_info(degraded_sparse, mask, pattern, recovery);

  report.output = project_data(report.output, corrupted, mask);
  return report;
}

}  // namespace spinpaint
