#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinpaint/image.hpp"
#include "spinpaint/masks.hpp"
#include "spinpaint/transforms.hpp"

namespace spinpaint::cli {

enum class Command { sparsify, corrupt, inpaint, inpaint_blind, tv, psnr, pattern_diff, bench };

// Bad command line. The message names the offending flag or argument.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --help was given; what() is the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchCell {
  std::filesystem::path image;
  TransformKind kind = TransformKind::dct;
  double fraction = 0.95;
};

struct CommandPlan {
  Command command = Command::sparsify;

  std::vector<std::filesystem::path> inputs;
  std::filesystem::path output;      // -o
  std::filesystem::path side;        // sparsify: .spin to write
  std::filesystem::path mask_out;    // corrupt: mask PGM to write
  std::filesystem::path mask_in;     // corrupt: optional mask PGM to start from
  std::filesystem::path side_out;    // inpaint-blind: estimated pattern
  std::filesystem::path delta_log;   // inpaint: per-iteration change CSV

  TransformKind kind = TransformKind::dct;
  double fraction = 0.95;
  std::size_t iterations = 500;
  bool early_stop = false;

  std::size_t blocks = 0;
  std::size_t block_size = 16;
  std::size_t strokes = 0;
  std::size_t stroke_width = 2;
  std::uint64_t seed = 1;

  std::vector<BenchCell> cells;
  std::size_t jobs = 1;
};

/// `args` excludes the program name. Throws UsageError or HelpRequested.
CommandPlan parse_args(const std::vector<std::string>& args);

/// Executes the plan. Returns 0 on success; on failure prints a diagnostic
/// to `err`, removes any output files this run created and returns 1.
int run(const CommandPlan& plan, std::ostream& out, std::ostream& err);

inline constexpr const char* kBenchHeader =
    "image,kind,fraction,iterations,psnr_vs_original,psnr_vs_sparse,seed";

struct BenchRow {
  std::string image;
  TransformKind kind = TransformKind::dct;
  double fraction = 0.0;
  std::size_t iterations = 0;
  double psnr_vs_original = 0.0;
  double psnr_vs_sparse = 0.0;
  std::uint64_t seed = 0;
};

/// One grid cell: sparsify the original, knock out seeded blocks,
/// recover with the true pattern, and score against original and sparse.
BenchRow bench_cell(const Image& original, const std::string& label, TransformKind kind,
                    double fraction, std::size_t iterations, const BlockSpec& blocks);

std::string format_bench_row(const BenchRow& row);

}  // namespace spinpaint::cli
