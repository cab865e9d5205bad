#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <deque>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "spinpaint/spinpaint.hpp"

namespace spinpaint::cli {

namespace {

constexpr auto kMaxCount = std::numeric_limits<std::size_t>::max();

// Removes every registered output unless commit() is reached.
class OutputGuard {
 public:
  OutputGuard() = default;
  OutputGuard(const OutputGuard&) = delete;
  OutputGuard& operator=(const OutputGuard&) = delete;
  ~OutputGuard() {
    if (committed_) return;
    for (const auto& p : paths_) {
      std::error_code ignored;
      std::filesystem::remove(p, ignored);
    }
  }

  const std::filesystem::path& add(const std::filesystem::path& p) {
    paths_.push_back(p);
    return p;
  }
  void commit() { committed_ = true; }

 private:
  std::vector<std::filesystem::path> paths_;
  bool committed_ = false;
};

TransformKind kind_from(const std::string& text) {
  // The option validator has already restricted text to dct/fft.
  return *parse_transform_kind(text);
}

std::string format_fraction(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", f);
  return buf;
}

void add_kind(CLI::App* cmd, std::string& kind_text) {
  cmd->add_option("--kind", kind_text, "Transform domain: dct or fft")
      ->check(CLI::IsMember({"dct", "fft"}, CLI::ignore_case))
      ->capture_default_str();
}

void add_fraction(CLI::App* cmd, double& fraction) {
  cmd->add_option("--fraction", fraction, "Fraction of coefficients forced to zero")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
}

void add_iterations(CLI::App* cmd, std::size_t& iterations) {
  cmd->add_option("--iterations", iterations, "Alternating-projection rounds (>= 1)")
      ->check(CLI::Range(std::size_t{1}, kMaxCount))
      ->capture_default_str();
}

void add_output(CLI::App* cmd, std::filesystem::path& output, bool required) {
  auto* opt = cmd->add_option("-o,--output", output, "Output file");
  if (required) opt->required();
}

// Each subcommand binds its own slots, so no vector is resized after binding.
struct Positionals {
  CLI::App* cmd;
  std::vector<std::filesystem::path> slots;
};

void add_inputs(Positionals& p, std::initializer_list<const char*> names) {
  p.slots.resize(names.size());
  std::size_t i = 0;
  for (const char* name : names) p.cmd->add_option(name, p.slots[i++], name)->required();
}

std::vector<std::filesystem::path> referenced_inputs(const CommandPlan& plan) {
  std::vector<std::filesystem::path> inputs = plan.inputs;
  if (!plan.mask_in.empty()) inputs.push_back(plan.mask_in);
  for (const auto& cell : plan.cells) inputs.push_back(cell.image);
  return inputs;
}

void write_bench(const CommandPlan& plan, std::ostream& csv) {
  std::map<std::filesystem::path, Image> images;
  for (const auto& cell : plan.cells) {
    if (!images.contains(cell.image)) images.emplace(cell.image, read_pgm(cell.image));
  }
  const BlockSpec blocks{plan.block_size, plan.blocks, plan.seed};

  std::vector<BenchRow> rows(plan.cells.size());
  std::vector<std::exception_ptr> failures(plan.cells.size());
  auto work = [&](std::size_t worker) {
    for (std::size_t i = worker; i < plan.cells.size(); i += plan.jobs) {
      const auto& cell = plan.cells[i];
      try {
        rows[i] = bench_cell(images.at(cell.image), cell.image.string(), cell.kind,
                             cell.fraction, plan.iterations, blocks);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 1; w < plan.jobs; ++w) workers.emplace_back(work, w);
    work(0);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  csv << kBenchHeader << '\n';
  for (const auto& row : rows) csv << format_bench_row(row) << '\n';
}

void write_delta_log(const std::vector<double>& deltas, const std::filesystem::path& path) {
  std::ostringstream csv;
  csv << "iteration,max_abs_change\n";
  csv.precision(17);
  for (std::size_t i = 0; i < deltas.size(); ++i) csv << i + 1 << ',' << deltas[i] << '\n';
  write_file(path, csv.str());
}

void execute(const CommandPlan& plan, std::ostream& out, OutputGuard& guard) {
  switch (plan.command) {
    case Command::sparsify: {
      const auto result = sparsify(read_pgm(plan.inputs[0]), plan.kind, plan.fraction);
      write_pgm(result.image, guard.add(plan.output));
      write_pattern(result.pattern, guard.add(plan.side));
      break;
    }
    case Command::corrupt: {
      const Image image = read_pgm(plan.inputs[0]);
      Mask mask = plan.mask_in.empty() ? Mask::ones(image.rows(), image.cols())
                                       : read_mask(plan.mask_in);
      require_same_shape(image, mask, "corrupt");
      if (plan.blocks > 0) {
        mask = combine_masks(
            mask, block_mask(image.rows(), image.cols(),
                             {plan.block_size, plan.blocks, plan.seed}));
      }
      if (plan.strokes > 0) {
        mask = combine_masks(mask, stroke_mask(image.rows(), image.cols(), plan.strokes,
                                               plan.stroke_width, plan.seed + 1));
      }
      write_pgm(apply_mask(image, mask), guard.add(plan.output));
      write_mask(mask, guard.add(plan.mask_out));
      break;
    }
    case Command::inpaint: {
      const Image received = read_pgm(plan.inputs[0]);
      const Mask mask = read_mask(plan.inputs[1]);
      const SparsityPattern pattern = read_pattern(plan.inputs[2]);
      RecoveryConfig config;
      config.kind = pattern.kind();
      config.iterations = plan.iterations;
      config.early_stop = plan.early_stop;
      config.residual_log = !plan.delta_log.empty();
      const auto report =
          inpaint_with_side_info(apply_mask(received, mask), mask, pattern, config);
      write_pgm(report.output, guard.add(plan.output));
      if (config.residual_log) {
        write_delta_log(*report.per_iteration_delta, guard.add(plan.delta_log));
      }
      break;
    }
    case Command::inpaint_blind: {
      const Image received = read_pgm(plan.inputs[0]);
      const Mask mask = read_mask(plan.inputs[1]);
      const BlindConfig config{plan.kind, plan.fraction, plan.iterations};
      const auto report = inpaint_blind(received, mask, config);
      write_pgm(report.output, guard.add(plan.output));
      if (!plan.side_out.empty()) {
        write_pattern(estimate_pattern(apply_mask(received, mask), mask, plan.kind, plan.fraction),
                      guard.add(plan.side_out));
      }
      break;
    }
    case Command::tv: {
      const Image received = read_pgm(plan.inputs[0]);
      const Mask mask = read_mask(plan.inputs[1]);
      write_pgm(tv_reconstruct(apply_mask(received, mask), mask), guard.add(plan.output));
      break;
    }
    case Command::psnr:
      out << format_decibels(psnr(read_pgm(plan.inputs[0]), read_pgm(plan.inputs[1]))) << '\n';
      break;
    case Command::pattern_diff: {
      const auto e = pattern_error(read_pattern(plan.inputs[0]), read_pattern(plan.inputs[1]));
      out << format_fraction(e.miss_detection_pct) << ' ' << format_fraction(e.false_alarm_pct)
          << '\n';
      break;
    }
    case Command::bench: {
      if (plan.output.empty()) {
        write_bench(plan, out);
      } else {
        std::ostringstream csv;
        write_bench(plan, csv);
        write_file(guard.add(plan.output), csv.str());
      }
      break;
    }
  }
}

}  // namespace

CommandPlan parse_args(const std::vector<std::string>& args) {
  CommandPlan plan;
  std::string kind_text = "dct";

  CLI::App app{"Transform-domain sparsity inpainting for grayscale PGM images", "spinpaint"};
  app.require_subcommand(1);
  std::deque<Positionals> positionals;

  auto* sparsify_cmd = app.add_subcommand("sparsify", "Zero the smallest coefficients; write sparse image and .spin");
  add_inputs(positionals.emplace_back(Positionals{sparsify_cmd, {}}), {"image"});
  add_output(sparsify_cmd, plan.output, true);
  sparsify_cmd->add_option("-s,--side", plan.side, "Side-information (.spin) output")->required();
  add_kind(sparsify_cmd, kind_text);
  add_fraction(sparsify_cmd, plan.fraction);

  auto* corrupt_cmd = app.add_subcommand("corrupt", "Apply a loaded and/or generated loss mask");
  add_inputs(positionals.emplace_back(Positionals{corrupt_cmd, {}}), {"image"});
  add_output(corrupt_cmd, plan.output, true);
  corrupt_cmd->add_option("-m,--mask-out", plan.mask_out, "Mask PGM output")->required();
  corrupt_cmd->add_option("--mask", plan.mask_in, "Existing mask PGM (0 = missing)");
  corrupt_cmd->add_option("--blocks", plan.blocks, "Number of square holes");
  corrupt_cmd->add_option("--block-size", plan.block_size, "Hole side length")
      ->check(CLI::Range(std::size_t{1}, kMaxCount))
      ->capture_default_str();
  corrupt_cmd->add_option("--strokes", plan.strokes, "Number of random strokes");
  corrupt_cmd->add_option("--stroke-width", plan.stroke_width, "Stroke width in pixels")
      ->check(CLI::Range(std::size_t{1}, kMaxCount))
      ->capture_default_str();
  corrupt_cmd->add_option("--seed", plan.seed, "Mask seed (strokes use seed + 1)")
      ->capture_default_str();

  auto* inpaint_cmd = app.add_subcommand("inpaint", "Recover with transmitted side information");
  add_inputs(positionals.emplace_back(Positionals{inpaint_cmd, {}}), {"image", "mask", "side"});
  add_output(inpaint_cmd, plan.output, true);
  add_iterations(inpaint_cmd, plan.iterations);
  inpaint_cmd->add_flag("--early-stop", plan.early_stop, "Stop once no pixel changes by 1e-6");
  inpaint_cmd->add_option("--log-deltas", plan.delta_log, "Write per-iteration change CSV");

  auto* blind_cmd = app.add_subcommand("inpaint-blind", "Recover without side information");
  add_inputs(positionals.emplace_back(Positionals{blind_cmd, {}}), {"image", "mask"});
  add_output(blind_cmd, plan.output, true);
  add_kind(blind_cmd, kind_text);
  add_fraction(blind_cmd, plan.fraction);
  add_iterations(blind_cmd, plan.iterations);
  blind_cmd->add_option("--side-out", plan.side_out, "Write the estimated pattern (.spin)");

  auto* tv_cmd = app.add_subcommand("tv", "Time-varying (low-pass quotient) reconstruction");
  add_inputs(positionals.emplace_back(Positionals{tv_cmd, {}}), {"image", "mask"});
  add_output(tv_cmd, plan.output, true);

  auto* psnr_cmd = app.add_subcommand("psnr", "Print PSNR in dB between two PGM images");
  add_inputs(positionals.emplace_back(Positionals{psnr_cmd, {}}), {"a", "b"});

  auto* diff_cmd = app.add_subcommand(
      "pattern-diff", "Print miss-detection and false-alarm percentages of two patterns");
  add_inputs(positionals.emplace_back(Positionals{diff_cmd, {}}), {"estimated", "reference"});

  std::vector<std::filesystem::path> grid;
  std::vector<double> fractions{0.95};
  std::vector<std::string> kinds{"dct"};
  auto* bench_cmd = app.add_subcommand("bench", "Side-information recovery grid as CSV");
  bench_cmd->add_option("--grid", grid, "Comma-separated PGM images")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--fractions", fractions, "Comma-separated sparsity fractions")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--kinds", kinds, "Comma-separated transform kinds")
      ->delimiter(',')
      ->check(CLI::IsMember({"dct", "fft"}, CLI::ignore_case));
  add_iterations(bench_cmd, plan.iterations);
  std::size_t bench_blocks = 10;
  bench_cmd->add_option("--blocks", bench_blocks, "Missing blocks per image")
      ->capture_default_str();
  bench_cmd->add_option("--block-size", plan.block_size, "Block side length")
      ->check(CLI::Range(std::size_t{1}, kMaxCount))
      ->capture_default_str();
  bench_cmd->add_option("--seed", plan.seed, "Block placement seed")->capture_default_str();
  bench_cmd->add_option("-j,--jobs", plan.jobs, "Cells evaluated in parallel")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}))
      ->capture_default_str();
  add_output(bench_cmd, plan.output, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream text, ignored;
    app.exit(e, text, ignored);
    throw HelpRequested(text.str());
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream text, ignored;
    app.exit(e, text, ignored);
    throw HelpRequested(text.str());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  plan.kind = kind_from(kind_text);
  for (auto& p : positionals) {
    if (p.cmd->parsed()) plan.inputs = std::move(p.slots);
  }
  if (sparsify_cmd->parsed()) {
    plan.command = Command::sparsify;
  } else if (corrupt_cmd->parsed()) {
    plan.command = Command::corrupt;
    if (plan.mask_in.empty() && plan.blocks == 0 && plan.strokes == 0) {
      throw UsageError("corrupt: nothing to remove; give --mask, --blocks or --strokes");
    }
  } else if (inpaint_cmd->parsed()) {
    plan.command = Command::inpaint;
  } else if (blind_cmd->parsed()) {
    plan.command = Command::inpaint_blind;
  } else if (tv_cmd->parsed()) {
    plan.command = Command::tv;
  } else if (psnr_cmd->parsed()) {
    plan.command = Command::psnr;
  } else if (diff_cmd->parsed()) {
    plan.command = Command::pattern_diff;
  } else {
    plan.command = Command::bench;
    plan.blocks = bench_blocks;
    for (const auto& image : grid) {
      for (const auto& k : kinds) {
        for (double f : fractions) plan.cells.push_back({image, kind_from(k), f});
      }
    }
  }
  return plan;
}

int run(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
  OutputGuard guard;
  try {
    for (const auto& input : referenced_inputs(plan)) {
      if (!std::filesystem::exists(input)) throw Error("input not found: " + input.string());
    }
    execute(plan, out, guard);
  } catch (const std::exception& e) {
    err << "spinpaint: error: " << e.what() << '\n';
    return 1;
  }
  guard.commit();
  return 0;
}

BenchRow bench_cell(const Image& original, const std::string& label, TransformKind kind,
                    double fraction, std::size_t iterations, const BlockSpec& blocks) {
  const SparseImage sparse = sparsify(original, kind, fraction);
  const Mask mask = block_mask(original.rows(), original.cols(), blocks);
  RecoveryConfig config;
  config.kind = kind;
  config.iterations = iterations;
  const auto report =
      inpaint_with_side_info(apply_mask(sparse.image, mask), mask, sparse.pattern, config);
  return {label,
          kind,
          fraction,
          iterations,
          psnr(report.output, original),
          psnr(report.output, sparse.image),
          blocks.seed};
}

std::string format_bench_row(const BenchRow& row) {
  std::ostringstream line;
  line << row.image << ',' << to_string(row.kind) << ',' << format_fraction(row.fraction) << ','
       << row.iterations << ',' << format_decibels(row.psnr_vs_original) << ','
       << format_decibels(row.psnr_vs_sparse) << ',' << row.seed;
  return line.str();
}

}  // namespace spinpaint::cli
