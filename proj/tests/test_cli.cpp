#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "spinpaint/image.hpp"
#include "spinpaint/sparsity.hpp"

namespace spinpaint::cli {
namespace {

namespace fs = std::filesystem;

class CliRunTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("spinpaint_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int invoke(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run(parse_args(args), out_, err_);
  }

  void write_scene(const std::string& name, std::size_t n) {
    Image img = oracle::random_image(n, n, 17, 0.0, 20.0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        img(r, c) += 110.0 + 70.0 * std::sin(0.13 * r) * std::cos(0.09 * c);
    write_pgm(img, path(name));
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(ParseArgsTest, InpaintDefaults) {
  const CommandPlan plan = parse_args({"inpaint", "in.pgm", "mask.pgm", "side.spin", "-o", "out.pgm"});
  EXPECT_EQ(plan.command, Command::inpaint);
  EXPECT_EQ(plan.iterations, 500u);
  EXPECT_EQ(plan.kind, TransformKind::dct);
  EXPECT_EQ(plan.fraction, 0.95);
  ASSERT_EQ(plan.inputs.size(), 3u);
  EXPECT_EQ(plan.inputs[2], fs::path("side.spin"));
  EXPECT_EQ(plan.output, fs::path("out.pgm"));
}

TEST(ParseArgsTest, ZeroIterationsIsUsageError) {
  try {
    parse_args({"inpaint", "--iterations", "0", "in.pgm", "mask.pgm", "side.spin", "-o", "o.pgm"});
    FAIL() << "accepted zero iterations";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("--iterations"), std::string::npos) << e.what();
  }
}

TEST(ParseArgsTest, BenchEnumeratesCrossProduct) {
  const CommandPlan plan =
      parse_args({"bench", "--grid", "lena.pgm", "--fractions", "0.90,0.95", "--kinds", "dct,fft"});
  EXPECT_EQ(plan.command, Command::bench);
  ASSERT_EQ(plan.cells.size(), 4u);
  EXPECT_EQ(plan.blocks, 10u);
  std::set<std::pair<TransformKind, double>> seen;
  for (const auto& cell : plan.cells) {
    EXPECT_EQ(cell.image, fs::path("lena.pgm"));
    seen.insert({cell.kind, cell.fraction});
  }
  EXPECT_EQ(seen.size(), 4u);
}

TEST(ParseArgsTest, UnknownFlagNamed) {
  try {
    parse_args({"tv", "a.pgm", "m.pgm", "-o", "x.pgm", "--bogus"});
    FAIL() << "accepted unknown flag";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("--bogus"), std::string::npos) << e.what();
  }
}

TEST(ParseArgsTest, RejectsBadValues) {
  EXPECT_THROW(parse_args({"sparsify", "a.pgm", "-o", "b.pgm", "-s", "c.spin", "--kind", "haar"}),
               UsageError);
  EXPECT_THROW(parse_args({"sparsify", "a.pgm", "-o", "b.pgm", "-s", "c.spin", "--fraction", "1.5"}),
               UsageError);
  EXPECT_THROW(parse_args({"corrupt", "a.pgm", "-o", "b.pgm", "-m", "m.pgm"}), UsageError);
  EXPECT_THROW(parse_args({"psnr", "a.pgm"}), UsageError);
  EXPECT_THROW(parse_args({}), UsageError);
  EXPECT_THROW(parse_args({"--help"}), HelpRequested);
}

TEST(ParseArgsTest, SubcommandsAndOptions) {
  const CommandPlan corrupt = parse_args({"corrupt", "a.pgm", "-o", "b.pgm", "-m", "m.pgm", "--blocks",
                                          "3", "--strokes", "4", "--seed", "9"});
  EXPECT_EQ(corrupt.command, Command::corrupt);
  EXPECT_EQ(corrupt.blocks, 3u);
  EXPECT_EQ(corrupt.strokes, 4u);
  EXPECT_EQ(corrupt.seed, 9u);
  const CommandPlan blind = parse_args({"inpaint-blind", "a.pgm", "m.pgm", "-o", "b.pgm", "--kind",
                                        "FFT", "--fraction", "0.85"});
  EXPECT_EQ(blind.command, Command::inpaint_blind);
  EXPECT_EQ(blind.kind, TransformKind::fft);
  EXPECT_EQ(blind.fraction, 0.85);
  EXPECT_EQ(parse_args({"pattern-diff", "a.spin", "b.spin"}).command, Command::pattern_diff);
}

TEST_F(CliRunTest, SparsifyThenLosslessInpaintIsExact) {
  write_scene("orig.pgm", 32);
  write_mask(Mask::ones(32, 32), path("ones.pgm"));
  ASSERT_EQ(invoke({"sparsify", path("orig.pgm"), "-o", path("sparse.pgm"), "-s", path("side.spin"),
                    "--kind", "fft", "--fraction", "0.9"}),
            0)
      << err_.str();
  EXPECT_EQ(read_pattern(path("side.spin")).kind(), TransformKind::fft);
  ASSERT_EQ(invoke({"inpaint", path("sparse.pgm"), path("ones.pgm"), path("side.spin"), "-o",
                    path("out.pgm")}),
            0)
      << err_.str();
  ASSERT_EQ(invoke({"psnr", path("out.pgm"), path("sparse.pgm")}), 0);
  EXPECT_EQ(out_.str(), "inf\n");
}

TEST_F(CliRunTest, CorruptIsDeterministic) {
  write_scene("orig.pgm", 64);
  for (const char* tag : {"a", "b"}) {
    ASSERT_EQ(invoke({"corrupt", path("orig.pgm"), "-o", path(std::string(tag) + ".pgm"), "-m",
                      path(std::string(tag) + "_mask.pgm"), "--blocks", "3", "--block-size", "8",
                      "--strokes", "4", "--seed", "1"}),
              0)
        << err_.str();
  }
  EXPECT_EQ(slurp(path("a_mask.pgm")), slurp(path("b_mask.pgm")));
  EXPECT_EQ(slurp(path("a.pgm")), slurp(path("b.pgm")));
  const Mask m = read_mask(path("a_mask.pgm"));
  EXPECT_GE(m.missing_count(), 3u * 64u);
}

TEST_F(CliRunTest, BenchRecoversSyntheticSparseImage) {
  write_scene("scene.pgm", 64);
  ASSERT_EQ(invoke({"bench", "--grid", path("scene.pgm"), "--fractions", "0.9", "--kinds", "dct",
                    "--blocks", "1", "--block-size", "8", "--iterations", "1000", "-o",
                    path("grid.csv")}),
            0)
      << err_.str();
  std::istringstream csv(slurp(path("grid.csv")));
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  EXPECT_EQ(header, kBenchHeader);
  std::vector<std::string> fields;
  std::stringstream split(row);
  for (std::string f; std::getline(split, f, ',');) fields.push_back(f);
  ASSERT_EQ(fields.size(), 7u) << row;
  EXPECT_EQ(fields[1], "dct");
  EXPECT_EQ(fields[3], "1000");
  EXPECT_TRUE(fields[5] == "inf" || std::stod(fields[5]) >= 50.0) << row;
  EXPECT_EQ(fields[6], "1");
}

TEST_F(CliRunTest, TvAndBlindProduceImages) {
  write_scene("orig.pgm", 32);
  ASSERT_EQ(invoke({"corrupt", path("orig.pgm"), "-o", path("bad.pgm"), "-m", path("m.pgm"),
                    "--blocks", "2", "--block-size", "5"}),
            0);
  ASSERT_EQ(invoke({"tv", path("bad.pgm"), path("m.pgm"), "-o", path("tv.pgm")}), 0) << err_.str();
  ASSERT_EQ(invoke({"inpaint-blind", path("bad.pgm"), path("m.pgm"), "-o", path("blind.pgm"),
                    "--iterations", "20", "--side-out", path("est.spin")}),
            0)
      << err_.str();
  EXPECT_EQ(read_pgm(path("blind.pgm")).rows(), 32u);
  ASSERT_EQ(invoke({"sparsify", path("orig.pgm"), "-o", path("s.pgm"), "-s", path("ref.spin")}), 0);
  // Estimated pattern defaults to DCT; the reference too.
  EXPECT_EQ(invoke({"pattern-diff", path("est.spin"), path("ref.spin")}), 0) << err_.str();
  EXPECT_NE(out_.str().find('.'), std::string::npos);
}

TEST_F(CliRunTest, MissingInputFailsWithoutOutput) {
  EXPECT_EQ(invoke({"tv", path("nope.pgm"), path("nope_mask.pgm"), "-o", path("tv.pgm")}), 1);
  EXPECT_NE(err_.str().find("nope.pgm"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("tv.pgm")));
}

TEST_F(CliRunTest, FailureRemovesPartialOutputs) {
  write_scene("orig.pgm", 16);
  write_mask(Mask::zeros(16, 16), path("zeros.pgm"));
  // No known pixel at all: TV reconstruction has no support.
  EXPECT_EQ(invoke({"inpaint-blind", path("orig.pgm"), path("zeros.pgm"), "-o", path("out.pgm"),
                    "--side-out", path("est.spin")}),
            1);
  EXPECT_FALSE(fs::exists(path("out.pgm")));
  EXPECT_FALSE(fs::exists(path("est.spin")));
  EXPECT_FALSE(err_.str().empty());

  // Side information of the wrong shape.
  write_scene("big.pgm", 24);
  ASSERT_EQ(invoke({"sparsify", path("big.pgm"), "-o", path("s.pgm"), "-s", path("side.spin")}), 0);
  EXPECT_EQ(invoke({"inpaint", path("orig.pgm"), path("zeros.pgm"), path("side.spin"), "-o",
                    path("out.pgm")}),
            1);
  EXPECT_FALSE(fs::exists(path("out.pgm")));
}

}  // namespace
}  // namespace spinpaint::cli
