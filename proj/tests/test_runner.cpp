#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "tipdetect/frame_io.hpp"
#include "tipdetect/runner.hpp"

using namespace tipdetect;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("tipdetect_run_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::vector<std::string> read_lines(const fs::path& file) {
  std::ifstream in(file);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string read_all(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("run_gen emits frames plus ground truth") {
  TempDir tmp;
  GenOptions gen;
  gen.out_dir = tmp.path / "corpus";
  gen.fingers = 3;
  gen.frames = 5;
  gen.seed = 9;
  REQUIRE(run_gen(gen) == kExitOk);

  int frames = 0;
  for (const auto& e : fs::directory_iterator(gen.out_dir))
    if (e.path().extension() == ".ppm") ++frames;
  CHECK(frames == 5);
  CHECK(read_lines(gen.out_dir / "ground_truth.jsonl").size() == 5);

  const RgbImage img = read_ppm(gen.out_dir / "frame_0000.ppm");
  CHECK(img.width == 640);
  CHECK(img.height == 480);
}

TEST_CASE("run_detect end to end") {
  TempDir tmp;
  GenOptions gen;
  gen.out_dir = tmp.path / "corpus";
  gen.fingers = 2;
  gen.frames = 4;
  gen.seed = 50;
  REQUIRE(run_gen(gen) == kExitOk);

  RunOptions run;
  run.input = gen.out_dir;
  run.output = tmp.path / "out.jsonl";
  run.include_timings = false;

  SUBCASE("one record per frame, exit 0") {
    CHECK(run_detect(run) == kExitOk);
    const auto lines = read_lines(run.output);
    REQUIRE(lines.size() == 4);
    for (const auto& line : lines) {
      CHECK(line.find("\"status\":\"ok\"") != std::string::npos);
      CHECK(line.find("\"wrist_side\":\"down\"") != std::string::npos);
      CHECK(line.find("timings_us") == std::string::npos);
    }
    // Lexicographic frame order is preserved in the output.
    CHECK(lines[0].find("frame_0000") != std::string::npos);
    CHECK(lines[3].find("frame_0003") != std::string::npos);
  }

  SUBCASE("jobs > 1 produces identical bytes") {
    run.output = tmp.path / "seq.jsonl";
    REQUIRE(run_detect(run) == kExitOk);
    RunOptions par = run;
    par.jobs = 4;
    par.output = tmp.path / "par.jsonl";
    REQUIRE(run_detect(par) == kExitOk);
    CHECK(read_all(run.output) == read_all(par.output));
  }

  SUBCASE("overlays are written per frame") {
    run.overlay_dir = tmp.path / "overlays";
    REQUIRE(run_detect(run) == kExitOk);
    int overlays = 0;
    for (const auto& e : fs::directory_iterator(*run.overlay_dir))
      if (e.path().extension() == ".ppm") ++overlays;
    CHECK(overlays == 4);
  }

  SUBCASE("single-file input works") {
    run.input = gen.out_dir / "frame_0001.ppm";
    REQUIRE(run_detect(run) == kExitOk);
    CHECK(read_lines(run.output).size() == 1);
  }

  SUBCASE("missing input is a usage error") {
    run.input = tmp.path / "does_not_exist";
    CHECK(run_detect(run) == kExitUsage);
  }

  SUBCASE("an unreadable frame is skipped and fails the run") {
    std::ofstream(gen.out_dir / "frame_0002.ppm", std::ios::binary) << "garbage";
    CHECK(run_detect(run) == kExitIoError);
    CHECK(read_lines(run.output).size() == 3);  // bad frame not emitted
  }

  SUBCASE("no-hand frames still produce records") {
    const RgbImage blue = RgbImage::solid(64, 48, 0, 0, 255);
    write_ppm(gen.out_dir / "frame_0004.ppm", blue);
    CHECK(run_detect(run) == kExitOk);
    const auto lines = read_lines(run.output);
    REQUIRE(lines.size() == 5);
    CHECK(lines[4].find("\"status\":\"no_hand\"") != std::string::npos);
    CHECK(lines[4].find("\"fingertips\":[]") != std::string::npos);
  }
}

TEST_CASE("config file loading") {
  TempDir tmp;
  const fs::path file = tmp.path / "cfg";

  SUBCASE("values override defaults") {
    std::ofstream(file) << "# tuning\n"
                        << "color_space = ycbcr\n"
                        << "smooth_kernel = 7\n"
                        << "connectivity = 4\n"
                        << "slope_threshold = 2.5\n"
                        << "tip_diff = 3\n"
                        << "crop = off\n";
    PipelineConfig cfg;
    load_config_file(cfg, file);
    CHECK(cfg.thresholds.color_space == ColorSpace::YCbCr);
    CHECK(cfg.smooth_kernel == 7);
    CHECK(cfg.connectivity == Connectivity::Four);
    CHECK(cfg.slope_threshold == doctest::Approx(2.5));
    CHECK(cfg.tip_params.diff_threshold == 3);
    CHECK_FALSE(cfg.crop_enabled);
  }

  SUBCASE("unknown keys are rejected") {
    std::ofstream(file) << "palm_size = 3\n";
    PipelineConfig cfg;
    CHECK_THROWS_AS(load_config_file(cfg, file), std::runtime_error);
  }

  SUBCASE("malformed lines are rejected") {
    std::ofstream(file) << "smooth_kernel\n";
    PipelineConfig cfg;
    CHECK_THROWS_AS(load_config_file(cfg, file), std::runtime_error);
  }

  SUBCASE("bad values are rejected") {
    std::ofstream(file) << "connectivity = 5\n";
    PipelineConfig cfg;
    CHECK_THROWS_AS(load_config_file(cfg, file), std::runtime_error);
  }

  SUBCASE("missing file") {
    PipelineConfig cfg;
    CHECK_THROWS_AS(load_config_file(cfg, tmp.path / "none"), std::runtime_error);
  }
}

TEST_CASE("list_frames sorts lexicographically") {
  TempDir tmp;
  const RgbImage img = RgbImage::solid(4, 4, 1, 2, 3);
  write_ppm(tmp.path / "b.ppm", img);
  write_ppm(tmp.path / "a.ppm", img);
  write_ppm(tmp.path / "c.ppm", img);
  std::ofstream(tmp.path / "notes.txt") << "skip me";
  const auto files = list_frames(tmp.path);
  REQUIRE(files.size() == 3);
  CHECK(files[0].filename() == "a.ppm");
  CHECK(files[2].filename() == "c.ppm");
}
