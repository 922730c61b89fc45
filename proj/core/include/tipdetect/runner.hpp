#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tipdetect/pipeline.hpp"
#include "tipdetect/synth.hpp"

namespace tipdetect {

// Exit codes shared by the CLI and the library entry points.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIoError = 1;
inline constexpr int kExitUsage = 2;

struct RunOptions {
  std::filesystem::path input;   // frame file or directory
  std::filesystem::path output;  // JSONL path
  std::optional<std::filesystem::path> overlay_dir;
  bool bench = false;
  bool include_timings = true;
  int jobs = 1;
  PipelineConfig cfg;
};

// Processes frames in lexicographic filename order and writes one JSONL
// record per frame (in input order regardless of --jobs). Undecodable
// frames are reported on stderr and turn the final exit code into 1.
int run_detect(const RunOptions& opt);

struct GenOptions {
  std::filesystem::path out_dir;
  int fingers = 3;
  Side finger_side = Side::Up;
  int frames = 1;
  double noise = 0.0;
  int width = 640;
  int height = 480;
  std::uint32_t seed = 1234;
};

// Emits frame_NNNN.ppm files plus ground_truth.jsonl into out_dir.
int run_gen(const GenOptions& opt);

// Flat key=value config file (# comments allowed). Unknown keys throw.
void load_config_file(PipelineConfig& cfg, const std::filesystem::path& path);

// Lexicographically sorted frame files of a directory (or the single file).
std::vector<std::filesystem::path> list_frames(const std::filesystem::path& input);

}  // namespace tipdetect
