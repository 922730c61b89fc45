#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "tipdetect/runner.hpp"

using namespace tipdetect;

int main(int argc, char** argv) {
  RunOptions run_opt;
  // Precedence: built-in defaults < TIPDETECT_CONFIG file < CLI flags. The
  // config file is applied before the parser binds, so flags win naturally.
  if (const char* env = std::getenv("TIPDETECT_CONFIG")) {
    try {
      load_config_file(run_opt.cfg, env);
    } catch (const std::exception& e) {
      std::cerr << "tipdetect: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Real-time fingertip detection over frame directories"};
  app.require_subcommand(0, 1);

  std::string color_space = run_opt.cfg.thresholds.color_space == ColorSpace::Hsv ? "hsv" : "ycbcr";
  int connectivity = static_cast<int>(run_opt.cfg.connectivity);
  bool no_crop = !run_opt.cfg.crop_enabled;
  bool no_timings = false;
  std::string overlay_dir;

  app.add_option("--input", run_opt.input, "Frame file or directory of frames");
  app.add_option("--output", run_opt.output, "Output JSONL path");
  app.add_option("--color-space", color_space, "Skin filter color space")
      ->check(CLI::IsMember({"hsv", "ycbcr"}));
  app.add_option("--hue-min", run_opt.cfg.thresholds.hue_min, "HSV hue lower bound (deg)");
  app.add_option("--hue-max", run_opt.cfg.thresholds.hue_max, "HSV hue upper bound (deg)");
  app.add_option("--sat-min", run_opt.cfg.thresholds.sat_min, "HSV saturation lower bound");
  app.add_option("--sat-max", run_opt.cfg.thresholds.sat_max, "HSV saturation upper bound");
  app.add_option("--cb-min", run_opt.cfg.thresholds.cb_min, "Cb lower bound");
  app.add_option("--cb-max", run_opt.cfg.thresholds.cb_max, "Cb upper bound");
  app.add_option("--cr-min", run_opt.cfg.thresholds.cr_min, "Cr lower bound");
  app.add_option("--cr-max", run_opt.cfg.thresholds.cr_max, "Cr upper bound");
  app.add_option("--smooth-kernel", run_opt.cfg.smooth_kernel, "Averaging kernel width (odd)");
  app.add_option("--connectivity", connectivity, "BLOB connectivity")
      ->check(CLI::IsMember({4, 8}));
  app.add_option("--slope-threshold", run_opt.cfg.slope_threshold,
                 "Wrist-cut slope threshold at 480p scale");
  app.add_option("--slope-window", run_opt.cfg.slope_window, "Wrist-cut slope window");
  app.add_option("--tip-diff", run_opt.cfg.tip_params.diff_threshold,
                 "Max edge jump inside one finger (480p scale)");
  app.add_option("--tip-min-run", run_opt.cfg.tip_params.min_run,
                 "Min finger width in scanlines (480p scale)");
  app.add_flag("--no-crop", no_crop, "Run the fingertip stage on the uncropped silhouette");
  app.add_option("--overlay", overlay_dir, "Directory for overlay images");
  app.add_flag("--bench", run_opt.bench, "Print a per-stage latency report");
  app.add_option("--jobs", run_opt.jobs, "Frames processed concurrently")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-timings", no_timings, "Omit timings_us from records");

  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic hand corpus");
  GenOptions gen_opt;
  std::string orientation = "up";
  gen->add_option("--out", gen_opt.out_dir, "Output directory")->required();
  gen->add_option("--fingers", gen_opt.fingers, "Fingers per hand")
      ->check(CLI::Range(0, 8));
  gen->add_option("--orientation", orientation, "Direction the fingers point")
      ->check(CLI::IsMember({"up", "down", "left", "right"}));
  gen->add_option("--frames", gen_opt.frames, "Number of frames")->check(CLI::PositiveNumber);
  gen->add_option("--noise", gen_opt.noise, "Salt/pepper probability per pixel")
      ->check(CLI::Range(0.0, 0.999));
  gen->add_option("--width", gen_opt.width, "Frame width");
  gen->add_option("--height", gen_opt.height, "Frame height");
  gen->add_option("--seed", gen_opt.seed, "Base RNG seed (frame f uses seed+f)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (gen->parsed()) {
    static const std::map<std::string, Side> kSides = {{"up", Side::Up},
                                                       {"down", Side::Down},
                                                       {"left", Side::Left},
                                                       {"right", Side::Right}};
    gen_opt.finger_side = kSides.at(orientation);
    try {
      return run_gen(gen_opt);
    } catch (const std::exception& e) {
      std::cerr << "tipdetect: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  if (run_opt.input.empty() || run_opt.output.empty()) {
    std::cerr << "tipdetect: --input and --output are required\n"
              << app.help() << "\n";
    return kExitUsage;
  }

  run_opt.cfg.thresholds.color_space =
      color_space == "hsv" ? ColorSpace::Hsv : ColorSpace::YCbCr;
  run_opt.cfg.connectivity = connectivity == 4 ? Connectivity::Four : Connectivity::Eight;
  run_opt.cfg.crop_enabled = !no_crop;
  run_opt.include_timings = !no_timings;
  if (!overlay_dir.empty()) run_opt.overlay_dir = overlay_dir;

  try {
    run_opt.cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "tipdetect: invalid configuration: " << e.what() << "\n";
    return kExitUsage;
  }

  return run_detect(run_opt);
}
