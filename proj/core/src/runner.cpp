#include "tipdetect/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "tipdetect/frame_io.hpp"

namespace tipdetect {

namespace fs = std::filesystem;

std::vector<fs::path> list_frames(const fs::path& input) {
  std::vector<fs::path> files;
  if (fs::is_directory(input)) {
    for (const auto& entry : fs::directory_iterator(input))
      if (entry.is_regular_file() && is_frame_file(entry.path())) files.push_back(entry.path());
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
      return a.filename().string() < b.filename().string();
    });
  } else {
    files.push_back(input);
  }
  return files;
}

namespace {

struct FrameResult {
  std::optional<DetectionRecord> record;
  std::string error;
};

void process_one(const fs::path& file, const RunOptions& opt, FrameResult& out) {
  try {
    const RgbImage img = read_frame(file);
    DetectionRecord rec = process_frame(img, opt.cfg, file.stem().string());
    if (opt.overlay_dir) {
      const RgbImage overlay = render_overlay(img, rec);
      write_ppm(*opt.overlay_dir / (file.stem().string() + ".ppm"), overlay);
    }
    out.record = std::move(rec);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
}

}  // namespace

int run_detect(const RunOptions& opt) {
  if (!fs::exists(opt.input)) {
    std::cerr << "tipdetect: input path does not exist: " << opt.input.string() << "\n";
    return kExitUsage;
  }

  const std::vector<fs::path> files = list_frames(opt.input);

  if (opt.overlay_dir) {
    std::error_code ec;
    fs::create_directories(*opt.overlay_dir, ec);
    if (ec) {
      std::cerr << "tipdetect: cannot create overlay dir: " << ec.message() << "\n";
      return kExitIoError;
    }
  }

  std::vector<FrameResult> results(files.size());
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || files.size() <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) process_one(files[i], opt, results[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= files.size()) return;
        process_one(files[i], opt, results[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(jobs, static_cast<int>(files.size())); ++t)
      pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::ofstream out(opt.output, std::ios::binary);
  if (!out) {
    std::cerr << "tipdetect: cannot open output: " << opt.output.string() << "\n";
    return kExitIoError;
  }

  bool io_failed = false;
  std::vector<DetectionRecord> records;
  records.reserve(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!results[i].record) {
      std::cerr << "tipdetect: " << files[i].string() << ": " << results[i].error << "\n";
      io_failed = true;
      continue;
    }
    out << record_to_json(*results[i].record, opt.include_timings) << "\n";
    records.push_back(std::move(*results[i].record));
  }
  out.flush();
  if (!out) {
    std::cerr << "tipdetect: write failed: " << opt.output.string() << "\n";
    return kExitIoError;
  }

  if (opt.bench) std::cout << format_bench_report(build_bench_report(records));
  return io_failed ? kExitIoError : kExitOk;
}

int run_gen(const GenOptions& opt) {
  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec) {
    std::cerr << "tipdetect: cannot create output dir: " << ec.message() << "\n";
    return kExitIoError;
  }

  std::ofstream truth(opt.out_dir / "ground_truth.jsonl", std::ios::binary);
  if (!truth) {
    std::cerr << "tipdetect: cannot open ground_truth.jsonl\n";
    return kExitIoError;
  }

  try {
    for (int f = 0; f < opt.frames; ++f) {
      HandSpec spec;
      spec.width = opt.width;
      spec.height = opt.height;
      spec.fingers = opt.fingers;
      spec.finger_side = opt.finger_side;
      spec.noise = opt.noise;
      spec.seed = opt.seed + static_cast<std::uint32_t>(f);
      const SyntheticHand hand = generate_hand(spec);

      char name[32];
      std::snprintf(name, sizeof(name), "frame_%04d", f);
      write_ppm(opt.out_dir / (std::string(name) + ".ppm"), hand.frame);

      nlohmann::ordered_json j;
      j["frame"] = name;
      j["width"] = hand.frame.width;
      j["height"] = hand.frame.height;
      j["wrist_side"] = side_name(hand.wrist_side);
      j["finger_side"] = side_name(hand.finger_side);
      j["fingers"] = opt.fingers;
      j["tips"] = nlohmann::ordered_json::array();
      for (const Fingertip& tip : hand.tips) j["tips"].push_back({{"x", tip.x}, {"y", tip.y}});
      truth << j.dump() << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "tipdetect: gen failed: " << e.what() << "\n";
    return kExitIoError;
  }
  truth.flush();
  return truth ? kExitOk : kExitIoError;
}

namespace {

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "off" || v == "no") return false;
  throw std::invalid_argument("bad boolean value '" + v + "'");
}

}  // namespace

void load_config_file(PipelineConfig& cfg, const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path.string());

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected key=value");
    auto trim = [](std::string s) {
      const auto b2 = s.find_first_not_of(" \t");
      const auto e2 = s.find_last_not_of(" \t");
      return b2 == std::string::npos ? std::string() : s.substr(b2, e2 - b2 + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    try {
      if (key == "color_space") {
        if (val == "hsv")
          cfg.thresholds.color_space = ColorSpace::Hsv;
        else if (val == "ycbcr")
          cfg.thresholds.color_space = ColorSpace::YCbCr;
        else
          throw std::invalid_argument("expected hsv or ycbcr");
      } else if (key == "hue_min") {
        cfg.thresholds.hue_min = std::stod(val);
      } else if (key == "hue_max") {
        cfg.thresholds.hue_max = std::stod(val);
      } else if (key == "sat_min") {
        cfg.thresholds.sat_min = std::stod(val);
      } else if (key == "sat_max") {
        cfg.thresholds.sat_max = std::stod(val);
      } else if (key == "cb_min") {
        cfg.thresholds.cb_min = std::stoi(val);
      } else if (key == "cb_max") {
        cfg.thresholds.cb_max = std::stoi(val);
      } else if (key == "cr_min") {
        cfg.thresholds.cr_min = std::stoi(val);
      } else if (key == "cr_max") {
        cfg.thresholds.cr_max = std::stoi(val);
      } else if (key == "smooth_kernel") {
        cfg.smooth_kernel = std::stoi(val);
      } else if (key == "connectivity") {
        const int c = std::stoi(val);
        if (c != 4 && c != 8) throw std::invalid_argument("expected 4 or 8");
        cfg.connectivity = c == 4 ? Connectivity::Four : Connectivity::Eight;
      } else if (key == "slope_threshold") {
        cfg.slope_threshold = std::stod(val);
      } else if (key == "slope_window") {
        cfg.slope_window = std::stoi(val);
      } else if (key == "tip_diff") {
        cfg.tip_params.diff_threshold = std::stoi(val);
      } else if (key == "tip_min_run") {
        cfg.tip_params.min_run = std::stoi(val);
      } else if (key == "max_tips") {
        cfg.tip_params.max_tips = std::stoi(val);
      } else if (key == "crop") {
        cfg.crop_enabled = parse_bool(val);
      } else {
        throw std::invalid_argument("unknown key");
      }
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + key +
                               ": " + e.what());
    }
  }
}

}  // namespace tipdetect
