#pragma once

#include <filesystem>

#include "tipdetect/image.hpp"

namespace tipdetect {

// Binary PPM (P6), maxval 255 only. Header comments are tolerated.
RgbImage read_ppm(const std::filesystem::path& path);
void write_ppm(const std::filesystem::path& path, const RgbImage& img);

#ifdef TIPDETECT_WITH_PNG
RgbImage read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const RgbImage& img);
#endif

// Dispatches on the (lowercased) extension: .ppm always, .png when built
// with PNG support. Throws std::runtime_error otherwise.
RgbImage read_frame(const std::filesystem::path& path);
bool is_frame_file(const std::filesystem::path& path);

}  // namespace tipdetect
