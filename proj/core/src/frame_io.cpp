#include "tipdetect/frame_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

#ifdef TIPDETECT_WITH_PNG
#include <png.h>
#endif

namespace tipdetect {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw std::runtime_error(path.string() + ": " + what);
}

// Next whitespace-delimited header token, skipping '#' comment lines.
std::string next_token(std::istream& in) {
  std::string tok;
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  return tok;
}

int parse_dim(const std::string& tok, const std::filesystem::path& path, const char* name) {
  try {
    const int v = std::stoi(tok);
    if (v < 1) throw std::out_of_range("");
    return v;
  } catch (...) {
    fail(path, std::string("bad PPM ") + name);
  }
}

std::string lower_ext(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

}  // namespace

RgbImage read_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open");

  if (next_token(in) != "P6") fail(path, "not a binary PPM (P6)");
  const int w = parse_dim(next_token(in), path, "width");
  const int h = parse_dim(next_token(in), path, "height");
  const int maxval = parse_dim(next_token(in), path, "maxval");
  if (maxval != 255) fail(path, "unsupported maxval " + std::to_string(maxval));
  // next_token consumed exactly one whitespace byte after the maxval, so the
  // stream now sits on the first sample.

  RgbImage img(w, h);
  in.read(reinterpret_cast<char*>(img.data.data()),
          static_cast<std::streamsize>(img.data.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.data.size()))
    fail(path, "truncated pixel data");
  return img;
}

void write_ppm(const std::filesystem::path& path, const RgbImage& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open for writing");
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
  if (!out) fail(path, "write failed");
}

#ifdef TIPDETECT_WITH_PNG

RgbImage read_png(const std::filesystem::path& path) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.string().c_str()))
    fail(path, std::string("png read: ") + png.message);
  png.format = PNG_FORMAT_RGB;

  RgbImage img(static_cast<int>(png.width), static_cast<int>(png.height));
  if (!png_image_finish_read(&png, nullptr, img.data.data(), 0, nullptr)) {
    const std::string msg = png.message;
    png_image_free(&png);
    fail(path, "png decode: " + msg);
  }
  return img;
}

void write_png(const std::filesystem::path& path, const RgbImage& img) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(img.width);
  png.height = static_cast<png_uint_32>(img.height);
  png.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&png, path.string().c_str(), 0, img.data.data(), 0, nullptr))
    fail(path, std::string("png write: ") + png.message);
}

#endif  // TIPDETECT_WITH_PNG

RgbImage read_frame(const std::filesystem::path& path) {
  const std::string ext = lower_ext(path);
  if (ext == ".ppm") return read_ppm(path);
#ifdef TIPDETECT_WITH_PNG
  if (ext == ".png") return read_png(path);
#else
  if (ext == ".png") fail(path, "PNG support not built (TIPDETECT_WITH_PNG=OFF)");
#endif
  fail(path, "unsupported frame format '" + ext + "'");
}

bool is_frame_file(const std::filesystem::path& path) {
  const std::string ext = lower_ext(path);
#ifdef TIPDETECT_WITH_PNG
  return ext == ".ppm" || ext == ".png";
#else
  return ext == ".ppm";
#endif
}

}  // namespace tipdetect
