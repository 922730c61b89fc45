#include <doctest.h>

#include <random>

#include "tipdetect/errors.hpp"
#include "tipdetect/skin_filter.hpp"

using namespace tipdetect;

TEST_CASE("classify_skin_hsv against default bands") {
  SkinThresholds t;  // hue [0,50], sat [0.23,0.68]
  CHECK(classify_skin_hsv({30.0, 0.40, 0.9}, t));
  CHECK_FALSE(classify_skin_hsv({210.0, 0.50, 0.7}, t));
  // Closed intervals: the boundary is inside.
  CHECK(classify_skin_hsv({50.0, 0.68, 0.1}, t));
  CHECK(classify_skin_hsv({0.0, 0.23, 1.0}, t));
  CHECK_FALSE(classify_skin_hsv({50.1, 0.40, 0.5}, t));
}

TEST_CASE("classify_skin_ycbcr against default bands") {
  SkinThresholds t;  // cb [77,127], cr [133,173]
  t.color_space = ColorSpace::YCbCr;
  CHECK(classify_skin_ycbcr({100, 100, 150}, t));
  CHECK_FALSE(classify_skin_ycbcr({100, 128, 128}, t));
  CHECK(classify_skin_ycbcr({0, 77, 173}, t));
  CHECK_FALSE(classify_skin_ycbcr({255, 76, 150}, t));
}

TEST_CASE("threshold widening is monotone") {
  // A pixel classified as skin never flips to background when any interval
  // grows.
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> uh(0.0, 359.9), us(0.0, 1.0);
  std::uniform_int_distribution<int> u8(0, 255);
  for (int i = 0; i < 2000; ++i) {
    SkinThresholds t;
    const HsvPixel p{uh(rng), us(rng), us(rng)};
    SkinThresholds wide = t;
    wide.hue_min = 0.0;
    wide.hue_max = 359.0;
    wide.sat_min = 0.0;
    wide.sat_max = 1.0;
    if (classify_skin_hsv(p, t)) CHECK(classify_skin_hsv(p, wide));

    SkinThresholds ty;
    ty.color_space = ColorSpace::YCbCr;
    const YCbCrPixel q{static_cast<std::uint8_t>(u8(rng)), static_cast<std::uint8_t>(u8(rng)),
                       static_cast<std::uint8_t>(u8(rng))};
    SkinThresholds wy = ty;
    wy.cb_min = 0;
    wy.cb_max = 255;
    wy.cr_min = 0;
    wy.cr_max = 255;
    if (classify_skin_ycbcr(q, ty)) CHECK(classify_skin_ycbcr(q, wy));
  }
}

TEST_CASE("filter_frame") {
  SkinThresholds t;

  SUBCASE("uniform skin tone fills the interior") {
    // RGB(224,160,128): h = 60*32/96 = 20, s = 96/224 = 0.4286 -- in band.
    const RgbImage img = RgbImage::solid(12, 10, 224, 160, 128);
    const BinarySilhouette sil = filter_frame(img, t, 3);
    CHECK(sil.width == 12);
    CHECK(sil.height == 10);
    for (int r = 1; r < 9; ++r)
      for (int c = 1; c < 11; ++c) CHECK(sil.at(r, c) == 1);
  }

  SUBCASE("uniform blue goes dark") {
    const RgbImage img = RgbImage::solid(8, 8, 0, 0, 255);  // hue 240
    const BinarySilhouette sil = filter_frame(img, t, 3);
    CHECK(sil.on_pixels() == 0);
  }

  SUBCASE("skin rectangle on blue erodes at most floor(k/2)") {
    RgbImage img = RgbImage::solid(14, 14, 0, 0, 255);
    for (int r = 3; r <= 10; ++r)
      for (int c = 2; c <= 9; ++c) img.set(r, c, 224, 160, 128);
    const BinarySilhouette sil = filter_frame(img, t, 3);
    for (int r = 0; r < 14; ++r)
      for (int c = 0; c < 14; ++c) {
        const bool inside = r >= 3 && r <= 10 && c >= 2 && c <= 9;
        const bool interior = r >= 4 && r <= 9 && c >= 3 && c <= 8;
        if (!inside) CHECK(sil.at(r, c) == 0);  // never grows outward
        if (interior) CHECK(sil.at(r, c) == 1);
      }
    // Rectangle corners see only 4 of 9 ones and drop.
    CHECK(sil.at(3, 2) == 0);
    CHECK(sil.at(10, 9) == 0);
  }

  SUBCASE("ycbcr space accepts the same skin tone") {
    SkinThresholds ty;
    ty.color_space = ColorSpace::YCbCr;
    const RgbImage img = RgbImage::solid(10, 10, 224, 160, 128);
    const BinarySilhouette sil = filter_frame(img, ty, 3);
    CHECK(sil.at(5, 5) == 1);
  }

  SUBCASE("even kernel propagates") {
    const RgbImage img = RgbImage::solid(4, 4, 0, 0, 255);
    CHECK_THROWS_AS(filter_frame(img, t, 4), EvenKernel);
  }
}

TEST_CASE("threshold validation") {
  SkinThresholds t;
  t.hue_min = 60.0;
  t.hue_max = 50.0;
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  SkinThresholds u;
  u.cb_min = 200;
  u.cb_max = 100;
  CHECK_THROWS_AS(u.validate(), std::invalid_argument);
  SkinThresholds ok;
  CHECK_NOTHROW(ok.validate());
}
