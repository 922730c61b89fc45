#include <doctest.h>

#include <cmath>

#include "tipdetect/errors.hpp"
#include "tipdetect/fingertip.hpp"

using namespace tipdetect;

namespace {

const Orientation kUp = Orientation::from_wrist(Side::Down);  // fingers point up

BinarySilhouette vertical_bar(int height) {
  BinarySilhouette sil(1, height);
  for (auto& b : sil.bits) b = 1;
  return sil;
}

// Comb on 6x8: columns 1 and 5 occupied rows 0..4, columns 2,3,4,6,7 rows
// 3..4 only, column 0 empty. Edge rows per occupied column: 0,3,3,3,0,3,3.
BinarySilhouette two_finger_comb() {
  BinarySilhouette sil(8, 6);
  for (int r = 0; r <= 4; ++r) {
    sil.at(r, 1) = 1;
    sil.at(r, 5) = 1;
  }
  for (int c : {2, 3, 4, 6, 7})
    for (int r = 3; r <= 4; ++r) sil.at(r, c) = 1;
  return sil;
}

}  // namespace

TEST_CASE("scanline_counts") {
  SUBCASE("vertical bar is a single scanline of ten") {
    const auto h = scanline_counts(vertical_bar(10), kUp);
    CHECK(h.axis == Axis::Column);
    CHECK(h.counts == std::vector<int>{10});
  }

  SUBCASE("all-ones 4 rows x 3 cols counts per column") {
    BinarySilhouette sil(3, 4);
    for (auto& b : sil.bits) b = 1;
    CHECK(scanline_counts(sil, kUp).counts == std::vector<int>{4, 4, 4});
  }

  SUBCASE("horizontal hand counts per row") {
    BinarySilhouette sil(4, 3);
    for (auto& b : sil.bits) b = 1;
    const auto h = scanline_counts(sil, Orientation::from_wrist(Side::Left));
    CHECK(h.axis == Axis::Row);
    CHECK(h.counts == std::vector<int>{4, 4, 4});
  }

  SUBCASE("comb reflects finger vs gap columns") {
    const auto h = scanline_counts(two_finger_comb(), kUp);
    CHECK(h.counts == std::vector<int>{0, 5, 2, 2, 2, 5, 2, 2});
  }

  SUBCASE("empty throws") {
    const BinarySilhouette sil(3, 3);
    CHECK_THROWS_AS(scanline_counts(sil, kUp), NoForeground);
  }
}

TEST_CASE("intensity_ramp") {
  SUBCASE("ten contiguous on-pixels: rank 5 -> 128, rank 10 -> 255") {
    const GrayImage ramp = intensity_ramp(vertical_bar(10), kUp);
    // Wrist is down, so rank 1 sits at row 9 and rank 10 at row 0.
    CHECK(ramp.at(5, 0) == 128);  // rank 5: round(5*255/10) = round(127.5)
    CHECK(ramp.at(0, 0) == 255);
    CHECK(ramp.at(9, 0) == 26);  // rank 1: round(25.5)
  }

  SUBCASE("single on-pixel gets 255") {
    BinarySilhouette sil(1, 1);
    sil.at(0, 0) = 1;
    CHECK(intensity_ramp(sil, kUp).at(0, 0) == 255);
  }

  SUBCASE("gap in the scanline: ranks skip the hole") {
    // Column with on-pixels at rows 0 and 2: c = 2; the far (finger-side)
    // pixel still reaches 255.
    BinarySilhouette sil(1, 3);
    sil.at(0, 0) = 1;
    sil.at(2, 0) = 1;
    const GrayImage ramp = intensity_ramp(sil, kUp);
    CHECK(ramp.at(2, 0) == 128);
    CHECK(ramp.at(1, 0) == 0);
    CHECK(ramp.at(0, 0) == 255);
  }

  SUBCASE("per-scanline max is 255 and min is round(255/c)") {
    const BinarySilhouette sil = two_finger_comb();
    const GrayImage ramp = intensity_ramp(sil, kUp);
    const auto counts = scanline_counts(sil, kUp);
    for (int c = 0; c < sil.width; ++c) {
      if (counts.counts[c] == 0) continue;
      int maxv = 0, minv = 256;
      for (int r = 0; r < sil.height; ++r) {
        if (!sil.at(r, c)) {
          CHECK(ramp.at(r, c) == 0);
          continue;
        }
        maxv = std::max(maxv, static_cast<int>(ramp.at(r, c)));
        minv = std::min(minv, static_cast<int>(ramp.at(r, c)));
      }
      CHECK(maxv == 255);
      CHECK(minv == std::lround(255.0 / counts.counts[c]));
      CHECK(minv >= 1);
    }
  }
}

TEST_CASE("finger_edges") {
  SUBCASE("vertical bar marks the finger end only") {
    const GrayImage ramp = intensity_ramp(vertical_bar(10), kUp);
    const FingerEdgeMap edges = finger_edges(ramp, kUp);
    CHECK(edges.at(0, 0) == 1);
    int marks = 0;
    for (auto b : edges.bits) marks += b;
    CHECK(marks == 1);
  }

  SUBCASE("flat top marks one pixel per column in the top row") {
    BinarySilhouette sil(3, 4);
    for (auto& b : sil.bits) b = 1;
    const FingerEdgeMap edges = finger_edges(intensity_ramp(sil, kUp), kUp);
    for (int c = 0; c < 3; ++c) CHECK(edges.at(0, c) == 1);
    int marks = 0;
    for (auto b : edges.bits) marks += b;
    CHECK(marks == 3);
  }

  SUBCASE("zero ramp yields an empty map") {
    const GrayImage ramp(4, 4);
    const FingerEdgeMap edges = finger_edges(ramp, kUp);
    for (auto b : edges.bits) CHECK(b == 0);
  }

  SUBCASE("scanlines past 510 pixels still get exactly one mark") {
    // round(rank*255/c) hits 255 for several ranks once c >= 510; the edge
    // map must keep only the extremal one.
    const BinarySilhouette sil = vertical_bar(600);
    const GrayImage ramp = intensity_ramp(sil, kUp);
    int at255 = 0;
    for (int r = 0; r < 600; ++r) at255 += ramp.at(r, 0) == 255 ? 1 : 0;
    CHECK(at255 > 1);
    const FingerEdgeMap edges = finger_edges(ramp, kUp);
    int marks = 0;
    for (auto b : edges.bits) marks += b;
    CHECK(marks == 1);
    CHECK(edges.at(0, 0) == 1);
  }
}

TEST_CASE("detect_fingertips") {
  const TipParams loose{1, 1, 0};  // diff 1, min_run 1, unbounded

  SUBCASE("two-finger comb isolates both tips") {
    const BinarySilhouette sil = two_finger_comb();
    const FingerEdgeMap edges = finger_edges(intensity_ramp(sil, kUp), kUp);
    const auto tips = detect_fingertips(edges, kUp, loose);
    REQUIRE(tips.size() == 2);
    CHECK(tips[0] == Fingertip{0, 1});
    CHECK(tips[1] == Fingertip{0, 5});
  }

  SUBCASE("single bar yields its finger end") {
    const BinarySilhouette sil = vertical_bar(10);
    const FingerEdgeMap edges = finger_edges(intensity_ramp(sil, kUp), kUp);
    const auto tips = detect_fingertips(edges, kUp, loose);
    REQUIRE(tips.size() == 1);
    CHECK(tips[0] == Fingertip{0, 0});
  }

  SUBCASE("flat-top rectangle reports one tip at the median scanline") {
    BinarySilhouette sil(7, 5);
    for (auto& b : sil.bits) b = 1;
    const FingerEdgeMap edges = finger_edges(intensity_ramp(sil, kUp), kUp);
    const auto tips = detect_fingertips(edges, kUp, loose);
    REQUIRE(tips.size() == 1);
    CHECK(tips[0] == Fingertip{0, 3});
  }

  SUBCASE("empty edge map yields no tips") {
    const FingerEdgeMap edges(4, 4);
    CHECK(detect_fingertips(edges, kUp, loose).empty());
  }

  SUBCASE("min_run filters one-scanline spikes") {
    const BinarySilhouette sil = two_finger_comb();
    const FingerEdgeMap edges = finger_edges(intensity_ramp(sil, kUp), kUp);
    const TipParams strict{1, 2, 0};  // fingers are 1 scanline wide here
    CHECK(detect_fingertips(edges, kUp, strict).empty());
  }

  SUBCASE("max_tips caps the output") {
    const BinarySilhouette sil = two_finger_comb();
    const FingerEdgeMap edges = finger_edges(intensity_ramp(sil, kUp), kUp);
    const TipParams capped{1, 1, 1};
    const auto tips = detect_fingertips(edges, kUp, capped);
    REQUIRE(tips.size() == 1);
    CHECK(tips[0] == Fingertip{0, 1});
  }

  SUBCASE("origin offset translates to frame coordinates") {
    const BinarySilhouette sil = two_finger_comb();
    const FingerEdgeMap edges = finger_edges(intensity_ramp(sil, kUp), kUp);
    const auto tips = detect_fingertips(edges, kUp, loose, 10, 20);
    REQUIRE(tips.size() == 2);
    CHECK(tips[0] == Fingertip{10, 21});
    CHECK(tips[1] == Fingertip{10, 25});
  }

  SUBCASE("horizontal hand, fingers pointing left") {
    // Transpose of the comb: rows 1 and 5 stretch to column 0 (finger
    // side), the rest only occupy columns 3..4.
    BinarySilhouette sil(6, 8);
    for (int c = 0; c <= 4; ++c) {
      sil.at(1, c) = 1;
      sil.at(5, c) = 1;
    }
    for (int r : {2, 3, 4, 6, 7})
      for (int c = 3; c <= 4; ++c) sil.at(r, c) = 1;
    const Orientation left = Orientation::from_wrist(Side::Right);
    const FingerEdgeMap edges = finger_edges(intensity_ramp(sil, left), left);
    const auto tips = detect_fingertips(edges, left, loose);
    REQUIRE(tips.size() == 2);
    CHECK(tips[0] == Fingertip{1, 0});
    CHECK(tips[1] == Fingertip{5, 0});
  }
}
