#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tipdetect/fingertip.hpp"
#include "tipdetect/image.hpp"
#include "tipdetect/orientation.hpp"

namespace tipdetect {

// Synthetic hand frames: skin-colored forearm + palm + rectangular fingers
// on a blue background, with optional salt/pepper noise. The geometry keeps
// the wrist-edge scanline strictly the widest so orientation is tie-free,
// fingers at least 14 px wide with gaps of 8+ px, and one uniquely tallest
// finger.
struct HandSpec {
  int width = 640;
  int height = 480;
  int fingers = 3;               // 0..8
  Side finger_side = Side::Up;   // direction the fingers point
  double noise = 0.0;            // per-pixel salt/pepper probability
  std::uint32_t seed = 1234;
};

struct SyntheticHand {
  RgbImage frame;
  Side wrist_side = Side::Down;
  Side finger_side = Side::Up;
  std::vector<Fingertip> tips;  // ground truth, frame coordinates
  int forearm_scanlines = 0;    // forearm extent along the hand axis
};

SyntheticHand generate_hand(const HandSpec& spec);

// Canonical generator colors (also what gen-produced frames use).
inline constexpr std::uint8_t kSkinColor[3] = {224, 160, 128};
inline constexpr std::uint8_t kBackgroundColor[3] = {40, 60, 200};

// Quarter-turn clockwise: pixel (r, c) of an H-tall image moves to
// (c, H - 1 - r). Sides follow Up -> Right -> Down -> Left.
RgbImage rotate90cw(const RgbImage& img);
BinarySilhouette rotate90cw(const BinarySilhouette& sil);
Side rotate90cw(Side s);
Fingertip rotate90cw(const Fingertip& tip, int src_height);

}  // namespace tipdetect
