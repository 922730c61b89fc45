#include "tipdetect/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tipdetect {

RgbImage rotate90cw(const RgbImage& img) {
  RgbImage out(img.height, img.width);
  for (int r = 0; r < img.height; ++r)
    for (int c = 0; c < img.width; ++c) {
      const std::uint8_t* p = img.px(r, c);
      out.set(c, img.height - 1 - r, p[0], p[1], p[2]);
    }
  return out;
}

BinarySilhouette rotate90cw(const BinarySilhouette& sil) {
  BinarySilhouette out(sil.height, sil.width);
  for (int r = 0; r < sil.height; ++r)
    for (int c = 0; c < sil.width; ++c) out.at(c, sil.height - 1 - r) = sil.at(r, c);
  return out;
}

Side rotate90cw(Side s) {
  switch (s) {
    case Side::Up: return Side::Right;
    case Side::Right: return Side::Down;
    case Side::Down: return Side::Left;
    default: return Side::Up;
  }
}

Fingertip rotate90cw(const Fingertip& tip, int src_height) {
  return {tip.y, src_height - 1 - tip.x};
}

namespace {

int quarter_turns(Side finger_side) {
  switch (finger_side) {
    case Side::Up: return 0;
    case Side::Right: return 1;
    case Side::Down: return 2;
    default: return 3;
  }
}

}  // namespace

SyntheticHand generate_hand(const HandSpec& spec) {
  if (spec.fingers < 0 || spec.fingers > 8)
    throw std::invalid_argument("fingers must be in [0, 8]");
  if (spec.noise < 0.0 || spec.noise >= 1.0)
    throw std::invalid_argument("noise must be in [0, 1)");

  const int turns = quarter_turns(spec.finger_side);
  // Build in canonical orientation (fingers up) sized so the rotated frame
  // comes out at the requested dimensions.
  const int cw = (turns % 2 == 0) ? spec.width : spec.height;
  const int ch = (turns % 2 == 0) ? spec.height : spec.width;

  const double s = std::min(cw / 640.0, ch / 480.0);
  if (s < 0.25) throw std::invalid_argument("frame too small for hand geometry (min 160x120)");
  auto px = [&](double v) { return static_cast<int>(std::lround(v * s)); };

  std::mt19937 rng(spec.seed);
  auto rnd = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, std::max(lo, hi))(rng);
  };

  // Proportions keep orientation tie-free: the forearm scanline at the
  // wrist edge is strictly wider than the palm is tall and than any finger.
  const int forearm_len = rnd(static_cast<int>(0.30 * ch), static_cast<int>(0.45 * ch));
  const int palm_w = rnd(px(130), px(170));
  const int palm_h = rnd(px(70), px(85));
  const int forearm_w = rnd(px(96), px(112));

  const int palm_bottom = ch - forearm_len - 1;
  const int palm_top = palm_bottom - palm_h + 1;

  const int jitter = px(30);
  int palm_c0 = (cw - palm_w) / 2 + rnd(-jitter, jitter);
  palm_c0 = std::clamp(palm_c0, 2, cw - palm_w - 2);
  const int forearm_c0 = palm_c0 + (palm_w - forearm_w) / 2;

  // Finger layout: minimum widths/gaps, remaining palm width distributed
  // at random.
  const int n = spec.fingers;
  const int inset = std::max(2, px(4));
  const int min_gap = std::max(2, px(8));
  const int avail = palm_w - 2 * inset;
  int min_w = std::max(3, px(14));
  if (n > 0 && n * min_w + (n - 1) * min_gap > avail)
    min_w = (avail - (n - 1) * min_gap) / n;
  if (n > 0 && min_w < 3) throw std::invalid_argument("too many fingers for frame size");

  std::vector<int> widths(n, min_w);
  std::vector<int> gaps(std::max(0, n - 1), min_gap);
  if (n > 0) {
    int slack = avail - n * min_w - (n - 1) * min_gap;
    const int cap = px(12);
    for (int guard = 0; slack > 0 && guard < 10000; ++guard) {
      const int pick = rnd(0, n + static_cast<int>(gaps.size()) - 1);
      if (pick < n && widths[pick] < min_w + cap) {
        ++widths[pick];
        --slack;
      } else if (pick >= n && gaps[pick - n] < min_gap + cap) {
        ++gaps[pick - n];
        --slack;
      }
    }
  }

  const int max_height = std::min(px(88), palm_top - 2);
  std::vector<int> heights(n);
  for (int i = 0; i < n; ++i) heights[i] = rnd(px(40), max_height);
  if (n > 0) {
    // One uniquely tallest finger so the finger-side scanline stays thin.
    const int tallest = rnd(0, n - 1);
    heights[tallest] = std::min(*std::max_element(heights.begin(), heights.end()) + px(6),
                                palm_top - 1);
  }

  BinarySilhouette mask(cw, ch);
  auto fill_rect = [&](int r0, int r1, int c0, int c1) {
    for (int r = r0; r <= r1; ++r)
      for (int c = c0; c <= c1; ++c) mask.at(r, c) = 1;
  };
  fill_rect(palm_bottom + 1, ch - 1, forearm_c0, forearm_c0 + forearm_w - 1);
  fill_rect(palm_top, palm_bottom, palm_c0, palm_c0 + palm_w - 1);

  SyntheticHand hand;
  int fc = palm_c0 + inset;
  for (int i = 0; i < n; ++i) {
    fill_rect(palm_top - heights[i], palm_top - 1, fc, fc + widths[i] - 1);
    hand.tips.push_back({palm_top - heights[i], fc + (widths[i] - 1) / 2});
    fc += widths[i] + (i + 1 < n ? gaps[i] : 0);
  }

  RgbImage frame(cw, ch);
  std::bernoulli_distribution flip(spec.noise);
  for (int r = 0; r < ch; ++r) {
    for (int c = 0; c < cw; ++c) {
      bool skin = mask.at(r, c) != 0;
      if (spec.noise > 0.0 && flip(rng)) skin = !skin;
      const std::uint8_t* color = skin ? kSkinColor : kBackgroundColor;
      frame.set(r, c, color[0], color[1], color[2]);
    }
  }

  hand.wrist_side = Side::Down;
  hand.finger_side = Side::Up;
  hand.forearm_scanlines = forearm_len;
  for (int t = 0; t < turns; ++t) {
    const int src_height = frame.height;
    frame = rotate90cw(frame);
    for (Fingertip& tip : hand.tips) tip = rotate90cw(tip, src_height);
    hand.wrist_side = rotate90cw(hand.wrist_side);
    hand.finger_side = rotate90cw(hand.finger_side);
  }
  hand.frame = std::move(frame);
  return hand;
}

}  // namespace tipdetect
