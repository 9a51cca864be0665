/*
 * Core domain types: player boxes, detection frames, tracks, angle labels.
 *
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace playpack {

// Dominant-motion vocabulary: eight 45-degree orientation labels measured
// counter-clockwise from the horizontal, plus 360 for frames whose flow
// magnitudes sit below the motion threshold.
enum class AngleLabel : int {
  deg0 = 0,
  deg45 = 45,
  deg90 = 90,
  deg135 = 135,
  deg180 = 180,
  deg225 = 225,
  deg270 = 270,
  deg315 = 315,
  low_motion = 360,
};

inline constexpr std::array<AngleLabel, 9> kAngleLabels = {
    AngleLabel::deg0,   AngleLabel::deg45,  AngleLabel::deg90,
    AngleLabel::deg135, AngleLabel::deg180, AngleLabel::deg225,
    AngleLabel::deg270, AngleLabel::deg315, AngleLabel::low_motion,
};

inline constexpr std::size_t kAngleBins = kAngleLabels.size();

constexpr int to_degrees(AngleLabel label) { return static_cast<int>(label); }

// Histogram bin index: orientation k -> k/45 for k in {0..315}, 360 -> 8.
constexpr std::size_t bin_index(AngleLabel label) {
  return label == AngleLabel::low_motion
             ? 8
             : static_cast<std::size_t>(to_degrees(label) / 45);
}

constexpr AngleLabel label_at_bin(std::size_t bin) { return kAngleLabels[bin]; }

std::optional<AngleLabel> try_label_from_degrees(int degrees);

// Throws ContractViolation if `degrees` is not one of the nine labels.
AngleLabel label_from_degrees(int degrees);

// Axis-aligned player box; (x, y) is the top-left corner. Coordinates are
// real-valued so interpolated boxes need no rounding until emission.
struct BoundingBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double area() const { return w * h; }
  double center_x() const { return x + w / 2.0; }
  double center_y() const { return y + h / 2.0; }
  bool contains(double px, double py) const {
    return px >= x && px <= x + w && py >= y && py <= y + h;
  }
  bool valid() const;

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct Detection {
  int player_id = 0;
  BoundingBox box;

  friend bool operator==(const Detection&, const Detection&) = default;
};

struct DetectionFrame {
  int frame = 0;
  std::vector<Detection> boxes;

  friend bool operator==(const DetectionFrame&, const DetectionFrame&) = default;
};

struct TrackObservation {
  int frame = 0;
  BoundingBox box;
  bool interpolated = false;

  friend bool operator==(const TrackObservation&, const TrackObservation&) = default;
};

// One player's box observations in strictly increasing frame order.
struct Track {
  int player_id = 0;
  std::vector<TrackObservation> observations;
};

// Intersection-over-union of two valid boxes, in [0, 1].
double iou(const BoundingBox& a, const BoundingBox& b);

// Drops boxes violating the detector-noise heuristics: a surviving box has
// h > w and w > min_width (both strict). Frames are kept even when all of
// their boxes are removed.
std::vector<DetectionFrame> prune_detections(std::vector<DetectionFrame> frames,
                                             double min_width = 5.0);

}  // namespace playpack
