/*
 * Flow-to-player assignment, per-player orientation histograms and the
 * per-frame dominant motion angle series.
 *
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <array>
#include <map>
#include <vector>

#include "playpack/types.hpp"

namespace playpack {

// One motion vector sampled at a frame position. Angles are degrees
// counter-clockwise from the horizontal, normalized to [0, 360).
struct FlowSample {
  int frame = 0;
  double px = 0.0;
  double py = 0.0;
  double angle = 0.0;
  double magnitude = 0.0;

  friend bool operator==(const FlowSample&, const FlowSample&) = default;
};

// Nine-bin histogram of flow: eight orientation bins centered at
// 0,45,...,315 degrees (half-open 45-degree intervals, magnitude-weighted)
// plus a count-weighted bin for samples below the magnitude threshold,
// reported under label 360.
struct HofHistogram {
  std::array<double, kAngleBins> bins{};

  bool all_zero() const;
  // Scales to unit Euclidean norm; an all-zero histogram stays all-zero.
  void l2_normalize();
};

// Per-frame dominant-motion-angle labels over a contiguous frame range.
struct AngleSeries {
  int start_frame = 0;
  std::vector<AngleLabel> labels;

  std::size_t size() const { return labels.size(); }
  bool empty() const { return labels.empty(); }

  friend bool operator==(const AngleSeries&, const AngleSeries&) = default;
};

// Orientation bin (0..7) covering `angle_degrees`; bin k spans
// [45k - 22.5, 45k + 22.5) modulo 360.
std::size_t orientation_bin(double angle_degrees);

// Assigns each sample to the player whose box contains its position
// (box edges inclusive). A sample inside several boxes goes to the box with
// the nearest center, ties to the smaller player id; samples inside no box
// are dropped. All samples must carry the frame's index.
std::map<int, std::vector<FlowSample>> assign_flows(
    const std::vector<FlowSample>& flows, const DetectionFrame& frame);

// Histogram of one player's samples: magnitudes >= threshold weight their
// orientation bin, the rest count into the low-magnitude bin; the result is
// L2-normalized.
HofHistogram player_hof(const std::vector<FlowSample>& samples,
                        double magnitude_threshold);

// Label of the argmax bin of the summed per-player histograms; ties go to the
// smaller label, and an empty or all-zero sum yields the low-motion label.
AngleLabel frame_dominant_angle(const std::vector<HofHistogram>& histograms);

// Runs assign -> histogram -> dominant over every frame. Frames must cover a
// contiguous index range; flow samples outside that range are rejected.
AngleSeries build_angle_series(const std::vector<DetectionFrame>& frames,
                               const std::vector<FlowSample>& flows,
                               double magnitude_threshold);

}  // namespace playpack
