/*
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "playpack/motion_features.hpp"

#include <cmath>
#include <limits>

#include "playpack/error.hpp"

namespace playpack {

bool HofHistogram::all_zero() const {
  for (double b : bins) {
    if (b != 0.0) return false;
  }
  return true;
}

void HofHistogram::l2_normalize() {
  double sq = 0.0;
  for (double b : bins) sq += b * b;
  if (sq == 0.0) return;
  const double inv = 1.0 / std::sqrt(sq);
  for (double& b : bins) b *= inv;
}

std::size_t orientation_bin(double angle_degrees) {
  double shifted = std::fmod(angle_degrees + 22.5, 360.0);
  if (shifted < 0.0) shifted += 360.0;
  auto bin = static_cast<std::size_t>(shifted / 45.0);
  return bin > 7 ? 7 : bin;  // guards the shifted == 360.0 rounding edge
}

std::map<int, std::vector<FlowSample>> assign_flows(
    const std::vector<FlowSample>& flows, const DetectionFrame& frame) {
  std::map<int, std::vector<FlowSample>> assigned;
  for (const FlowSample& sample : flows) {
    require(sample.frame == frame.frame,
            "flow samples must carry the frame's index");
    int best_id = -1;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (const Detection& det : frame.boxes) {
      if (!det.box.contains(sample.px, sample.py)) continue;
      const double dx = sample.px - det.box.center_x();
      const double dy = sample.py - det.box.center_y();
      const double d2 = dx * dx + dy * dy;
      if (d2 < best_d2 || (d2 == best_d2 && det.player_id < best_id)) {
        best_d2 = d2;
        best_id = det.player_id;
      }
    }
    if (best_id >= 0) assigned[best_id].push_back(sample);
  }
  return assigned;
}

HofHistogram player_hof(const std::vector<FlowSample>& samples,
                        double magnitude_threshold) {
  HofHistogram hist;
  for (const FlowSample& sample : samples) {
    if (sample.magnitude >= magnitude_threshold) {
      hist.bins[orientation_bin(sample.angle)] += sample.magnitude;
    } else {
      hist.bins[8] += 1.0;
    }
  }
  hist.l2_normalize();
  return hist;
}

AngleLabel frame_dominant_angle(const std::vector<HofHistogram>& histograms) {
  std::array<double, kAngleBins> sum{};
  for (const HofHistogram& hist : histograms) {
    for (std::size_t i = 0; i < kAngleBins; ++i) sum[i] += hist.bins[i];
  }
  std::size_t best = 0;
  double best_mass = sum[0];
  for (std::size_t i = 1; i < kAngleBins; ++i) {
    if (sum[i] > best_mass) {
      best_mass = sum[i];
      best = i;
    }
  }
  if (best_mass <= 0.0) return AngleLabel::low_motion;
  return label_at_bin(best);
}

AngleSeries build_angle_series(const std::vector<DetectionFrame>& frames,
                               const std::vector<FlowSample>& flows,
                               double magnitude_threshold) {
  AngleSeries series;
  if (frames.empty()) {
    require(flows.empty(), "flow sample references a frame outside the range");
    return series;
  }
  series.start_frame = frames.front().frame;
  const int frame_count = static_cast<int>(frames.size());
  for (int i = 0; i < frame_count; ++i) {
    require(frames[static_cast<std::size_t>(i)].frame == series.start_frame + i,
            "detection frames must cover a contiguous index range");
  }

  std::vector<std::vector<FlowSample>> by_frame(frames.size());
  for (const FlowSample& sample : flows) {
    const int offset = sample.frame - series.start_frame;
    require(offset >= 0 && offset < frame_count,
            "flow sample references a frame outside the range");
    by_frame[static_cast<std::size_t>(offset)].push_back(sample);
  }

  series.labels.reserve(frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto assigned = assign_flows(by_frame[i], frames[i]);
    std::vector<HofHistogram> histograms;
    histograms.reserve(assigned.size());
    for (const auto& [player_id, samples] : assigned) {
      histograms.push_back(player_hof(samples, magnitude_threshold));
    }
    series.labels.push_back(frame_dominant_angle(histograms));
  }
  return series;
}

}  // namespace playpack
