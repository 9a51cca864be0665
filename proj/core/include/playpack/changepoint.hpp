/*
 * Bayesian online change-point segmentation of the angle series.
 *
 * The label stream is modeled as piecewise-iid categorical draws over the
 * nine angle labels with a symmetric Dirichlet prior and a constant segment
 * hazard. The run-length posterior is maintained exactly in log space; a
 * change point is declared when the MAP run length collapses to less than
 * half of its predecessor.
 *
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <span>
#include <vector>

#include "playpack/motion_features.hpp"
#include "playpack/types.hpp"

namespace playpack {

// A contiguous play: frames [start_frame, end_frame) sharing one dominant
// motion label. Consecutive segments tile the series without gaps.
struct EventSegment {
  int start_frame = 0;
  int end_frame = 0;
  AngleLabel label = AngleLabel::low_motion;

  int duration_frames() const { return end_frame - start_frame; }

  friend bool operator==(const EventSegment&, const EventSegment&) = default;
};

struct CpdConfig {
  // Expected segment length in frames; the hazard is its reciprocal.
  double hazard_lambda = 250.0;
  // Symmetric Dirichlet concentration per label category.
  double dirichlet_alpha = 1.0;
  // Declared points closer than this to the previous accepted point (or to
  // the series start) are suppressed.
  int min_segment_frames = 15;

  void validate() const;
};

// Online detector; feed labels one at a time with observe().
class ChangepointDetector {
 public:
  explicit ChangepointDetector(CpdConfig cfg);

  void observe(AngleLabel label);

  // Number of labels observed so far.
  int steps() const { return static_cast<int>(history_.size()); }

  // MAP run length after the latest observation.
  int map_run_length() const { return map_run_length_; }

  // Normalized run-length posterior after the latest observation; entry r is
  // the probability that the current run covers the last r observations.
  std::vector<double> posterior() const;

  // Accepted change-point indices so far, strictly increasing, each in
  // (0, steps()).
  const std::vector<int>& changepoints() const { return changepoints_; }

 private:
  double log_predictive(int run_length, std::size_t bin) const;

  CpdConfig cfg_;
  double log_hazard_;
  double log_one_minus_hazard_;
  std::vector<std::uint8_t> history_;                 // observed bin per step
  std::vector<std::array<int, kAngleBins>> prefix_;   // cumulative bin counts
  std::vector<double> log_weights_;                   // indexed by run length
  std::vector<double> scratch_;
  int map_run_length_ = 0;
  int prev_map_run_length_ = 0;
  int prev_accepted_ = 0;
  std::vector<int> changepoints_;
};

// Runs the detector over a whole series and returns the accepted change
// points as offsets into the series, strictly increasing, all in (0, len).
std::vector<int> detect_changepoints(const AngleSeries& series,
                                     const CpdConfig& cfg = {});

// Cuts the series at the given offsets. Segments tile the full range; each
// carries the mode of its labels (ties toward the smaller label) and absolute
// frame indices (series.start_frame + offset).
std::vector<EventSegment> segment_series(const AngleSeries& series,
                                         const std::vector<int>& changepoints);

}  // namespace playpack
