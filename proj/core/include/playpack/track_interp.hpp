/*
 * Track gap detection and linear box interpolation.
 *
 * A detector can miss a player for a handful of frames. The gap is bridged
 * by linearly blending the bracketing box positions and reusing the mode of
 * the nearby widths/heights, but only for gaps no longer than the configured
 * neighborhood; longer extrapolation produces false boxes.
 *
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <utility>
#include <vector>

#include "playpack/types.hpp"

namespace playpack {

// A hole in a player track: frames strictly between `before` and `after`
// carry no observation. `missing` is empty for the diagnostic case of two
// adjacent frames whose boxes barely overlap.
struct Gap {
  int player_id = 0;
  int before = 0;
  int after = 0;
  std::vector<int> missing;
};

// Reports a Gap for every consecutive observation pair that either skips
// frame indices or sits on adjacent frames with iou < iou_threshold (the
// latter with an empty missing list; nothing can be inserted there).
// Tracks with fewer than two observations yield no gaps.
std::vector<Gap> detect_gaps(const Track& track, double iou_threshold = 0.25);

// Affine blend weights (w_prev, w_next) for frame t_mid strictly between
// t_prev and t_next; they always sum to 1.
std::pair<double, double> interpolation_weights(int t_prev, int t_next, int t_mid);

// Linear interpolation of the box position at t_mid; width and height are
// replaced by the supplied modes and the observation is flagged interpolated.
TrackObservation interpolate_box(const BoundingBox& prev_box, int t_prev,
                                 const BoundingBox& next_box, int t_next,
                                 int t_mid, double mode_width, double mode_height);

// Fills every gap of at most `neighborhood` missing frames (neighborhood must
// be 3, 5, 7 or 9). The width/height modes are taken over up to `neighborhood`
// non-interpolated observations on each side of the gap, ties broken toward
// the smaller value. Longer gaps are left untouched, as are all original
// observations.
Track fill_track(const Track& track, int neighborhood = 3);

// Groups per-frame detections into per-player tracks (sorted by player id).
std::vector<Track> tracks_from_frames(const std::vector<DetectionFrame>& frames);

// Scatters track observations back into dense frames covering
// [frame_begin, frame_end); boxes within a frame are ordered by player id.
std::vector<DetectionFrame> frames_from_tracks(const std::vector<Track>& tracks,
                                               int frame_begin, int frame_end);

}  // namespace playpack
